#pragma once

#include <array>
#include <optional>
#include <string>

#include "hagge/linalg.hpp"

namespace hagge {

namespace detail {

// Scale a homogeneous triple so its first nonzero coordinate is 1. Unique
// representative per projective class, so equality is structural.
template <Field F>
Vec3<F> canonical_triple(Vec3<F> v, ErrorCode zero_error) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) { lead = i; break; }
  if (lead < 0) throw Error(zero_error, "homogeneous triple is zero");
  const F inv = v[lead].one() / v[lead];
  for (auto& e : v) e = e * inv;
  return v;
}

}  // namespace detail

/// Point of the projective plane, canonical homogeneous coordinates.
template <Field F>
class ProjPoint {
 public:
  explicit ProjPoint(Vec3<F> coords)
      : c_(detail::canonical_triple(std::move(coords), ErrorCode::ZeroVector)) {}
  ProjPoint(F x, F y, F z) : ProjPoint(Vec3<F>{std::move(x), std::move(y), std::move(z)}) {}

  static ProjPoint affine(const F& x, const F& y) { return ProjPoint(x, y, x.one()); }

  const Vec3<F>& coords() const { return c_; }
  const F& x() const { return c_[0]; }
  const F& y() const { return c_[1]; }
  const F& z() const { return c_[2]; }

  bool is_affine() const { return !c_[2].is_zero(); }
  // affine chart z = 1
  F affine_x() const { return c_[0] / c_[2]; }
  F affine_y() const { return c_[1] / c_[2]; }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(c_ == o.c_); }

  std::string str() const {
    return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
  }

 private:
  Vec3<F> c_;
};

/// Line a*x + b*y + c*z = 0, canonical homogeneous coefficients.
template <Field F>
class ProjLine {
 public:
  explicit ProjLine(Vec3<F> coeffs)
      : c_(detail::canonical_triple(std::move(coeffs), ErrorCode::ZeroVector)) {}
  ProjLine(F a, F b, F c) : ProjLine(Vec3<F>{std::move(a), std::move(b), std::move(c)}) {}

  const Vec3<F>& coeffs() const { return c_; }

  bool operator==(const ProjLine& o) const { return c_ == o.c_; }
  bool operator!=(const ProjLine& o) const { return !(c_ == o.c_); }

  std::string str() const {
    return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
  }

 private:
  Vec3<F> c_;
};

template <Field F>
bool incident(const ProjPoint<F>& p, const ProjLine<F>& l) {
  return dot(p.coords(), l.coeffs()).is_zero();
}

template <Field F>
ProjLine<F> join(const ProjPoint<F>& p, const ProjPoint<F>& q) {
  if (p == q) throw Error(ErrorCode::EqualPoints, p.str());
  return ProjLine<F>(cross(p.coords(), q.coords()));
}

template <Field F>
ProjPoint<F> meet(const ProjLine<F>& l, const ProjLine<F>& m) {
  if (l == m) throw Error(ErrorCode::EqualLines, l.str());
  return ProjPoint<F>(cross(l.coeffs(), m.coeffs()));
}

template <Field F>
bool are_collinear(const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
  return det3(p.coords(), q.coords(), r.coords()).is_zero();
}

template <Field F>
bool are_concurrent(const ProjLine<F>& l, const ProjLine<F>& m, const ProjLine<F>& n) {
  return det3(l.coeffs(), m.coeffs(), n.coeffs()).is_zero();
}

/// Point of the projective parameter line: (u:v), v = 0 marking infinity.
/// Canonical form is (t:1) or (1:0), so equality is structural. Cross-ratios
/// are returned as this type; (1:0) is the tagged infinite value.
template <Field F>
class ProjParam {
 public:
  ProjParam(F u, F v) {
    if (v.is_zero()) {
      if (u.is_zero()) throw Error(ErrorCode::ZeroVector, "parameter (0:0)");
      u_ = u.one();
      v_ = u.zero();
    } else {
      u_ = u / v;
      v_ = v.one();
    }
  }
  static ProjParam finite(const F& t) { return ProjParam(t, t.one()); }
  static ProjParam infinity(const F& like) { return ProjParam(like.one(), like.zero()); }

  const F& u() const { return u_; }
  const F& v() const { return v_; }
  bool is_infinity() const { return v_.is_zero(); }
  // finite value; caller must check is_infinity()
  const F& value() const {
    if (is_infinity()) throw Error(ErrorCode::DivisionByZero, "infinite parameter");
    return u_;
  }

  bool operator==(const ProjParam& o) const { return u_ == o.u_ && v_ == o.v_; }
  bool operator!=(const ProjParam& o) const { return !(*this == o); }

  std::string str() const { return is_infinity() ? "inf" : u_.str(); }

 private:
  F u_, v_;
};

// u_a * v_b - u_b * v_a; the homogeneous form of (a - b).
template <Field F>
F param_diff(const ProjParam<F>& a, const ProjParam<F>& b) {
  return a.u() * b.v() - b.u() * a.v();
}

/// Cross-ratio of four parameters with the convention
/// cr(a,b;c,d) = ((c-a)(d-b)) / ((c-b)(d-a)), extended projectively to
/// infinite parameters. Requires that no three of the four coincide.
template <Field F>
ProjParam<F> cross_ratio_params(const ProjParam<F>& a, const ProjParam<F>& b,
                                const ProjParam<F>& c, const ProjParam<F>& d) {
  const F num = param_diff(c, a) * param_diff(d, b);
  const F den = param_diff(c, b) * param_diff(d, a);
  if (num.is_zero() && den.is_zero())
    throw Error(ErrorCode::TooManyCoincident, "cross-ratio undefined");
  return ProjParam<F>(num, den);
}

/// Fixed affine frame on a line: parameter t maps to P0 + t*P1, infinity to
/// P1. The two base points are chosen deterministically from the line's
/// coefficients, so equal lines get equal frames.
template <Field F>
class LineParametrization {
 public:
  explicit LineParametrization(const ProjLine<F>& line) : line_(line), p0_(pick(line, 0)), p1_(pick(line, 1)) {}
  LineParametrization(const ProjLine<F>& line, ProjPoint<F> origin, ProjPoint<F> direction)
      : line_(line), p0_(std::move(origin)), p1_(std::move(direction)) {
    if (!incident(p0_, line_) || !incident(p1_, line_) || p0_ == p1_)
      throw Error(ErrorCode::PointNotOnLine, "bad line frame");
  }

  const ProjLine<F>& line() const { return line_; }
  const ProjPoint<F>& origin() const { return p0_; }
  const ProjPoint<F>& direction() const { return p1_; }

  ProjPoint<F> point_of_param(const ProjParam<F>& t) const {
    // (u:v) -> v*P0 + u*P1
    return ProjPoint<F>(add(scale(p0_.coords(), t.v()), scale(p1_.coords(), t.u())));
  }

  ProjParam<F> param_of_point(const ProjPoint<F>& p) const {
    if (!incident(p, line_)) throw Error(ErrorCode::PointNotOnLine, p.str());
    const auto [alpha, beta] = coords_in_basis(p.coords(), p0_.coords(), p1_.coords());
    return ProjParam<F>(beta, alpha);
  }

  // coordinates of w in the basis (b0, b1): w ~ alpha*b0 + beta*b1
  static std::pair<F, F> coords_in_basis(const Vec3<F>& w, const Vec3<F>& b0, const Vec3<F>& b1) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const F d = b0[i] * b1[j] - b0[j] * b1[i];
        if (d.is_zero()) continue;
        const F alpha = (w[i] * b1[j] - w[j] * b1[i]) / d;
        const F beta = (b0[i] * w[j] - b0[j] * w[i]) / d;
        return {alpha, beta};
      }
    }
    throw Error(ErrorCode::ZeroVector, "degenerate line basis");
  }

 private:
  static ProjPoint<F> pick(const ProjLine<F>& line, int which) {
    // Points on the line arise as cross products of its coefficient vector
    // with the standard basis; at least two of the three are independent.
    const F one = line.coeffs()[0].is_zero() && line.coeffs()[1].is_zero()
                      ? line.coeffs()[2].one()
                      : (line.coeffs()[0].is_zero() ? line.coeffs()[1].one() : line.coeffs()[0].one());
    const F zero = one.zero();
    std::array<Vec3<F>, 3> basis = {Vec3<F>{one, zero, zero}, Vec3<F>{zero, one, zero}, Vec3<F>{zero, zero, one}};
    std::optional<ProjPoint<F>> first;
    for (const auto& e : basis) {
      Vec3<F> c = cross(line.coeffs(), e);
      if (is_zero_vec(c)) continue;
      ProjPoint<F> p{std::move(c)};
      if (!first) {
        if (which == 0) return p;
        first = p;
        continue;
      }
      if (p != *first) return p;
    }
    throw Error(ErrorCode::ZeroVector, "degenerate line");
  }

  ProjLine<F> line_;
  ProjPoint<F> p0_, p1_;
};

/// First n points of the line (in frame order t = 0, 1, 2, ..., then the
/// frame's direction point) passing the given filter. Over GF(p) the supply
/// is p + 1 points; runs out with an error.
template <Field F, class Pred>
std::vector<ProjPoint<F>> sample_line_points(const ProjLine<F>& l, std::size_t n, Pred&& keep) {
  const LineParametrization<F> frame(l);
  const F one = l.coeffs()[0].is_zero() ? (l.coeffs()[1].is_zero() ? l.coeffs()[2].one()
                                                                   : l.coeffs()[1].one())
                                        : l.coeffs()[0].one();
  std::vector<ProjPoint<F>> out;
  std::vector<ProjPoint<F>> seen;
  for (long long k = 0;; ++k) {
    ProjPoint<F> p = frame.point_of_param(ProjParam<F>::finite(one.from_int(k)));
    bool fresh = true;
    for (const auto& s : seen)
      if (s == p) { fresh = false; break; }  // finite field wrapped around
    if (!fresh) break;
    seen.push_back(p);
    if (keep(p)) out.push_back(p);
    if (out.size() == n) return out;
  }
  ProjPoint<F> dir = frame.direction();
  if (keep(dir)) out.push_back(dir);
  if (out.size() == n) return out;
  throw Error(ErrorCode::ExhaustedAttempts, "line has too few admissible points");
}

// parameter of p in the pencil basis (b0, b1): p ~ alpha*b0 + beta*b1 -> (beta:alpha)
template <Field F>
ProjParam<F> to_param(const ProjPoint<F>& p, const ProjPoint<F>& b0, const ProjPoint<F>& b1) {
  const auto [alpha, beta] =
      LineParametrization<F>::coords_in_basis(p.coords(), b0.coords(), b1.coords());
  return ProjParam<F>(beta, alpha);
}

/// Cross-ratio of four collinear points, at most two coincident.
template <Field F>
ProjParam<F> cross_ratio(const ProjPoint<F>& p1, const ProjPoint<F>& p2,
                         const ProjPoint<F>& p3, const ProjPoint<F>& p4) {
  const std::array<const ProjPoint<F>*, 4> pts = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i) {
    int dup = 1;
    for (int j = 0; j < 4; ++j)
      if (j != i && *pts[j] == *pts[i]) ++dup;
    if (dup >= 3) throw Error(ErrorCode::TooManyCoincident, pts[i]->str());
  }
  // basis: p1 and the first point distinct from it
  const ProjPoint<F>* b0 = &p1;
  const ProjPoint<F>* b1 = nullptr;
  for (int i = 1; i < 4; ++i)
    if (*pts[i] != *b0) { b1 = pts[i]; break; }
  if (b1 == nullptr) throw Error(ErrorCode::TooManyCoincident, "all four coincide");
  for (const auto* p : pts)
    if (!are_collinear(*b0, *b1, *p)) throw Error(ErrorCode::NotCollinear, p->str());

  std::array<ProjParam<F>, 4> t = {
      to_param(*pts[0], *b0, *b1), to_param(*pts[1], *b0, *b1),
      to_param(*pts[2], *b0, *b1), to_param(*pts[3], *b0, *b1)};
  return cross_ratio_params(t[0], t[1], t[2], t[3]);
}

}  // namespace hagge
