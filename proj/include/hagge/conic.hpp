#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>

#include "hagge/projective.hpp"

namespace hagge {

/// Conic as a symmetric 3x3 form up to scale, canonicalized like coordinate
/// triples (first nonzero entry scaled to 1). The exact rank is computed at
/// construction: rank 3 is a proper conic, rank <= 2 a line pair or double
/// line. P lies on the conic iff P^T M P = 0, exactly.
template <Field F>
class Conic {
 public:
  static Conic from_upper(F a00, F a01, F a02, F a11, F a12, F a22) {
    Mat3<F> m{{a00, a01, a02, a01, a11, a12, a02, a12, a22}};
    return Conic(std::move(m));
  }

  static Conic from_matrix(const Mat3<F>& m) {
    if (!(m.at(0, 1) == m.at(1, 0)) || !(m.at(0, 2) == m.at(2, 0)) || !(m.at(1, 2) == m.at(2, 1)))
      throw Error(ErrorCode::DegenerateConic, "matrix not symmetric");
    return Conic(m);
  }

  const Mat3<F>& matrix() const { return m_; }
  int rank() const { return rank_; }
  bool is_degenerate() const { return rank_ < 3; }

  F eval(const ProjPoint<F>& p) const { return dot(p.coords(), mul(m_, p.coords())); }
  bool contains(const ProjPoint<F>& p) const { return eval(p).is_zero(); }

  // bilinear polarization <p, q> = p^T M q
  F pair(const ProjPoint<F>& p, const ProjPoint<F>& q) const {
    return dot(p.coords(), mul(m_, q.coords()));
  }

  // Canonical circles have matrix diag-block [[1,0],[0,1]] up to the shared
  // scale, i.e. x^2 + y^2 + d*xz + e*yz + f*z^2 after normalization.
  bool is_circle() const {
    return m_.at(0, 1).is_zero() && m_.at(0, 0) == m_.at(1, 1) && !m_.at(0, 0).is_zero();
  }

  bool operator==(const Conic& o) const { return m_ == o.m_; }
  bool operator!=(const Conic& o) const { return !(m_ == o.m_); }

 private:
  explicit Conic(Mat3<F> m) : m_(canonical(std::move(m))) {
    rank_ = static_cast<int>(hagge::rank(m_));
  }

  static Mat3<F> canonical(Mat3<F> m) {
    int lead = -1;
    for (int i = 0; i < 9 && lead < 0; ++i)
      if (!m.a[i].is_zero()) lead = i;
    if (lead < 0) throw Error(ErrorCode::ZeroVector, "zero conic matrix");
    const F inv = m.a[lead].one() / m.a[lead];
    for (auto& e : m.a) e = e * inv;
    return m;
  }

  Mat3<F> m_;
  int rank_;
};

/// Unique non-degenerate conic through five points, via the kernel of the
/// 5x6 incidence system on the symmetric-matrix entries.
template <Field F>
Conic<F> conic_through_five(const std::array<ProjPoint<F>, 5>& pts) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) throw Error(ErrorCode::DuplicatePoints, pts[i].str());

  std::vector<std::vector<F>> rows;
  const F two = pts[0].coords()[0].from_int(2);
  for (const auto& p : pts) {
    const auto& c = p.coords();
    // unknowns (m00, m11, m22, m01, m02, m12)
    rows.push_back({c[0] * c[0], c[1] * c[1], c[2] * c[2],
                    two * c[0] * c[1], two * c[0] * c[2], two * c[1] * c[2]});
  }
  auto basis = kernel_basis(std::move(rows));
  if (basis.size() != 1)
    throw Error(ErrorCode::DegeneratePosition, "five points do not determine a conic");
  const auto& k = basis[0];
  Conic<F> c = Conic<F>::from_upper(k[0], k[3], k[4], k[1], k[5], k[2]);
  if (c.is_degenerate())
    throw Error(ErrorCode::DegeneratePosition, "five points lie on a degenerate conic");
  return c;
}

/// Circle through three affinely distinct, non-collinear points; rationals
/// only. The quadratic part is pinned to x^2 + y^2, which is what makes the
/// curve a circle in the affine chart z = 1.
template <Field F>
Conic<F> circle_through_three(const ProjPoint<F>& a, const ProjPoint<F>& b, const ProjPoint<F>& c) {
  if constexpr (!FieldTraits<F>::is_rational) {
    throw Error(ErrorCode::WrongField, "circles exist over the rationals only");
  } else {
    for (const auto* p : {&a, &b, &c})
      if (!p->is_affine()) throw Error(ErrorCode::PointAtInfinity, p->str());
    if (a == b || b == c || a == c) throw Error(ErrorCode::DuplicatePoints, "");
    if (are_collinear(a, b, c)) throw Error(ErrorCode::CollinearInput, "");

    // x^2 + y^2 + d*x + e*y + f = 0 at the three affine points
    std::array<F, 3> xs = {a.affine_x(), b.affine_x(), c.affine_x()};
    std::array<F, 3> ys = {a.affine_y(), b.affine_y(), c.affine_y()};
    const F one = xs[0].one();
    Mat3<F> m = Mat3<F>::from_rows({xs[0], ys[0], one}, {xs[1], ys[1], one}, {xs[2], ys[2], one});
    Vec3<F> rhs = {-(xs[0] * xs[0] + ys[0] * ys[0]),
                   -(xs[1] * xs[1] + ys[1] * ys[1]),
                   -(xs[2] * xs[2] + ys[2] * ys[2])};
    const F dt = det(m);
    Vec3<F> def = scale(mul(adjugate(m), rhs), one / dt);
    const F half = one / one.from_int(2);
    return Conic<F>::from_upper(one, one.zero(), def[0] * half, one, def[1] * half, def[2]);
  }
}

template <Field F>
ProjLine<F> polar(const Conic<F>& c, const ProjPoint<F>& p) {
  if (c.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "polar of degenerate conic");
  return ProjLine<F>(mul(c.matrix(), p.coords()));
}

template <Field F>
ProjPoint<F> pole(const Conic<F>& c, const ProjLine<F>& l) {
  if (c.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "pole of degenerate conic");
  return ProjPoint<F>(mul(adjugate(c.matrix()), l.coeffs()));
}

// tangent to a non-degenerate conic at a point of it
template <Field F>
ProjLine<F> tangent_at(const Conic<F>& c, const ProjPoint<F>& p) {
  if (!c.contains(p)) throw Error(ErrorCode::PointNotOnConic, p.str());
  return polar(c, p);
}

template <Field F>
struct SecondIntersection {
  ProjPoint<F> point;
  bool tangent = false;  // line touches the conic at the known point
};

/// Second point of conic ∩ line given one point P of it on the line. With
/// Q any other point of the line, the restriction of the form to s*P + t*Q
/// is t * (2s<P,Q> + t<Q,Q>), so the known root splits off and the other
/// root is rational: (s:t) = (<Q,Q> : -2<P,Q>). Tangency (<P,Q> = 0) is a
/// flagged success returning P itself.
template <Field F>
SecondIntersection<F> second_intersection(const Conic<F>& c, const ProjLine<F>& l,
                                          const ProjPoint<F>& p) {
  if (c.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "");
  if (!c.contains(p)) throw Error(ErrorCode::PointNotOnConic, p.str());
  if (!incident(p, l)) throw Error(ErrorCode::PointNotOnLine, p.str());

  const LineParametrization<F> frame(l);
  ProjPoint<F> q = frame.origin() == p ? frame.direction() : frame.origin();
  const F pq = c.pair(p, q);
  if (pq.is_zero()) return {p, true};
  const F qq = c.pair(q, q);
  const F two = pq.from_int(2);
  // s = <Q,Q>, t = -2<P,Q>
  Vec3<F> coords = add(scale(p.coords(), qq), scale(q.coords(), -(two * pq)));
  return {ProjPoint<F>(std::move(coords)), false};
}

/// Line of equal powers of two distinct circles; contains their common
/// points. The difference of the two canonical forms drops the quadratic
/// part, leaving z times this line.
template <Field F>
ProjLine<F> radical_axis(const Conic<F>& c1, const Conic<F>& c2) {
  if (!c1.is_circle() || !c2.is_circle()) throw Error(ErrorCode::DegenerateConic, "not circles");
  if (c1 == c2) throw Error(ErrorCode::IdenticalConics, "");
  const auto& p = c1.matrix();
  const auto& q = c2.matrix();
  const F two = p.at(0, 0).from_int(2);
  return ProjLine<F>(two * (p.at(0, 2) - q.at(0, 2)),
                     two * (p.at(1, 2) - q.at(1, 2)),
                     p.at(2, 2) - q.at(2, 2));
}

/// The second common point of two circles through D. This is the pencil
/// construction specialized to circles: the degenerate member splitting off
/// the line at infinity leaves the radical axis, which passes through both
/// common points.
template <Field F>
SecondIntersection<F> second_common_point_of_circles(const Conic<F>& c1, const Conic<F>& c2,
                                                     const ProjPoint<F>& d) {
  if (!c1.contains(d) || !c2.contains(d)) throw Error(ErrorCode::NotCommonPoints, d.str());
  const ProjLine<F> axis = radical_axis(c1, c2);
  return second_intersection(c1, axis, d);
}

/// Fourth common point of two non-degenerate conics sharing the distinct
/// common points P1, P2, P3. The pencil member vanishing at a third point
/// of line(P1,P2) contains that whole line and therefore splits as
/// line(P1,P2) ∪ l; the fourth point is the second intersection of l with
/// either conic at P3. Everything stays in the base field.
template <Field F>
ProjPoint<F> fourth_intersection(const Conic<F>& c1, const Conic<F>& c2,
                                 const ProjPoint<F>& p1, const ProjPoint<F>& p2,
                                 const ProjPoint<F>& p3) {
  if (c1 == c2) throw Error(ErrorCode::IdenticalConics, "");
  if (c1.is_degenerate() || c2.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "");
  if (p1 == p2 || p2 == p3 || p1 == p3) throw Error(ErrorCode::DuplicatePoints, "");
  for (const auto* p : {&p1, &p2, &p3})
    if (!c1.contains(*p) || !c2.contains(*p)) throw Error(ErrorCode::NotCommonPoints, p->str());

  const ProjLine<F> g = join(p1, p2);
  // third point of g: P1 + P2 is never proportional to either
  const ProjPoint<F> r(add(p1.coords(), p2.coords()));
  const F q1 = c1.eval(r);
  const F q2 = c2.eval(r);
  // q1, q2 cannot both vanish: a line meets a proper conic in at most two points
  const Mat3<F> member = sub(scale(c1.matrix(), q2), scale(c2.matrix(), q1));

  // split member = g * h: with any v off g, h ~ 2(g.v) M v - (v^T M v) g
  const F zero = q1.zero();
  const F one = q1.one();
  std::array<Vec3<F>, 3> basis = {Vec3<F>{one, zero, zero}, Vec3<F>{zero, one, zero}, Vec3<F>{zero, zero, one}};
  std::optional<ProjLine<F>> other;
  for (const auto& v : basis) {
    const F gv = dot(g.coeffs(), v);
    if (gv.is_zero()) continue;
    const Vec3<F> mv = mul(member, v);
    const F vmv = dot(v, mv);
    const F two = one.from_int(2);
    Vec3<F> h = sub(scale(mv, two * gv), scale(g.coeffs(), vmv));
    if (is_zero_vec(h)) throw Error(ErrorCode::DegenerateConic, "pencil member is a double line");
    other = ProjLine<F>(std::move(h));
    break;
  }
  if (!other) throw Error(ErrorCode::DegenerateConic, "degenerate pencil split");

  const SecondIntersection<F> s = second_intersection(c1, *other, p3);
  if (s.tangent || s.point == p1 || s.point == p2)
    throw Error(ErrorCode::TangentialContact, "fourth point coincides with a base point");
  return s.point;
}

/// Rational parametrization of a non-degenerate conic from a base point on
/// it: the parameter indexes the pencil of lines at the base point, and t
/// maps to the second intersection of that line with the conic. The base
/// point itself sits at the parameter of the tangent direction. Changing
/// the base point changes parameters by a Moebius map only.
template <Field F>
class ConicParametrization {
 public:
  ConicParametrization(const Conic<F>& conic, const ProjPoint<F>& base)
      : conic_(conic),
        base_(base),
        l1_(tangent_at(conic, base)),
        l0_(pick_other(base, l1_)) {}

  const Conic<F>& conic() const { return conic_; }
  const ProjPoint<F>& base() const { return base_; }

  // The parameter-infinity line is the tangent at the base point, so the
  // base sits at t = inf; for the unit circle with base (-1,0) the finite
  // parameter is the classical slope t with image
  // ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  ProjPoint<F> point_of_param(const ProjParam<F>& t) const {
    const ProjLine<F> m(sub(scale(l0_.coeffs(), t.v()), scale(l1_.coeffs(), t.u())));
    return second_intersection(conic_, m, base_).point;
  }

  ProjParam<F> param_of_point(const ProjPoint<F>& p) const {
    if (!conic_.contains(p)) throw Error(ErrorCode::PointNotOnConic, p.str());
    const ProjLine<F> m = (p == base_) ? l1_ : join(base_, p);
    const auto [alpha, beta] =
        LineParametrization<F>::coords_in_basis(m.coeffs(), l0_.coeffs(), l1_.coeffs());
    return ProjParam<F>(-beta, alpha);
  }

 private:
  static ProjLine<F> pick_other(const ProjPoint<F>& base, const ProjLine<F>& avoid) {
    // lines through base = cross products of its coordinates with the basis
    const F one = base.coords()[0].one();
    const F zero = one.zero();
    std::array<Vec3<F>, 3> basis = {Vec3<F>{one, zero, zero}, Vec3<F>{zero, one, zero}, Vec3<F>{zero, zero, one}};
    for (const auto& e : basis) {
      Vec3<F> c = cross(base.coords(), e);
      if (is_zero_vec(c)) continue;
      ProjLine<F> l{std::move(c)};
      if (l != avoid) return l;
    }
    throw Error(ErrorCode::ZeroVector, "degenerate base point");
  }

  Conic<F> conic_;
  ProjPoint<F> base_;
  ProjLine<F> l1_, l0_;
};

template <Field F>
ConicParametrization<F> parametrize(const Conic<F>& c, const ProjPoint<F>& base) {
  return ConicParametrization<F>(c, base);
}

}  // namespace hagge
