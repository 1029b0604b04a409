#pragma once

#include <array>
#include <optional>
#include <variant>

#include "hagge/conic.hpp"

namespace hagge {

/// Unordered pair of points of a common carrier (line or conic).
template <Field F>
struct PointPair {
  ProjPoint<F> a, b;

  bool contains(const ProjPoint<F>& p) const { return a == p || b == p; }
  bool is_fixed() const { return a == b; }
  bool operator==(const PointPair& o) const {
    return (a == o.a && b == o.b) || (a == o.b && b == o.a);
  }
};

template <Field F>
struct ParamPair {
  ProjParam<F> a, b;

  bool contains(const ProjParam<F>& t) const { return a == t || b == t; }
  bool is_fixed() const { return a == b; }
  bool disjoint(const ParamPair& o) const {
    return !o.contains(a) && !o.contains(b);
  }
};

template <Field F>
bool pairs_disjoint(const PointPair<F>& x, const PointPair<F>& y) {
  return !y.contains(x.a) && !y.contains(x.b);
}

template <Field F>
using Carrier = std::variant<LineParametrization<F>, ConicParametrization<F>>;

template <Field F>
ProjParam<F> carrier_param(const Carrier<F>& c, const ProjPoint<F>& p) {
  return std::visit([&](const auto& par) { return par.param_of_point(p); }, c);
}

template <Field F>
ProjPoint<F> carrier_point(const Carrier<F>& c, const ProjParam<F>& t) {
  return std::visit([&](const auto& par) { return par.point_of_param(t); }, c);
}

namespace detail {

// A non-identity involution of the parameter line is a trace-free projective
// 2x2 map M = [[a, b], [c, -a]]. "M exchanges t and s" is one linear
// condition on (a, b, c), and it is symmetric in t and s:
//   a(u_t v_s + v_t u_s) + b v_t v_s - c u_t u_s = 0.
template <Field F>
std::array<F, 3> pair_condition_row(const ParamPair<F>& p) {
  const auto& t = p.a;
  const auto& s = p.b;
  return {t.u() * s.v() + t.v() * s.u(), t.v() * s.v(), -(t.u() * s.u())};
}

template <Field F>
std::optional<std::array<F, 3>> trace_free_from_pairs(const ParamPair<F>& p1,
                                                      const ParamPair<F>& p2) {
  std::vector<std::vector<F>> rows;
  auto r1 = pair_condition_row(p1);
  auto r2 = pair_condition_row(p2);
  rows.push_back({r1[0], r1[1], r1[2]});
  rows.push_back({r2[0], r2[1], r2[2]});
  auto basis = kernel_basis(std::move(rows));
  if (basis.size() != 1) return std::nullopt;
  return std::array<F, 3>{basis[0][0], basis[0][1], basis[0][2]};
}

}  // namespace detail

/// Involution of a parametrized carrier: self-inverse, non-identity
/// projective map of the parameter, stored as the trace-free matrix
/// [[a, b], [c, -a]] (trace zero is exactly the self-inverse condition for
/// a non-scalar map).
template <Field F>
class Involution {
 public:
  Involution(Carrier<F> carrier, F a, F b, F c)
      : carrier_(std::move(carrier)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if ((a_ * a_ + b_ * c_).is_zero())
      throw Error(ErrorCode::NoInvolution, "singular parameter map");
  }

  const Carrier<F>& carrier() const { return carrier_; }
  // matrix entries (a, b, c, -a), row-major
  std::array<F, 4> matrix() const { return {a_, b_, c_, -a_}; }

  ProjParam<F> apply_param(const ProjParam<F>& t) const {
    return ProjParam<F>(a_ * t.u() + b_ * t.v(), c_ * t.u() - a_ * t.v());
  }

  ProjPoint<F> apply_point(const ProjPoint<F>& p) const {
    return carrier_point(carrier_, apply_param(carrier_param(carrier_, p)));
  }

  bool swaps(const PointPair<F>& pair) const {
    const auto ta = carrier_param(carrier_, pair.a);
    const auto tb = carrier_param(carrier_, pair.b);
    return apply_param(ta) == tb;
  }

 private:
  Carrier<F> carrier_;
  F a_, b_, c_;
};

/// The unique involution exchanging each of two disjoint pairs of carrier
/// points. A pair may be a fixed point given with itself.
template <Field F>
Involution<F> involution_from_two_pairs(const Carrier<F>& carrier, const PointPair<F>& pair1,
                                        const PointPair<F>& pair2) {
  if (!pairs_disjoint(pair1, pair2))
    throw Error(ErrorCode::OverlappingPairs, "");
  const ParamPair<F> q1{carrier_param(carrier, pair1.a), carrier_param(carrier, pair1.b)};
  const ParamPair<F> q2{carrier_param(carrier, pair2.a), carrier_param(carrier, pair2.b)};
  auto coeffs = detail::trace_free_from_pairs(q1, q2);
  if (!coeffs) throw Error(ErrorCode::NoInvolution, "pairs do not determine an involution");
  return Involution<F>(carrier, (*coeffs)[0], (*coeffs)[1], (*coeffs)[2]);
}

namespace detail {

// Determinant criterion: the three pairs satisfy a common symmetric relation
// alpha*t*t' + beta*(t + t') + gamma = 0 iff the rows of their symmetric
// parameter products (tt', t+t', 1), homogenized, are linearly dependent.
// Valid verdict provided two of the pairs are disjoint (which pins the
// relation to a genuine involution). Fixed-point pairs are fine here.
template <Field F>
bool in_involution_det(const std::array<ParamPair<F>, 3>& ps) {
  std::array<Vec3<F>, 3> rows;
  for (int i = 0; i < 3; ++i) {
    const auto& t = ps[i].a;
    const auto& s = ps[i].b;
    rows[i] = Vec3<F>{t.u() * s.u(), t.u() * s.v() + t.v() * s.u(), t.v() * s.v()};
  }
  return det3(rows[0], rows[1], rows[2]).is_zero();
}

template <Field F>
int coincidence_max(const std::array<ProjParam<F>, 4>& q) {
  int best = 1;
  for (int i = 0; i < 4; ++i) {
    int n = 0;
    for (int j = 0; j < 4; ++j)
      if (q[j] == q[i]) ++n;
    best = std::max(best, n);
  }
  return best;
}

// Cross-ratio criterion: (P1 P1'), (P2 P2'), (P3 P3') are pairs of an
// involution iff cr(P1,P2,P3,P3') = cr(P1',P2',P3',P3). Degenerates when
// the split pair is a fixed point (both sides collapse to 1), so such a
// pair is never placed in the split slot; returns nullopt when no
// admissible arrangement exists.
template <Field F>
std::optional<bool> in_involution_cr(const std::array<ParamPair<F>, 3>& ps) {
  for (int k = 2; k >= 0; --k) {
    if (ps[k].is_fixed()) continue;
    const int i = (k == 0) ? 1 : 0;
    const int j = (k == 2) ? 1 : 2;
    const std::array<ProjParam<F>, 4> lhs = {ps[i].a, ps[j].a, ps[k].a, ps[k].b};
    const std::array<ProjParam<F>, 4> rhs = {ps[i].b, ps[j].b, ps[k].b, ps[k].a};
    if (coincidence_max(lhs) >= 3 || coincidence_max(rhs) >= 3) continue;
    const auto cl = cross_ratio_params(lhs[0], lhs[1], lhs[2], lhs[3]);
    const auto cJ = cross_ratio_params(rhs[0], rhs[1], rhs[2], rhs[3]);
    return cl == cJ;
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether three pairs on one carrier are pairs of a single involution.
/// Computes the determinant criterion, cross-checks against the cross-ratio
/// criterion whenever the latter is non-degenerate, and requires at least
/// two disjoint pairs so the involution is determined.
template <Field F>
bool in_involution_params(const std::array<ParamPair<F>, 3>& ps) {
  const bool determined = ps[0].disjoint(ps[1]) || ps[0].disjoint(ps[2]) || ps[1].disjoint(ps[2]);
  if (!determined)
    throw Error(ErrorCode::Underdetermined, "no two disjoint pairs");
  const bool det_verdict = detail::in_involution_det(ps);
  if (const auto cr_verdict = detail::in_involution_cr(ps); cr_verdict && *cr_verdict != det_verdict)
    throw std::logic_error("involution criteria disagree");
  return det_verdict;
}

template <Field F>
bool in_involution(const Carrier<F>& carrier, const std::array<PointPair<F>, 3>& pairs) {
  std::array<ParamPair<F>, 3> ps = {
      ParamPair<F>{carrier_param(carrier, pairs[0].a), carrier_param(carrier, pairs[0].b)},
      ParamPair<F>{carrier_param(carrier, pairs[1].a), carrier_param(carrier, pairs[1].b)},
      ParamPair<F>{carrier_param(carrier, pairs[2].a), carrier_param(carrier, pairs[2].b)}};
  return in_involution_params(ps);
}

/// The three pairs cut on l by the opposite sides of the complete
/// quadrangle q, in side order {12,34}, {13,24}, {14,23}. These are always
/// pairs of an involution.
template <Field F>
std::array<PointPair<F>, 3> quadrangle_involution_pairs(const std::array<ProjPoint<F>, 4>& q,
                                                        const ProjLine<F>& l) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (are_collinear(q[i], q[j], q[k]))
          throw Error(ErrorCode::DegenerateQuadrangle, "");
  for (const auto& v : q)
    if (incident(v, l)) throw Error(ErrorCode::LineThroughVertex, v.str());

  auto cut = [&](int i, int j) { return meet(l, join(q[i], q[j])); };
  return {PointPair<F>{cut(0, 1), cut(2, 3)},
          PointPair<F>{cut(0, 2), cut(1, 3)},
          PointPair<F>{cut(0, 3), cut(1, 2)}};
}

template <Field F>
struct ChordConcurrency {
  bool concurrent = false;
  bool involution = false;
  std::optional<ProjPoint<F>> common;
  std::array<ProjLine<F>, 3> chords;
};

/// Concurrency of the three chords spanned by three point pairs of a conic,
/// together with the involution verdict on the pairs in the conic
/// parameter. The two verdicts always agree; a mismatch would disprove the
/// chord-involution equivalence and is raised as a violation.
template <Field F>
ChordConcurrency<F> concurrent_iff_involution(const Conic<F>& conic,
                                              const std::array<PointPair<F>, 3>& pairs) {
  std::array<const ProjPoint<F>*, 6> pts = {&pairs[0].a, &pairs[0].b, &pairs[1].a,
                                            &pairs[1].b, &pairs[2].a, &pairs[2].b};
  for (const auto* p : pts)
    if (!conic.contains(*p)) throw Error(ErrorCode::PointsNotOnConic, p->str());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (*pts[i] == *pts[j]) throw Error(ErrorCode::DuplicatePoints, pts[i]->str());

  std::array<ProjLine<F>, 3> chords = {join(pairs[0].a, pairs[0].b),
                                       join(pairs[1].a, pairs[1].b),
                                       join(pairs[2].a, pairs[2].b)};
  const bool concurrent = are_concurrent(chords[0], chords[1], chords[2]);

  const Carrier<F> carrier{ConicParametrization<F>(conic, pairs[0].a)};
  const bool involution = in_involution(carrier, pairs);

  if (concurrent != involution)
    throw TheoremViolation("chord concurrency and conic involution disagree",
                           "{\"chords\":[\"" + chords[0].str() + "\",\"" + chords[1].str() +
                               "\",\"" + chords[2].str() + "\"]}");

  ChordConcurrency<F> result{concurrent, involution, std::nullopt, chords};
  if (concurrent) {
    ProjPoint<F> common = meet(chords[0], chords[1]);
    result.common = common;
  }
  return result;
}

}  // namespace hagge
