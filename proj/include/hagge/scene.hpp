#pragma once

#include <string>

#include "hagge/conic.hpp"
#include "hagge/steiner.hpp"

namespace hagge {

/// Input configuration for the circle-based concurrency theorem: a triangle
/// ABC, a point D off its side lines, and a circle sigma through D.
/// Rationals only (circles are Euclidean objects).
struct SceneT1 {
  ProjPoint<Rat> a, b, c, d;
  Conic<Rat> sigma;

  static SceneT1 make(ProjPoint<Rat> a, ProjPoint<Rat> b, ProjPoint<Rat> c, ProjPoint<Rat> d,
                      Conic<Rat> sigma) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidScene, why); };
    for (const auto* p : {&a, &b, &c, &d})
      if (!p->is_affine()) throw fail("point at infinity");
    if (are_collinear(a, b, c)) throw fail("triangle degenerate");
    if (are_collinear(a, b, d) || are_collinear(b, c, d) || are_collinear(a, c, d))
      throw fail("D on a side line");
    if (!sigma.is_circle() || sigma.is_degenerate()) throw fail("sigma not a proper circle");
    if (!sigma.contains(d)) throw fail("D not on sigma");
    return SceneT1{std::move(a), std::move(b), std::move(c), std::move(d), std::move(sigma)};
  }
};

/// Input configuration for the projective generalization: a triangle ABC,
/// non-collinear D, E, F off its side lines, a conic sigma through D, E, F,
/// and two diagonal seeds for the conic pair with self-polar triangle DEF.
template <Field K>
struct SceneT2 {
  ProjPoint<K> a, b, c, d, e, f;
  Conic<K> sigma;
  std::array<K, 3> seed1, seed2;

  static SceneT2 make(ProjPoint<K> a, ProjPoint<K> b, ProjPoint<K> c, ProjPoint<K> d,
                      ProjPoint<K> e, ProjPoint<K> f, Conic<K> sigma,
                      std::array<K, 3> seed1, std::array<K, 3> seed2) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::InvalidScene, why); };
    if (are_collinear(a, b, c)) throw fail("triangle degenerate");
    if (are_collinear(d, e, f)) throw fail("DEF collinear");
    for (const auto* p : {&d, &e, &f})
      if (are_collinear(a, b, *p) || are_collinear(b, c, *p) || are_collinear(a, c, *p))
        throw fail("D/E/F on a side line of ABC");
    if (sigma.is_degenerate()) throw fail("sigma degenerate");
    if (!sigma.contains(d) || !sigma.contains(e) || !sigma.contains(f))
      throw fail("sigma misses D/E/F");
    // validates the seeds (nonzero entries, distinct component ratios)
    try {
      (void)steiner_for_triangle(d, e, f, seed1, seed2);
    } catch (const Error& err) {
      throw fail(std::string("bad steiner seeds: ") + err.what());
    }
    return SceneT2{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e),
                   std::move(f), std::move(sigma), std::move(seed1), std::move(seed2)};
  }
};

/// The six derived points: U, V, W cut from sigma by the auxiliary circles
/// or conics, X, Y, Z cut by the lines AD, BD, CD. All six are distinct
/// points of sigma (scenes where they collide are rejected).
template <Field K>
struct DerivedSix {
  ProjPoint<K> u, v, w, x, y, z;

  std::array<const ProjPoint<K>*, 6> all() const { return {&u, &v, &w, &x, &y, &z}; }
};

namespace detail {

template <Field K>
void check_six(const DerivedSix<K>& six, const Conic<K>& sigma) {
  const auto pts = six.all();
  for (const auto* p : pts)
    if (!sigma.contains(*p))
      throw DegenerateScene("derived point off sigma");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (*pts[i] == *pts[j]) throw DegenerateScene("derived points coincide");
}

}  // namespace detail

/// U, V, W from the circles BCD, ACD, ABD; X, Y, Z from the lines AD, BD,
/// CD; everything through the shared point D, so every intersection is a
/// single rational second root.
inline DerivedSix<Rat> derive_six_t1(const SceneT1& s) {
  auto other = [&](const ProjPoint<Rat>& p, const ProjPoint<Rat>& q) {
    const Conic<Rat> k = circle_through_three(p, q, s.d);
    if (k == s.sigma) throw DegenerateScene("sigma equals an auxiliary circle");
    const SecondIntersection<Rat> r = second_common_point_of_circles(s.sigma, k, s.d);
    if (r.tangent) throw DegenerateScene("sigma tangent to an auxiliary circle at D");
    return r.point;
  };
  auto cut = [&](const ProjPoint<Rat>& p) {
    const SecondIntersection<Rat> r = second_intersection(s.sigma, join(p, s.d), s.d);
    if (r.tangent) throw DegenerateScene("line through D tangent to sigma");
    return r.point;
  };
  DerivedSix<Rat> six{other(s.b, s.c), other(s.a, s.c), other(s.a, s.b),
                      cut(s.a), cut(s.b), cut(s.c)};
  detail::check_six(six, s.sigma);
  return six;
}

/// U, V, W from the conics BCDEF, ACDEF, ABDEF via the fourth common point
/// over the shared triple D, E, F; X, Y, Z as in the circle case.
template <Field K>
DerivedSix<K> derive_six_t2(const SceneT2<K>& s) {
  auto other = [&](const ProjPoint<K>& p, const ProjPoint<K>& q) {
    Conic<K> k = [&] {
      try {
        return conic_through_five(std::array<ProjPoint<K>, 5>{p, q, s.d, s.e, s.f});
      } catch (const Error& err) {
        if (err.code() == ErrorCode::DegeneratePosition || err.code() == ErrorCode::DuplicatePoints)
          throw DegenerateScene("auxiliary conic degenerate");
        throw;
      }
    }();
    if (k == s.sigma) throw DegenerateScene("sigma equals an auxiliary conic");
    try {
      return fourth_intersection(s.sigma, k, s.d, s.e, s.f);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::TangentialContact)
        throw DegenerateScene("fourth intersection collides with D/E/F");
      throw;
    }
  };
  auto cut = [&](const ProjPoint<K>& p) {
    const SecondIntersection<K> r = second_intersection(s.sigma, join(p, s.d), s.d);
    if (r.tangent) throw DegenerateScene("line through D tangent to sigma");
    return r.point;
  };
  DerivedSix<K> six{other(s.b, s.c), other(s.a, s.c), other(s.a, s.b),
                    cut(s.a), cut(s.b), cut(s.c)};
  for (const auto* p : six.all())
    if (*p == s.d || *p == s.e || *p == s.f)
      throw DegenerateScene("derived point at a triangle vertex");
  detail::check_six(six, s.sigma);
  return six;
}

}  // namespace hagge
