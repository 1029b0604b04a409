#pragma once

#include <string>
#include <vector>

#include "hagge/inversion.hpp"
#include "hagge/scene.hpp"

namespace hagge {

struct TraceFact {
  std::string name;
  bool ok = false;
};

/// Machine-checkable outcome of a verified scene: the exact common point of
/// the three chords, the chords themselves, the involution verdict on sigma
/// and the full proof-step trace. Every fact holds exactly or verification
/// throws.
template <Field K>
struct ConcurrencyCertificate {
  DerivedSix<K> six;
  std::array<ProjLine<K>, 3> chords;  // UX, VY, WZ
  ProjPoint<K> common;
  bool involution_ok = false;
  std::vector<TraceFact> trace;
};

namespace detail {

template <Field K>
bool same_pair_triple(const std::array<PointPair<K>, 3>& lhs,
                      const std::array<PointPair<K>, 3>& rhs) {
  std::array<bool, 3> used{};
  for (const auto& p : lhs) {
    bool found = false;
    for (int j = 0; j < 3; ++j) {
      if (!used[static_cast<std::size_t>(j)] && p == rhs[static_cast<std::size_t>(j)]) {
        used[static_cast<std::size_t>(j)] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <Field K>
std::string six_json(const DerivedSix<K>& six) {
  return std::string("{\"U\":\"") + six.u.str() + "\",\"V\":\"" + six.v.str() + "\",\"W\":\"" +
         six.w.str() + "\",\"X\":\"" + six.x.str() + "\",\"Y\":\"" + six.y.str() + "\",\"Z\":\"" +
         six.z.str() + "\"}";
}

template <Field K>
[[noreturn]] void raise_violation(const std::string& fact, const DerivedSix<K>& six) {
  throw TheoremViolation(fact, "{\"failed_fact\":\"" + fact + "\",\"six\":" + six_json(six) + "}");
}

template <Field K>
ConcurrencyCertificate<K> finish_certificate(const Conic<K>& sigma, const DerivedSix<K>& six,
                                             std::vector<TraceFact> trace) {
  const std::array<PointPair<K>, 3> pairs = {PointPair<K>{six.u, six.x},
                                             PointPair<K>{six.v, six.y},
                                             PointPair<K>{six.w, six.z}};
  const ChordConcurrency<K> res = concurrent_iff_involution(sigma, pairs);
  trace.push_back({"sigma_involution", res.involution});
  trace.push_back({"chords_concurrent", res.concurrent});
  for (const auto& fact : trace)
    if (!fact.ok) raise_violation(fact.name, six);

  ConcurrencyCertificate<K> cert{six, res.chords, *res.common, res.involution, std::move(trace)};
  for (const auto& chord : cert.chords)
    if (!incident(cert.common, chord)) raise_violation("common_point_incidence", six);
  return cert;
}

}  // namespace detail

/// Verifies chord concurrency on a T1 scene with an explicitly supplied
/// derived six (the public entry derives it); traces the inversion proof:
/// the six collinear primed triples, the quadrangle pairs on the image of
/// sigma, and the involution transfer back to sigma.
inline ConcurrencyCertificate<Rat> verify_theorem1_with_six(const SceneT1& s,
                                                            const DerivedSix<Rat>& six) {
  for (const auto* p : {&s.a, &s.b, &s.c})
    if (s.sigma.contains(*p)) throw DegenerateScene("triangle vertex on sigma");

  const InversionMap inv(s.d, Rat(1));
  const ProjPoint<Rat> pa = inv.apply(s.a), pb = inv.apply(s.b), pc = inv.apply(s.c);
  const ProjPoint<Rat> pu = inv.apply(six.u), pv = inv.apply(six.v), pw = inv.apply(six.w);
  const ProjPoint<Rat> px = inv.apply(six.x), py = inv.apply(six.y), pz = inv.apply(six.z);

  const std::array<ProjPoint<Rat>, 4> quad = {pa, pb, pc, s.d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (are_collinear(quad[static_cast<std::size_t>(i)], quad[static_cast<std::size_t>(j)],
                          quad[static_cast<std::size_t>(k)]))
          throw DegenerateScene("primed quadrangle degenerate");

  std::vector<TraceFact> trace;
  trace.push_back({"inv_collinear_DAX", are_collinear(s.d, pa, px)});
  trace.push_back({"inv_collinear_DBY", are_collinear(s.d, pb, py)});
  trace.push_back({"inv_collinear_DCZ", are_collinear(s.d, pc, pz)});
  trace.push_back({"inv_collinear_ABW", are_collinear(pa, pb, pw)});
  trace.push_back({"inv_collinear_ACV", are_collinear(pa, pc, pv)});
  trace.push_back({"inv_collinear_BCU", are_collinear(pb, pc, pu)});

  const ProjLine<Rat> sigma_image = invert_circle_through_pole(inv, s.sigma);
  const auto qpairs = quadrangle_involution_pairs(quad, sigma_image);
  const std::array<PointPair<Rat>, 3> primed = {PointPair<Rat>{pu, px}, PointPair<Rat>{pv, py},
                                                PointPair<Rat>{pw, pz}};
  trace.push_back({"quadrangle_pairs_match", detail::same_pair_triple(qpairs, primed)});
  trace.push_back({"image_line_involution",
                   in_involution(Carrier<Rat>{LineParametrization<Rat>(sigma_image)}, qpairs)});

  return detail::finish_certificate(s.sigma, six, std::move(trace));
}

inline ConcurrencyCertificate<Rat> verify_theorem1(const SceneT1& s) {
  return verify_theorem1_with_six(s, derive_six_t1(s));
}

/// Verifies chord concurrency on a T2 scene; traces the Steiner-map proof:
/// images of sigma and of the auxiliary conics are lines, the images of X,
/// Y, Z land on the intersections of those lines, the quadrangle pairs on
/// the image of sigma match the mapped pairs, and the involution transfers
/// back to sigma.
template <Field K>
ConcurrencyCertificate<K> verify_theorem2_with_six(const SceneT2<K>& s, const DerivedSix<K>& six) {
  const SteinerMap<K> map = steiner_for_triangle(s.d, s.e, s.f, s.seed1, s.seed2);

  for (const auto* p : {&s.a, &s.b, &s.c})
    if (map.is_vertex(*p) || map.on_side(*p))
      throw DegenerateScene("triangle vertex on a DEF side line");

  const ProjPoint<K> pa = map.apply(s.a), pb = map.apply(s.b), pc = map.apply(s.c);
  const ProjPoint<K> pu = map.apply(six.u), pv = map.apply(six.v), pw = map.apply(six.w);
  const ProjPoint<K> px = map.apply(six.x), py = map.apply(six.y), pz = map.apply(six.z);

  const std::array<ProjPoint<K>, 4> quad = {pa, pb, pc, s.d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (are_collinear(quad[static_cast<std::size_t>(i)], quad[static_cast<std::size_t>(j)],
                          quad[static_cast<std::size_t>(k)]))
          throw DegenerateScene("mapped quadrangle degenerate");

  std::vector<TraceFact> trace;
  trace.push_back({"map_collinear_UVW", are_collinear(pu, pv, pw)});
  trace.push_back({"map_collinear_UBC", are_collinear(pu, pb, pc)});
  trace.push_back({"map_collinear_VAC", are_collinear(pv, pa, pc)});
  trace.push_back({"map_collinear_WAB", are_collinear(pw, pa, pb)});

  const ProjLine<K> sigma_image = join(pu, pv);
  for (const auto* q : {&pa, &pb, &pc})
    if (incident(*q, sigma_image)) throw DegenerateScene("mapped vertex on the image line");

  trace.push_back({"x_image_meet", px == meet(join(s.d, pa), sigma_image)});
  trace.push_back({"y_image_meet", py == meet(join(s.d, pb), sigma_image)});
  trace.push_back({"z_image_meet", pz == meet(join(s.d, pc), sigma_image)});

  const auto qpairs = quadrangle_involution_pairs(quad, sigma_image);
  const std::array<PointPair<K>, 3> mapped = {PointPair<K>{pu, px}, PointPair<K>{pv, py},
                                              PointPair<K>{pw, pz}};
  trace.push_back({"quadrangle_pairs_match", detail::same_pair_triple(qpairs, mapped)});
  trace.push_back({"image_line_involution",
                   in_involution(Carrier<K>{LineParametrization<K>(sigma_image)}, qpairs)});

  return detail::finish_certificate(s.sigma, six, std::move(trace));
}

template <Field K>
ConcurrencyCertificate<K> verify_theorem2(const SceneT2<K>& s) {
  return verify_theorem2_with_six(s, derive_six_t2(s));
}

}  // namespace hagge
