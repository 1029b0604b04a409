#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "hagge/conic.hpp"
#include "hagge/cubic_roots.hpp"

namespace hagge {

template <Field F>
struct SelfPolarTriangle {
  std::array<ProjPoint<F>, 3> vertices;

  // side opposite vertex i
  ProjLine<F> side(int i) const { return join(vertices[(i + 1) % 3], vertices[(i + 2) % 3]); }

  bool is_vertex(const ProjPoint<F>& p) const {
    return p == vertices[0] || p == vertices[1] || p == vertices[2];
  }
};

template <Field F>
bool is_self_polar(const Conic<F>& conic, const SelfPolarTriangle<F>& tri) {
  for (int i = 0; i < 3; ++i)
    if (polar(conic, tri.vertices[i]) != tri.side(i)) return false;
  return true;
}

/// The correspondence sending P to the meet of its polars with respect to
/// two conics sharing the self-polar triangle. Undefined at the vertices
/// (both polars collapse to the opposite side); sends every other point of
/// a side line to the opposite vertex; involutive off the side lines.
template <Field F>
class SteinerMap {
 public:
  SteinerMap(Conic<F> s1, Conic<F> s2, SelfPolarTriangle<F> tri)
      : s1_(std::move(s1)), s2_(std::move(s2)), tri_(std::move(tri)) {
    if (s1_.is_degenerate() || s2_.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "");
    if (s1_ == s2_) throw Error(ErrorCode::IdenticalConics, "");
    if (det3(tri_.vertices[0].coords(), tri_.vertices[1].coords(), tri_.vertices[2].coords()).is_zero())
      throw Error(ErrorCode::CollinearDEF, "");
    if (!is_self_polar(s1_, tri_) || !is_self_polar(s2_, tri_))
      throw Error(ErrorCode::NotSelfPolar, "");
    // With a repeated pencil eigenvalue the two polars agree along a whole
    // side line and the map is undefined there; probe one interior point of
    // each side.
    for (int i = 0; i < 3; ++i) {
      const ProjPoint<F> probe(add(tri_.vertices[(i + 1) % 3].coords(),
                                   tri_.vertices[(i + 2) % 3].coords()));
      if (polar(s1_, probe) == polar(s2_, probe))
        throw Error(ErrorCode::RepeatedEigenvalue, "map undefined on a side line");
    }
  }

  const Conic<F>& sigma1() const { return s1_; }
  const Conic<F>& sigma2() const { return s2_; }
  const SelfPolarTriangle<F>& triangle() const { return tri_; }

  bool is_vertex(const ProjPoint<F>& p) const { return tri_.is_vertex(p); }
  bool on_side(const ProjPoint<F>& p) const {
    for (int i = 0; i < 3; ++i)
      if (incident(p, tri_.side(i))) return true;
    return false;
  }

  ProjPoint<F> apply(const ProjPoint<F>& p) const {
    if (is_vertex(p)) throw Error(ErrorCode::VertexInput, p.str());
    return meet(polar(s1_, p), polar(s2_, p));
  }

 private:
  Conic<F> s1_, s2_;
  SelfPolarTriangle<F> tri_;
};

namespace detail {

template <Field F>
std::array<F, 3> pencil_eigenvalues(const Conic<F>& c1, const Conic<F>& c2) {
  Poly<F> p = char_cubic(c1.matrix(), c2.matrix());
  if (poly_deg(p) != 3) throw Error(ErrorCode::DegenerateConic, "pencil not cubic");
  if (poly_deg(poly_gcd(p, poly_derivative(p))) > 0)
    throw Error(ErrorCode::RepeatedEigenvalue, "");

  std::vector<F> roots;
  if constexpr (FieldTraits<F>::is_rational) {
    // clear denominators, then pass to the monic form mu = e3 * lambda
    BigInt lcm_den(1);
    for (const auto& c : p) lcm_den = boost::multiprecision::lcm(lcm_den, c.den());
    std::array<BigInt, 4> e;
    for (int i = 0; i < 4; ++i) {
      const Rat scaled = p[static_cast<std::size_t>(i)] * Rat(lcm_den);
      e[static_cast<std::size_t>(i)] = scaled.num();
    }
    const IntegerCubicRoots r =
        monic_cubic_integer_roots(e[2], e[1] * e[3], e[0] * e[3] * e[3]);
    if (!r.fully_split)
      throw Error(ErrorCode::NotRationallyDiagonalizable,
                  "pencil eigenvalues are not all rational");
    for (const auto& mu : r.roots) roots.push_back(Rat(mu, e[3]));
    std::sort(roots.begin(), roots.end());
  } else {
    std::vector<Fp> rs = fp_poly_roots(p);
    if (rs.size() != 3)
      throw Error(ErrorCode::NotRationallyDiagonalizable,
                  "pencil eigenvalues are not all in the field");
    std::sort(rs.begin(), rs.end(),
              [](const Fp& a, const Fp& b) { return a.residue() < b.residue(); });
    for (const auto& r0 : rs) roots.push_back(r0);
  }
  return {roots[0], roots[1], roots[2]};
}

}  // namespace detail

/// Common self-polar triangle of two conics by exact generalized
/// eigenvectors of det(S1 - lambda*S2); defined over the base field exactly
/// when the characteristic cubic splits there with distinct roots.
template <Field F>
SteinerMap<F> build_steiner(const Conic<F>& s1, const Conic<F>& s2) {
  if (s1.is_degenerate() || s2.is_degenerate()) throw Error(ErrorCode::DegenerateConic, "");
  if (s1 == s2) throw Error(ErrorCode::IdenticalConics, "");
  const std::array<F, 3> lambdas = detail::pencil_eigenvalues(s1, s2);

  std::vector<ProjPoint<F>> verts;
  for (const auto& lam : lambdas) {
    const Mat3<F> m = sub(s1.matrix(), scale(s2.matrix(), lam));
    std::vector<std::vector<F>> rows = {
        {m.at(0, 0), m.at(0, 1), m.at(0, 2)},
        {m.at(1, 0), m.at(1, 1), m.at(1, 2)},
        {m.at(2, 0), m.at(2, 1), m.at(2, 2)}};
    auto basis = kernel_basis(std::move(rows));
    if (basis.size() != 1)
      throw Error(ErrorCode::RepeatedEigenvalue, "eigenvalue of multiplicity > 1");
    verts.emplace_back(Vec3<F>{basis[0][0], basis[0][1], basis[0][2]});
  }
  return SteinerMap<F>(s1, s2, SelfPolarTriangle<F>{{verts[0], verts[1], verts[2]}});
}

/// Synthesis direction: given the triangle and two diagonal seeds, build
/// the conic pair with that self-polar triangle. Always succeeds on valid
/// input, unlike the analysis direction. The seeds must have nonzero
/// entries and pairwise distinct component ratios; a repeated ratio would
/// leave the correspondence undefined on a whole side line.
template <Field F>
SteinerMap<F> steiner_for_triangle(const ProjPoint<F>& d, const ProjPoint<F>& e,
                                   const ProjPoint<F>& f, const std::array<F, 3>& seed1,
                                   const std::array<F, 3>& seed2) {
  if (det3(d.coords(), e.coords(), f.coords()).is_zero())
    throw Error(ErrorCode::CollinearDEF, "");
  for (int i = 0; i < 3; ++i)
    if (seed1[i].is_zero() || seed2[i].is_zero()) throw Error(ErrorCode::ZeroSeedEntry, "");

  int zero_minors = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if ((seed1[i] * seed2[j] - seed1[j] * seed2[i]).is_zero()) ++zero_minors;
  if (zero_minors == 3) throw Error(ErrorCode::ProportionalSeeds, "");
  if (zero_minors > 0) throw Error(ErrorCode::RepeatedEigenvalue, "repeated seed ratio");

  const Mat3<F> frame_inv = Mat3<F>::from_rows(d.coords(), e.coords(), f.coords());
  const Mat3<F> t = adjugate(transpose(frame_inv));  // sends d, e, f to the basis triangle
  auto build = [&](const std::array<F, 3>& s) {
    const Mat3<F> m = mul(transpose(t), mul(Mat3<F>::diagonal(s[0], s[1], s[2]), t));
    return Conic<F>::from_matrix(m);
  };
  return SteinerMap<F>(build(seed1), build(seed2),
                       SelfPolarTriangle<F>{{d, e, f}});
}

template <Field F>
ProjPoint<F> steiner_apply(const SteinerMap<F>& s, const ProjPoint<F>& p) {
  return s.apply(p);
}

/// Image of a line avoiding the triangle vertices: a conic through all
/// three vertices, fitted through five mapped samples and checked against
/// every further sample.
template <Field F>
Conic<F> steiner_line_image(const SteinerMap<F>& s, const ProjLine<F>& l,
                            const std::vector<ProjPoint<F>>& samples) {
  for (const auto& v : s.triangle().vertices)
    if (incident(v, l)) throw Error(ErrorCode::LineThroughVertex, v.str());
  if (samples.size() < 5)
    throw Error(ErrorCode::DegeneratePosition, "need at least five samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!incident(samples[i], l)) throw Error(ErrorCode::PointNotOnLine, samples[i].str());
    if (s.on_side(samples[i]))
      throw Error(ErrorCode::DegeneratePosition, "sample on a triangle side");
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i] == samples[j]) throw Error(ErrorCode::DuplicatePoints, samples[i].str());
  }

  std::vector<ProjPoint<F>> images;
  images.reserve(samples.size());
  for (const auto& p : samples) images.push_back(s.apply(p));

  const Conic<F> image = conic_through_five(
      std::array<ProjPoint<F>, 5>{images[0], images[1], images[2], images[3], images[4]});
  for (std::size_t i = 5; i < images.size(); ++i)
    if (!image.contains(images[i]))
      throw TheoremViolation("line image sample off the fitted conic",
                             "{\"point\":\"" + images[i].str() + "\"}");
  for (const auto& v : s.triangle().vertices)
    if (!image.contains(v))
      throw TheoremViolation("line image conic misses a triangle vertex",
                             "{\"vertex\":\"" + v.str() + "\"}");
  return image;
}

/// Image of a line through exactly one vertex (minus the vertex itself):
/// a range of collinear points.
template <Field F>
ProjLine<F> steiner_vertex_line_image(const SteinerMap<F>& s, const ProjLine<F>& l,
                                      const std::vector<ProjPoint<F>>& samples) {
  int on = 0;
  for (const auto& v : s.triangle().vertices)
    if (incident(v, l)) ++on;
  if (on == 0) throw Error(ErrorCode::NotThroughVertex, "");
  if (on > 1) throw Error(ErrorCode::ThroughTwoVertices, "side line");

  std::vector<ProjPoint<F>> images;
  for (const auto& p : samples) {
    if (!incident(p, l)) throw Error(ErrorCode::PointNotOnLine, p.str());
    images.push_back(s.apply(p));  // VertexInput if a sample is the vertex
  }
  if (images.size() < 2) throw Error(ErrorCode::DegeneratePosition, "need two samples");
  std::size_t second = 1;
  while (second < images.size() && images[second] == images[0]) ++second;
  if (second == images.size())
    throw Error(ErrorCode::DegeneratePosition, "all images coincide");

  const ProjLine<F> image = join(images[0], images[second]);
  for (const auto& q : images)
    if (!incident(q, image))
      throw TheoremViolation("vertex line image is not collinear",
                             "{\"point\":\"" + q.str() + "\"}");
  return image;
}

}  // namespace hagge
