#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hagge/theorems.hpp"

namespace hagge {

/// Figure description in the affine chart z = 1; rationals only. Every
/// coordinate that reaches the SVG text is computed exactly and rounded to
/// a fixed three decimals, so output bytes are identical across platforms.
struct RenderModel {
  std::vector<std::pair<std::string, ProjPoint<Rat>>> labeled_points;
  std::array<ProjPoint<Rat>, 3> triangle;
  std::vector<std::pair<std::string, Conic<Rat>>> conics;
  ProjPoint<Rat> conic_base;  // a common point of all conics (D)
  std::vector<std::pair<std::string, ProjLine<Rat>>> chords;
  std::optional<ProjPoint<Rat>> common;
};

namespace detail {

// exact round-half-up to three decimals
inline std::string svg_coord(const Rat& v) {
  const Rat scaled = v * Rat(1000) + Rat(1, 2);
  Rat::Int n = scaled.num() / scaled.den();
  if (scaled.sign() < 0 && scaled.den() != 1) n -= 1;  // floor for negatives
  const bool neg = n < 0;
  Rat::Int a = neg ? Rat::Int(-n) : n;
  const Rat::Int ip = a / 1000;
  const Rat::Int fp = a % 1000;
  std::string frac = fp.str();
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + ip.str() + "." + frac;
}

struct Viewport {
  Rat x0, y0, x1, y1;  // padded scene box
  Rat scale;           // svg units per scene unit
  Rat ox, oy;          // svg offset

  std::pair<Rat, Rat> map(const Rat& x, const Rat& y) const {
    return {ox + (x - x0) * scale, oy + (y1 - y) * scale};
  }
  bool roomy_contains(const Rat& x, const Rat& y) const {
    const Rat wx = (x1 - x0) * Rat(5);
    const Rat wy = (y1 - y0) * Rat(5);
    return x >= x0 - wx && x <= x1 + wx && y >= y0 - wy && y <= y1 + wy;
  }
};

inline Viewport fit_viewport(const std::vector<ProjPoint<Rat>>& pts) {
  std::optional<Rat> x0, x1, y0, y1;
  for (const auto& p : pts) {
    if (!p.is_affine()) continue;
    const Rat x = p.affine_x(), y = p.affine_y();
    if (!x0 || x < *x0) x0 = x;
    if (!x1 || x > *x1) x1 = x;
    if (!y0 || y < *y0) y0 = y;
    if (!y1 || y > *y1) y1 = y;
  }
  if (!x0) throw Error(ErrorCode::EmptyScene, "no finite points to draw");
  Rat w = *x1 - *x0, h = *y1 - *y0;
  if (w.is_zero()) w = Rat(1);
  if (h.is_zero()) h = Rat(1);
  const Rat px = w / Rat(10), py = h / Rat(10);
  Viewport v{*x0 - px, *y0 - py, *x1 + px, *y1 + py, Rat(0), Rat(0), Rat(0)};
  const Rat wp = v.x1 - v.x0, hp = v.y1 - v.y0;
  const Rat longest = wp < hp ? hp : wp;
  v.scale = Rat(1000) / longest;
  // center the shorter dimension
  v.ox = (Rat(1000) - wp * v.scale) / Rat(2);
  v.oy = (Rat(1000) - hp * v.scale) / Rat(2);
  return v;
}

inline std::string xy(const Viewport& v, const ProjPoint<Rat>& p) {
  const auto [x, y] = v.map(p.affine_x(), p.affine_y());
  return svg_coord(x) + "," + svg_coord(y);
}

// segment of a projective line inside the padded scene box
inline std::optional<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>> clip_line(
    const Viewport& v, const ProjLine<Rat>& l) {
  const Rat a = l.coeffs()[0], b = l.coeffs()[1], c = l.coeffs()[2];
  std::vector<std::pair<Rat, Rat>> hits;
  auto push = [&](const Rat& x, const Rat& y) {
    if (x < v.x0 || x > v.x1 || y < v.y0 || y > v.y1) return;
    for (const auto& h : hits)
      if (h.first == x && h.second == y) return;
    hits.push_back({x, y});
  };
  if (!b.is_zero()) {
    push(v.x0, -(a * v.x0 + c) / b);
    push(v.x1, -(a * v.x1 + c) / b);
  }
  if (!a.is_zero()) {
    push(-(b * v.y0 + c) / a, v.y0);
    push(-(b * v.y1 + c) / a, v.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  std::pair<Rat, Rat> lo = hits[0], hi = hits[0];
  for (const auto& h : hits) {
    if (h.first < lo.first || (h.first == lo.first && h.second < lo.second)) lo = h;
    if (h.first > hi.first || (h.first == hi.first && h.second > hi.second)) hi = h;
  }
  if (lo == hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace detail

inline constexpr int kConicSamples = 256;

/// Deterministic SVG 1.1 figure, 1000x1000 canvas, viewport fit to the
/// finite labeled points with a 10% margin. Conics are polylines through
/// 256 parameter values of their parametrization based at the common point.
inline std::string render_svg(const RenderModel& model) {
  std::vector<ProjPoint<Rat>> anchors;
  for (const auto& [_, p] : model.labeled_points) anchors.push_back(p);
  if (model.common) anchors.push_back(*model.common);
  const detail::Viewport vp = detail::fit_viewport(anchors);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  // triangle sides
  static const char* side_names[3] = {"AB", "BC", "CA"};
  for (int i = 0; i < 3; ++i) {
    const auto seg = detail::clip_line(
        vp, join(model.triangle[static_cast<std::size_t>(i)],
                 model.triangle[static_cast<std::size_t>((i + 1) % 3)]));
    if (!seg) continue;
    const auto [p, q] = *seg;
    const auto [x0, y0] = vp.map(p.first, p.second);
    const auto [x1, y1] = vp.map(q.first, q.second);
    out << "<line id=\"side-" << side_names[i] << "\" x1=\"" << detail::svg_coord(x0)
        << "\" y1=\"" << detail::svg_coord(y0) << "\" x2=\"" << detail::svg_coord(x1)
        << "\" y2=\"" << detail::svg_coord(y1)
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }

  // conics as sampled polylines; runs break at far-away or infinite samples
  for (const auto& [name, conic] : model.conics) {
    const ConicParametrization<Rat> par(conic, model.conic_base);
    out << "<path id=\"conic-" << name << "\" fill=\"none\" stroke=\""
        << (name == "sigma" ? "#1f5fbf" : "#b0b0b0") << "\" stroke-width=\""
        << (name == "sigma" ? "2" : "1") << "\" d=\"";
    bool in_run = false;
    bool wrote = false;
    for (int k = 0; k < kConicSamples; ++k) {
      const Rat t = Rat(2 * k - (kConicSamples - 1), 32);
      const ProjPoint<Rat> p = par.point_of_param(ProjParam<Rat>::finite(t));
      if (!p.is_affine() || !vp.roomy_contains(p.affine_x(), p.affine_y())) {
        in_run = false;
        continue;
      }
      out << (in_run ? "L" : "M") << detail::xy(vp, p) << " ";
      in_run = true;
      wrote = true;
    }
    if (!wrote) out << "M0,0 ";
    out << "\"/>\n";
  }

  // chords and the common point
  for (const auto& [name, chord] : model.chords) {
    const auto seg = detail::clip_line(vp, chord);
    if (!seg) continue;
    const auto [p, q] = *seg;
    const auto [x0, y0] = vp.map(p.first, p.second);
    const auto [x1, y1] = vp.map(q.first, q.second);
    out << "<line id=\"chord-" << name << "\" x1=\"" << detail::svg_coord(x0) << "\" y1=\""
        << detail::svg_coord(y0) << "\" x2=\"" << detail::svg_coord(x1) << "\" y2=\""
        << detail::svg_coord(y1) << "\" stroke=\"#c03232\" stroke-width=\"1.5\"/>\n";
  }
  if (model.common && model.common->is_affine()) {
    out << "<circle id=\"common-point\" cx=\"";
    const auto [cx, cy] = vp.map(model.common->affine_x(), model.common->affine_y());
    out << detail::svg_coord(cx) << "\" cy=\"" << detail::svg_coord(cy)
        << "\" r=\"6\" fill=\"none\" stroke=\"#c03232\" stroke-width=\"2\"/>\n";
  }

  for (const auto& [label, p] : model.labeled_points) {
    if (!p.is_affine()) continue;
    const auto [x, y] = vp.map(p.affine_x(), p.affine_y());
    out << "<circle id=\"pt-" << label << "\" cx=\"" << detail::svg_coord(x) << "\" cy=\""
        << detail::svg_coord(y) << "\" r=\"3.5\" fill=\"#202020\"/>\n";
    out << "<text x=\"" << detail::svg_coord(x + Rat(7)) << "\" y=\""
        << detail::svg_coord(y - Rat(7))
        << "\" font-family=\"sans-serif\" font-size=\"18\">" << label << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

inline RenderModel render_model_t1(const SceneT1& s, const DerivedSix<Rat>& six,
                                   const ConcurrencyCertificate<Rat>* cert) {
  RenderModel m{{},
                {s.a, s.b, s.c},
                {},
                s.d,
                {},
                std::nullopt};
  m.labeled_points = {{"A", s.a}, {"B", s.b}, {"C", s.c}, {"D", s.d},
                      {"U", six.u}, {"V", six.v}, {"W", six.w},
                      {"X", six.x}, {"Y", six.y}, {"Z", six.z}};
  m.conics = {{"sigma", s.sigma},
              {"BCD", circle_through_three(s.b, s.c, s.d)},
              {"ACD", circle_through_three(s.a, s.c, s.d)},
              {"ABD", circle_through_three(s.a, s.b, s.d)}};
  if (cert) {
    m.chords = {{"UX", cert->chords[0]}, {"VY", cert->chords[1]}, {"WZ", cert->chords[2]}};
    m.common = cert->common;
  }
  return m;
}

inline RenderModel render_model_t2(const SceneT2<Rat>& s, const DerivedSix<Rat>& six,
                                   const ConcurrencyCertificate<Rat>* cert) {
  RenderModel m{{},
                {s.a, s.b, s.c},
                {},
                s.d,
                {},
                std::nullopt};
  m.labeled_points = {{"A", s.a}, {"B", s.b}, {"C", s.c}, {"D", s.d}, {"E", s.e}, {"F", s.f},
                      {"U", six.u}, {"V", six.v}, {"W", six.w},
                      {"X", six.x}, {"Y", six.y}, {"Z", six.z}};
  m.conics = {
      {"sigma", s.sigma},
      {"BCDEF", conic_through_five(std::array<ProjPoint<Rat>, 5>{s.b, s.c, s.d, s.e, s.f})},
      {"ACDEF", conic_through_five(std::array<ProjPoint<Rat>, 5>{s.a, s.c, s.d, s.e, s.f})},
      {"ABDEF", conic_through_five(std::array<ProjPoint<Rat>, 5>{s.a, s.b, s.d, s.e, s.f})}};
  if (cert) {
    m.chords = {{"UX", cert->chords[0]}, {"VY", cert->chords[1]}, {"WZ", cert->chords[2]}};
    m.common = cert->common;
  }
  return m;
}

}  // namespace hagge
