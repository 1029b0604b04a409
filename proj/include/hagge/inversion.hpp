#pragma once

#include "hagge/conic.hpp"
#include "hagge/involution.hpp"

namespace hagge {

/// Euclidean inversion: P maps to pole + power * (P - pole) / |P - pole|^2.
/// Exact over the rationals, involutive on affine points other than the
/// pole. Circles through the pole map to lines and back.
class InversionMap {
 public:
  InversionMap(ProjPoint<Rat> pole, Rat power) : pole_(std::move(pole)), power_(std::move(power)) {
    if (!pole_.is_affine()) throw Error(ErrorCode::PointAtInfinity, "inversion pole at infinity");
    if (power_.is_zero()) throw Error(ErrorCode::InvalidScalar, "zero inversion power");
  }

  const ProjPoint<Rat>& pole() const { return pole_; }
  const Rat& power() const { return power_; }

  ProjPoint<Rat> apply(const ProjPoint<Rat>& p) const {
    if (!p.is_affine()) throw Error(ErrorCode::PointAtInfinity, p.str());
    if (p == pole_) throw Error(ErrorCode::PoleInput, p.str());
    const Rat dx = p.affine_x() - pole_.affine_x();
    const Rat dy = p.affine_y() - pole_.affine_y();
    const Rat n2 = dx * dx + dy * dy;
    const Rat s = power_ / n2;
    return ProjPoint<Rat>::affine(pole_.affine_x() + s * dx, pole_.affine_y() + s * dy);
  }

 private:
  ProjPoint<Rat> pole_;
  Rat power_;
};

inline ProjPoint<Rat> invert(const InversionMap& m, const ProjPoint<Rat>& p) {
  return m.apply(p);
}

/// Image of a circle through the pole: a line. For the circle
/// x^2 + y^2 + d*xz + e*yz + f*z^2 = 0 and pole (x0, y0) with power k, the
/// substitution u' = k*u/|u|^2 on the offset u = P - pole turns the circle
/// equation |u|^2 + (2x0+d)u_x + (2y0+e)u_y = 0 into
/// (2x0+d)u'_x + (2y0+e)u'_y + k = 0.
inline ProjLine<Rat> invert_circle_through_pole(const InversionMap& m, const Conic<Rat>& c) {
  if (!c.is_circle() || c.is_degenerate())
    throw Error(ErrorCode::DegenerateConic, "not a proper circle");
  if (!c.contains(m.pole())) throw Error(ErrorCode::NotThroughPole, "");
  const auto& mat = c.matrix();
  const Rat two(2);
  const Rat d = two * mat.at(0, 2);
  const Rat e = two * mat.at(1, 2);
  const Rat x0 = m.pole().affine_x();
  const Rat y0 = m.pole().affine_y();
  const Rat a = two * x0 + d;
  const Rat b = two * y0 + e;
  return ProjLine<Rat>(a, b, m.power() - a * x0 - b * y0);
}

/// Image of three carrier pairs under a point transformation (inversion or
/// Steiner correspondence); preserves the involution verdict.
template <class MapT, Field F>
std::array<PointPair<F>, 3> pushforward_pairs(const MapT& map,
                                              const std::array<PointPair<F>, 3>& pairs) {
  auto push = [&](const PointPair<F>& p) {
    return PointPair<F>{map.apply(p.a), map.apply(p.b)};
  };
  return {push(pairs[0]), push(pairs[1]), push(pairs[2])};
}

}  // namespace hagge
