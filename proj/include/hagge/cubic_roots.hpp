#pragma once

#include <optional>
#include <vector>

#include "hagge/field.hpp"
#include "hagge/linalg.hpp"

namespace hagge::detail {

// ---- dense univariate polynomials, ascending coefficients ----

template <Field F>
using Poly = std::vector<F>;

template <Field F>
void poly_trim(Poly<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <Field F>
int poly_deg(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

template <Field F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r = a;
  if (b.size() > r.size()) {
    const F z = b[0].zero();
    r.resize(b.size(), z);
  }
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  poly_trim(r);
  return r;
}

template <Field F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r = a;
  if (b.size() > r.size()) {
    const F z = b[0].zero();
    r.resize(b.size(), z);
  }
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  poly_trim(r);
  return r;
}

template <Field F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  const F z = a[0].zero();
  Poly<F> r(a.size() + b.size() - 1, z);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  poly_trim(r);
  return r;
}

template <Field F>
F poly_eval(const Poly<F>& p, const F& x) {
  F acc = x.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <Field F>
Poly<F> poly_derivative(const Poly<F>& p) {
  Poly<F> r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * p[i].from_int(static_cast<long long>(i)));
  poly_trim(r);
  return r;
}

template <Field F>
Poly<F> poly_rem(Poly<F> a, const Poly<F>& b) {
  const F lead_inv = b.back().one() / b.back();
  while (poly_deg(a) >= poly_deg(b) && !a.empty()) {
    const F f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

template <Field F>
Poly<F> poly_monic(Poly<F> p) {
  if (p.empty()) return p;
  const F inv = p.back().one() / p.back();
  for (auto& c : p) c = c * inv;
  return p;
}

template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly<F> r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

// det(M1 - lambda*M2) as a polynomial in lambda (degree 3 when M2 is
// invertible), by cofactor expansion with degree-1 entries.
template <Field F>
Poly<F> char_cubic(const Mat3<F>& m1, const Mat3<F>& m2) {
  auto entry = [&](int i, int j) { return Poly<F>{m1.at(i, j), -m2.at(i, j)}; };
  auto minor2 = [&](int i0, int i1, int j0, int j1) {
    return poly_sub(poly_mul(entry(i0, j0), entry(i1, j1)),
                    poly_mul(entry(i0, j1), entry(i1, j0)));
  };
  Poly<F> acc = poly_mul(entry(0, 0), minor2(1, 2, 1, 2));
  acc = poly_sub(acc, poly_mul(entry(0, 1), minor2(1, 2, 0, 2)));
  acc = poly_add(acc, poly_mul(entry(0, 2), minor2(1, 2, 0, 1)));
  return acc;
}

// ---- integer roots of monic integer polynomials (rational backend) ----

using BigInt = boost::multiprecision::cpp_int;

// x^2 + b*x + c; integer roots exist iff the discriminant is a perfect
// square, and then both roots are integers.
inline std::optional<std::pair<BigInt, BigInt>> monic_quadratic_integer_roots(const BigInt& b,
                                                                              const BigInt& c) {
  const BigInt disc = b * b - 4 * c;
  if (disc < 0) return std::nullopt;
  const BigInt s = boost::multiprecision::sqrt(disc);
  if (s * s != disc) return std::nullopt;
  return std::make_pair((-b + s) / 2, (-b - s) / 2);
}

struct IntegerCubicRoots {
  std::vector<BigInt> roots;  // distinct integer roots found
  bool fully_split = false;   // all three roots are integers
};

inline int rat_sign_variations(const std::vector<Poly<Rat>>& chain, const Rat& x) {
  int var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = poly_eval(p, x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

/// All integer roots of the squarefree monic cubic x^3 + b x^2 + c x + d,
/// by Sturm isolation and exact bisection: every isolating interval is
/// narrowed below width 1/2 and its unique integer candidate (if any) is
/// tested exactly. A rational root of a monic integer polynomial is an
/// integer, so an isolated root with no integer candidate is irrational.
inline IntegerCubicRoots monic_cubic_integer_roots(const BigInt& b, const BigInt& c,
                                                   const BigInt& d) {
  const Poly<Rat> p = {Rat(d), Rat(c), Rat(b), Rat(1)};
  const Poly<Rat> dp = poly_derivative(p);
  std::vector<Poly<Rat>> chain = {p, dp};
  while (poly_deg(chain.back()) > 0) {
    Poly<Rat> r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // not squarefree; caller screens this out
    for (auto& e : r) e = -e;
    chain.push_back(std::move(r));
  }

  IntegerCubicRoots out;
  auto finish_by_deflation = [&](const BigInt& root) {
    // p / (x - root) = x^2 + (b + root) x + (c + root*(b + root))
    out.roots.push_back(root);
    const BigInt qb = b + root;
    const BigInt qc = c + root * qb;
    if (auto q = monic_quadratic_integer_roots(qb, qc)) {
      out.roots.push_back(q->first);
      out.roots.push_back(q->second);
      out.fully_split = true;
    }
    return out;
  };

  BigInt habs = abs(b);
  if (abs(c) > habs) habs = abs(c);
  if (abs(d) > habs) habs = abs(d);
  const Rat bound = Rat(habs + 1);

  int found_irrational = 0;
  struct Interval { Rat lo, hi; int count; };
  std::vector<Interval> stack;
  const int total = rat_sign_variations(chain, -bound) - rat_sign_variations(chain, bound);
  stack.push_back({-bound, bound, total});
  const Rat half = Rat(1) / Rat(2);

  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count <= 0) continue;
    if (iv.count == 1 && iv.hi - iv.lo <= half) {
      // at most one integer in (lo, hi]
      const BigInt k = iv.hi.num() / iv.hi.den() - (iv.hi.sign() < 0 && iv.hi.den() != 1 ? 1 : 0);
      if (Rat(k) > iv.lo && Rat(k) <= iv.hi && poly_eval(p, Rat(k)).is_zero())
        out.roots.push_back(k);
      else
        ++found_irrational;
      continue;
    }
    const Rat mid = (iv.lo + iv.hi) * half;
    if (poly_eval(p, mid).is_zero()) {
      // exact hit: a rational root of a monic integer cubic, hence integer
      return finish_by_deflation(mid.num());
    }
    const int vl = rat_sign_variations(chain, iv.lo);
    const int vm = rat_sign_variations(chain, mid);
    const int vh = rat_sign_variations(chain, iv.hi);
    stack.push_back({iv.lo, mid, vl - vm});
    stack.push_back({mid, iv.hi, vm - vh});
  }
  out.fully_split = (out.roots.size() == 3) && found_irrational == 0;
  return out;
}

// ---- roots over GF(p) ----

// product of the distinct linear factors of f: gcd(x^p - x, f)
inline Poly<Fp> fp_distinct_root_part(const Poly<Fp>& f) {
  const Fp one = f[0].one();
  const Fp zero = f[0].zero();
  const std::uint64_t p = one.modulus();
  // x^p mod f by square and multiply
  Poly<Fp> x = {zero, one};
  Poly<Fp> acc = {one};
  std::uint64_t e = p;
  Poly<Fp> base = poly_rem(x, f);
  while (e) {
    if (e & 1) acc = poly_rem(poly_mul(acc, base), f);
    base = poly_rem(poly_mul(base, base), f);
    e >>= 1;
  }
  return poly_gcd(poly_sub(acc, x), f);
}

// all roots of a product of distinct monic linear factors, by repeated
// gcd splitting with (x+a)^((p-1)/2) - 1 for a = 0, 1, 2, ...
inline void fp_split_linear_product(const Poly<Fp>& g, std::vector<Fp>& out) {
  const int deg = poly_deg(g);
  if (deg <= 0) return;
  const Fp one = g[0].one();
  if (deg == 1) {
    out.push_back(-(g[0] / g[1]));
    return;
  }
  const std::uint64_t p = one.modulus();
  for (std::uint64_t a = 0;; ++a) {
    if (a > p + 64) throw std::logic_error("root splitting did not converge");
    // h = (x + a)^((p-1)/2) mod g, then gcd(h - 1, g)
    Poly<Fp> base = poly_rem(Poly<Fp>{Fp(a % p, p), one}, g);
    Poly<Fp> acc = {one};
    std::uint64_t e = (p - 1) / 2;
    while (e) {
      if (e & 1) acc = poly_rem(poly_mul(acc, base), g);
      base = poly_rem(poly_mul(base, base), g);
      e >>= 1;
    }
    Poly<Fp> h = poly_gcd(poly_sub(acc, Poly<Fp>{one}), g);
    const int dh = poly_deg(h);
    if (dh <= 0 || dh >= deg) continue;
    // g = h * (g/h); both sides are again products of distinct linear factors
    Poly<Fp> rest = g;
    {
      // exact division rest / h
      Poly<Fp> q(rest.size() - h.size() + 1, one.zero());
      Poly<Fp> r = rest;
      const Fp lead_inv = h.back().one() / h.back();
      while (poly_deg(r) >= poly_deg(h) && !r.empty()) {
        const Fp f = r.back() * lead_inv;
        const std::size_t shift = r.size() - h.size();
        q[shift] = f;
        for (std::size_t i = 0; i < h.size(); ++i) r[shift + i] = r[shift + i] - f * h[i];
        r.pop_back();
        poly_trim(r);
      }
      rest = std::move(q);
      poly_trim(rest);
    }
    fp_split_linear_product(h, out);
    fp_split_linear_product(rest, out);
    return;
  }
}

/// Distinct roots in GF(p) of a polynomial of any small degree.
inline std::vector<Fp> fp_poly_roots(Poly<Fp> f) {
  poly_trim(f);
  std::vector<Fp> out;
  if (poly_deg(f) <= 0) return out;
  const Poly<Fp> g = fp_distinct_root_part(poly_monic(f));
  fp_split_linear_product(g, out);
  return out;
}

}  // namespace hagge::detail
