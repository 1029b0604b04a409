#pragma once

#include <cstdint>
#include <string>

#include "hagge/errors.hpp"

namespace hagge {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

inline void require_odd_prime(std::uint64_t p) {
  // Characteristic 2 breaks the diagonal-triangle axiom for quadrangles, so
  // it is excluded along with composites.
  if (p == 2 || !detail::is_prime_u64(p))
    throw Error(ErrorCode::NotOddPrime, "p = " + std::to_string(p));
}

/// Element of GF(p), p an odd prime, stored as the least nonnegative residue.
/// Each element carries its modulus; mixing moduli is an error.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_signed(long long value, std::uint64_t p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  static Fp parse(const std::string& s, std::uint64_t p) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return from_signed(v, p);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidScalar, "not a residue: '" + s + "'");
    }
  }

  std::string str() const { return std::to_string(v_); }
  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long n) const { return from_signed(n, p_); }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator+(const Fp& o) const { check(o); return Fp(add(v_, o.v_), p_); }
  Fp operator-(const Fp& o) const { check(o); return Fp(add(v_, p_ - o.v_), p_); }
  Fp operator*(const Fp& o) const { check(o); return Fp(detail::mulmod_u64(v_, o.v_, p_), p_); }
  Fp operator/(const Fp& o) const {
    check(o);
    if (o.v_ == 0) throw Error(ErrorCode::DivisionByZero);
    return *this * o.inverse();
  }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

  bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    // Extended Euclid on (v, p); p prime so gcd is 1.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      const std::int64_t q = r / newr;
      t -= q * newt; std::swap(t, newt);
      r -= q * newr; std::swap(r, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw Error(ErrorCode::MixedModulus,
                                std::to_string(p_) + " vs " + std::to_string(o.p_));
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;  // p < 2^63 assumed; enforced at FieldSpec level
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace hagge
