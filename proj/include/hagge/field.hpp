#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "hagge/errors.hpp"
#include "hagge/prime_field.hpp"
#include "hagge/rational.hpp"

namespace hagge {

// Exact field scalar: value-semantic, structural equality on canonical form,
// and able to mint same-field constants from any existing element.
template <class F>
concept Field = requires(const F a, const F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::same_as<F>;
  { a.one() } -> std::same_as<F>;
  { a.from_int(1LL) } -> std::same_as<F>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <Field F>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
  static constexpr bool is_rational = true;
  static std::string name() { return "rational"; }
};

template <>
struct FieldTraits<Fp> {
  static constexpr bool is_rational = false;
  static std::string name() { return "prime"; }
};

/// Runtime description of the field backend: rationals, or GF(p) with p an
/// odd prime. Characteristic 2 is rejected outright.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    require_odd_prime(p);
    if (p >= (1ull << 62)) throw Error(ErrorCode::NotOddPrime, "modulus too large");
    return FieldSpec{Kind::Prime, p};
  }

  bool is_rational() const { return kind == Kind::Rationals; }
  bool operator==(const FieldSpec&) const = default;

  std::string str() const {
    return is_rational() ? "rational" : "prime:" + std::to_string(p);
  }

  // "rational" or "prime:P"
  static FieldSpec parse(const std::string& s) {
    if (s == "rational") return rationals();
    if (s.rfind("prime:", 0) == 0) {
      try {
        std::size_t pos = 0;
        const unsigned long long p = std::stoull(s.substr(6), &pos);
        if (pos != s.size() - 6) throw std::invalid_argument(s);
        return prime(p);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidScalar, "bad field spec '" + s + "'");
      }
    }
    throw Error(ErrorCode::InvalidScalar, "bad field spec '" + s + "'");
  }
};

// Constructs scalars of a concrete backend; the prime-field maker carries p.
template <Field F>
struct ScalarMaker;

template <>
struct ScalarMaker<Rat> {
  Rat from_int(long long n) const { return Rat(n); }
  Rat parse(const std::string& s) const { return Rat::parse(s); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

template <>
struct ScalarMaker<Fp> {
  std::uint64_t p;
  Fp from_int(long long n) const { return Fp::from_signed(n, p); }
  Fp parse(const std::string& s) const { return Fp::parse(s, p); }
  FieldSpec spec() const { return FieldSpec::prime(p); }
};

// Runtime-to-compile-time dispatch over the two backends.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(ScalarMaker<Rat>{});
  return fn(ScalarMaker<Fp>{spec.p});
}

}  // namespace hagge
