#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hagge/errors.hpp"

namespace hagge {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator, so equality is structural.
class Rat {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rat() : v_(0) {}
  explicit Rat(long long n) : v_(n) {}
  explicit Rat(const Int& n) : v_(n) {}
  Rat(Int num, Int den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    v_ = Q(num, den);
  }

  // Accepts "a" or "a/b" with optional sign; normalizes.
  static Rat parse(const std::string& s) {
    auto bad = [&] { return Error(ErrorCode::InvalidScalar, "not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      const std::string n = s.substr(0, slash), d = s.substr(slash + 1);
      if (n.empty() || d.empty() || d.find('/') != std::string::npos) throw bad();
      return Rat(Int(n), Int(d));
    } catch (const std::runtime_error&) {
      throw bad();
    }
  }

  std::string str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

  Int num() const { return numerator(v_); }
  Int den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  // Same-field constant makers; uniform with the prime-field scalar, whose
  // constants must carry the modulus of an existing element.
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long n) const { return Rat(n); }

  Rat operator-() const { return Rat(Q(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(Q(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(Q(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(Q(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero);
    return Rat(Q(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  // Rationals are ordered (used by figure layout, never by the verifiers).
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  int sign() const { return v_.sign(); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

 private:
  using Q = boost::multiprecision::cpp_rational;
  explicit Rat(Q q) : v_(std::move(q)) {}
  Q v_;
};

}  // namespace hagge
