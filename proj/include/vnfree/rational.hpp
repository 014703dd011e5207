#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "vnfree/errors.hpp"

namespace vnfree {

// Arbitrary-precision exact fraction. Always stored reduced with positive
// denominator; every operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw RangeError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational from_string(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_positive() const { return sgn(v_) > 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw RangeError("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    const int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Canonical form: "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

// A rational or positive infinity. Houses free-group parameters and free
// dimension values; the order is total with infinity greatest.
class ExtParam {
 public:
  ExtParam() : v_(Rational(0)) {}
  ExtParam(Rational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtParam(long v) : v_(Rational(v)) {}       // NOLINT(google-explicit-constructor)
  static ExtParam infinity() { return ExtParam(Inf{}); }

  bool is_infinite() const { return !v_.has_value(); }
  const Rational& finite() const {
    if (is_infinite()) throw InternalInvariantViolation("finite() on infinity");
    return *v_;
  }

  // infinity + x = infinity.
  ExtParam operator+(const ExtParam& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return ExtParam(*v_ + *o.v_);
  }

  bool operator==(const ExtParam& o) const {
    if (is_infinite() || o.is_infinite()) return is_infinite() == o.is_infinite();
    return *v_ == *o.v_;
  }
  std::strong_ordering operator<=>(const ExtParam& o) const {
    if (is_infinite() && o.is_infinite()) return std::strong_ordering::equal;
    if (is_infinite()) return std::strong_ordering::greater;
    if (o.is_infinite()) return std::strong_ordering::less;
    return *v_ <=> *o.v_;
  }

  std::string str() const { return is_infinite() ? "inf" : v_->str(); }

 private:
  struct Inf {};
  explicit ExtParam(Inf) : v_(std::nullopt) {}
  std::optional<Rational> v_;
};

}  // namespace vnfree
