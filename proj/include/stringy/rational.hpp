#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stringy {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT: implicit on purpose, integers are rationals
  Rat(const Integer& value);  // NOLINT
  Rat(const Integer& numerator, const Integer& denominator);
  Rat(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "p", "-p" and "p/q" with decimal digits only.
  static Rat parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }

  /// Re-reduces to lowest terms. Values are always canonical, so this is
  /// the identity; it exists so canonicalization can be tested directly.
  Rat normalized() const;

  Rat pow(long exponent) const;
  Rat abs() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rat(mpq_class value);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact k-th root of a rational. Returns false when value is not a k-th power.
/// Negative inputs have a root only for odd k.
bool exact_root(const Rat& value, unsigned long k, Rat& root);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace stringy
