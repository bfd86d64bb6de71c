#pragma once

#include <cstddef>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/rational.hpp"

namespace stringy {

/// Default truncation order: one above the second derivative.
inline constexpr int kDefaultSeriesOrder = 3;

/// Truncated Taylor expansion c_0 + c_1 e + ... + c_k e^k in e = u - 1.
/// Binary operations truncate to the smaller of the two orders.
class SeriesAtOne {
 public:
  explicit SeriesAtOne(int order = kDefaultSeriesOrder);
  SeriesAtOne(std::vector<Rat> coefficients);  // NOLINT

  static SeriesAtOne constant(const Rat& c, int order = kDefaultSeriesOrder);
  /// The series of u itself, 1 + e.
  static SeriesAtOne variable(int order = kDefaultSeriesOrder);
  /// (1 + e)^r for rational r, by the binomial series.
  static SeriesAtOne binomial(const Rat& r, int order = kDefaultSeriesOrder);
  /// Taylor expansion of a polynomial in u.
  static SeriesAtOne of_polynomial(const UniPoly& p, int order = kDefaultSeriesOrder);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Value at u = 1.
  const Rat& value() const { return coeffs_.front(); }
  /// k-th derivative at u = 1, i.e. k! c_k.
  Rat derivative(int k) const;

  /// p(s) by Horner's rule, for a polynomial p and this series s.
  SeriesAtOne compose_into(const UniPoly& p) const;

  SeriesAtOne truncated(int order) const;
  SeriesAtOne reciprocal() const;

  SeriesAtOne operator-() const;
  SeriesAtOne& operator+=(const SeriesAtOne& other);
  SeriesAtOne& operator-=(const SeriesAtOne& other);
  SeriesAtOne& operator*=(const Rat& scalar);
  friend SeriesAtOne operator+(SeriesAtOne lhs, const SeriesAtOne& rhs) { return lhs += rhs; }
  friend SeriesAtOne operator-(SeriesAtOne lhs, const SeriesAtOne& rhs) { return lhs -= rhs; }
  friend SeriesAtOne operator*(SeriesAtOne lhs, const Rat& rhs) { return lhs *= rhs; }
  friend SeriesAtOne operator*(const SeriesAtOne& lhs, const SeriesAtOne& rhs);
  /// Requires a nonzero constant term in the divisor.
  friend SeriesAtOne operator/(const SeriesAtOne& lhs, const SeriesAtOne& rhs);
  friend bool operator==(const SeriesAtOne&, const SeriesAtOne&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Expansion of f_a(u) = (u - 1)/(u^(a+1) - 1) - 1 at u = 1.
/// Throws DomainError unless a > -1, and unless order >= 2. The expansion
/// is always carried out to at least order 3 before truncation.
SeriesAtOne correction_series(const Rat& a, int order = kDefaultSeriesOrder);

/// Value of f_a at u = 1, -a/(a+1).
Rat correction_limit(const Rat& a);

}  // namespace stringy
