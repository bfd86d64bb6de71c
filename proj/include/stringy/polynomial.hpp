#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stringy/rational.hpp"

namespace stringy {

/// Dense univariate polynomial with rational coefficients.
/// coefficients()[i] is the coefficient of x^i; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rat> coefficients);
  explicit UniPoly(std::vector<Rat> coefficients);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, std::size_t degree);

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coefficient(std::size_t i) const;
  const Rat& leading() const { return coeffs_.back(); }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rat& scalar);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct QuotientRemainder {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws DomainError for a zero divisor.
QuotientRemainder divmod(const UniPoly& dividend, const UniPoly& divisor);

/// Monic greatest common divisor over Q (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Exponent pair (p, q) of u^p v^q.
using Exponent = std::pair<int, int>;

/// Sparse bivariate polynomial in u, v with integer coefficients.
/// No zero coefficient is ever stored; iteration is lexicographic in (p, q).
class BiPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  BiPoly() = default;
  BiPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms);
  explicit BiPoly(Terms terms);

  static BiPoly constant(const Integer& c);
  static BiPoly monomial(const Integer& c, int p, int q);
  /// D(uv) for an integer-coefficient D(t); throws DomainError otherwise.
  static BiPoly from_diagonal(const UniPoly& d);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int p, int q) const;
  /// Largest p (resp. q) appearing; -1 for the zero polynomial.
  int degree_u() const;
  int degree_v() const;

  Rat eval(const Rat& u, const Rat& v) const;
  /// E(u, 1) as a polynomial in u.
  UniPoly at_v_one() const;
  /// E(1, 1), the sum of all coefficients.
  Integer value_at_one() const;

  /// First (p, q) with coefficient(p, q) != coefficient(d - p, d - q), if any.
  std::optional<Exponent> duality_violation(int d) const;
  /// First (p, q) with coefficient(p, q) != coefficient(q, p), if any.
  std::optional<Exponent> conjugation_violation() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Integer& scalar);
  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(BiPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str() const;

 private:
  void add_term(const Exponent& e, const Integer& c);
  Terms terms_;
};

/// Exact value of P at (u0, v0).
inline Rat eval_bipoly(const BiPoly& p, const Rat& u0, const Rat& v0) {
  return p.eval(u0, v0);
}

/// Why N is not D(uv) times a polynomial: on the diagonal u^i v^j with
/// i - j = diagonal, division by D(t) leaves the given nonzero remainder
/// (or a quotient with non-integer coefficients when remainder is zero).
struct DivisionFailure {
  int diagonal = 0;
  UniPoly remainder;
  std::string reason;
};

using DivisionResult = std::variant<BiPoly, DivisionFailure>;

/// Solves Q * D(uv) = N for a polynomial Q with integer coefficients.
/// Multiplication by D(uv) preserves p - q, so N splits along the
/// diagonals p - q = k and each diagonal is a univariate division by D.
DivisionResult exact_divide(const BiPoly& numerator, const UniPoly& divisor);

}  // namespace stringy
