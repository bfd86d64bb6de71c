#pragma once

#include <map>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/rational.hpp"
#include "stringy/series.hpp"

namespace stringy {

/// Finite sum of c * u^e with rational exponents e >= 0.
using PuiseuxPoly = std::map<Rat, Rat>;

PuiseuxPoly puiseux_product(const PuiseuxPoly& lhs, const PuiseuxPoly& rhs);

/// numerator(u) / prod_k (u^{m_k} - 1), every m_k > 0.
struct LatticeTerm {
  PuiseuxPoly numerator;
  std::vector<Rat> pole_exponents;
};

/// A rational function of u^(1/L), stored as a reduced fraction in
/// x = u^(1/L). The denominator is monic and coprime to the numerator.
class LatticeFunction {
 public:
  LatticeFunction(long lattice, UniPoly numerator, UniPoly denominator);

  long lattice() const { return lattice_; }
  const UniPoly& numerator() const { return numerator_; }
  const UniPoly& denominator() const { return denominator_; }

  /// Value at x = x0. Throws PoleError where the denominator vanishes.
  Rat eval_x(const Rat& x0) const;
  /// Value at u = u0, which must be the L-th power of a rational (a
  /// nonnegative one when L > 1); UnsupportedPointError otherwise.
  Rat eval_u(const Rat& u0) const;

  /// Taylor expansion in e = u - 1.
  SeriesAtOne series_at_one(int order = kDefaultSeriesOrder) const;

  std::string str() const;

 private:
  long lattice_;
  UniPoly numerator_;
  UniPoly denominator_;
};

/// Rewrites sum_i terms[i] over x = u^(1/L) and reduces the result.
/// Denominators u^m - 1 = x^(mL) - 1 factor into cyclotomic polynomials,
/// which are irreducible over Q, so cancelling them one at a time yields a
/// fraction in lowest terms. Throws DomainError if some exponent times L is
/// not an integer, or if a pole exponent is not positive.
LatticeFunction lattice_restrict(const std::vector<LatticeTerm>& terms, long lattice);

/// The d-th cyclotomic polynomial.
UniPoly cyclotomic(long d);

/// x0 with x0^L = u0 (x0 >= 0 when L > 1), or UnsupportedPointError.
Rat lattice_root(const Rat& u0, long lattice);

}  // namespace stringy
