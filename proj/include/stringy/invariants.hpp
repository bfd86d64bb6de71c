#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringy/lattice.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/report.hpp"
#include "stringy/resolution.hpp"
#include "stringy/series.hpp"

namespace stringy {

/// One summand E(D_J; u, v) * prod_{j in J} f_{a_j}(uv) of the stringy
/// E-function, where f_a(t) = (t - 1)/(t^(a+1) - 1) - 1.
struct StringyTerm {
  Subset subset = 0;
  BiPoly e;
  std::vector<Rat> discrepancies;

  /// The exponents a_j + 1.
  std::vector<Rat> exponents() const;
};

struct StringyFunction {
  int dimension = 0;
  long lattice = 1;
  std::vector<StringyTerm> terms;
};

/// Symbolic E_st over all nonempty strata. Throws ValidationError.
StringyFunction stringy_function(const ResolutionData& data);

/// Exact E_st(u0, v0). At u0 v0 = 1 each factor takes its limit value
/// -a/(a+1). Throws UnsupportedPointError when u0 v0 is not an L-th power
/// (nonnegative when L > 1) and PoleError when (u0 v0)^(a+1) = 1 elsewhere.
Rat evaluate(const StringyFunction& f, const Rat& u0, const Rat& v0);

/// E_st(u, 1) as a reduced fraction in x = u^(1/L).
LatticeFunction restrict_v1(const StringyFunction& f);

/// Taylor expansion of E_st(u, 1) at u = 1 through the series engine.
SeriesAtOne stringy_series(const StringyFunction& f, int order = kDefaultSeriesOrder);

/// k-th derivative of E_st(u, 1) at u = 1 (k = 0 gives the limit), k <= 3.
Rat derivative_at_one(const StringyFunction& f, int order);

/// sum_J c_{n-|J|}(D_J) prod_{j in J} (-a_j/(a_j+1)).
Rat stringy_euler(const ResolutionData& data);

/// sum_J rho^* c_1(X) . c_{n-|J|-1}(D_J) prod_{j in J} (-a_j/(a_j+1)),
/// skipping empty and zero-dimensional strata. IncompleteDataError when a
/// nonempty positive-dimensional stratum lacks pullback_c1_cd1.
Rat c_st_1_n1(const ResolutionData& data);

/// First and second derivative of E_st(u,1) at 1 from per-stratum Chern
/// data and the closed-form values of f_a and its derivatives at 1, with no
/// series expansion. A missing c1_cd1 is inferred from the stratum's
/// Hodge numbers.
Rat first_derivative_closed_form(const ResolutionData& data);
Rat second_derivative_closed_form(const ResolutionData& data);

/// Series limit at u = 1 against the closed stringy Euler number.
Report check_euler_limit(const ResolutionData& data);

/// d/du E_st(u,1)|_1 = (n/2) e_st.
Report check_first_derivative_identity(const ResolutionData& data);

/// d^2/du^2 E_st(u,1)|_1 = ((3n^2-5n)/12) e_st + (1/6) c_st^{1,n-1}.
Report check_main_identity(const ResolutionData& data);

/// Series engine against closed_form for derivative `order` (1 or 2).
Report check_derivative_paths(const ResolutionData& data, int order);

/// sum_J c_1(D_J)c_{d-1}(D_J) P_J
///   = c_st^{1,n-1} + sum_J (sum_{j in J} (a_j+1)) c_d(D_J) P_J,
/// with P_J = prod_{j in J} (-a_j/(a_j+1)).
Report check_relat_div(const ResolutionData& data);

/// Per-pair outcome of the adjunction recursion
///   c_1(O_{D_{J-j}}(D_j)) c_d(D_{J-j}) - c_d(D_J) = c_1(O_{D_J}(D_j)) c_{d-1}(D_J),
/// d = n - |J|. Pairs missing restriction data are listed in `skipped`.
struct AdjunctionReport {
  std::vector<Report> checks;
  std::vector<std::string> skipped;

  bool passed() const;
};

AdjunctionReport check_adjunction_recursion(const ResolutionData& data);

/// h_st^{p,q} by exponent, nonzero entries only.
using HodgeTable = std::map<Exponent, Integer>;

struct StringyHodgeResult {
  /// E_st when it is a polynomial.
  std::optional<BiPoly> polynomial;
  std::optional<HodgeTable> table;
  /// Set when E_st is not a polynomial.
  std::optional<DivisionFailure> failure;
  /// Broken unit-corner, symmetry or vanishing properties of the table.
  std::vector<std::string> property_violations;

  bool exists() const { return table.has_value(); }
};

/// Stringy Hodge numbers for Gorenstein canonical data. NotApplicableError
/// when some discrepancy is not a nonnegative integer; ValidationError for
/// invalid data. The table properties are checked on every extraction.
StringyHodgeResult stringy_hodge_numbers(const ResolutionData& data);

/// Unit corners, h^{p,q} = h^{q,p} = h^{n-p,n-q}, and vanishing outside
/// [0, n]^2.
std::vector<std::string> hodge_table_violations(const HodgeTable& table, int n);

/// sum (-1)^{p+q} h_st^{p,q} (p - n/2)^2 = (n/12) e_st + (1/6) c_st^{1,n-1},
/// for data whose stringy Hodge numbers exist.
Report check_stringy_hodge_moment(const ResolutionData& data, const HodgeTable& table);

/// sum (-1)^{p+q} h_st^{p,q} (p - n/2)^2 = (n/12) e_st, the Calabi-Yau form.
Report check_stringy_calabi_yau_relation(const ResolutionData& data, const HodgeTable& table);

}  // namespace stringy
