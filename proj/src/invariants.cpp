#include "stringy/invariants.hpp"

#include <algorithm>

#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"

namespace stringy {

namespace {

std::vector<std::size_t> positions(const ResolutionData& data, Subset j) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data.divisor_count(); ++i) {
    if (contains(j, i)) out.push_back(i);
  }
  return out;
}

// prod_{j in J} -a_j/(a_j+1)
Rat limit_product(const ResolutionData& data, Subset j) {
  Rat p(1);
  for (std::size_t i : positions(data, j)) p *= correction_limit(data.divisors()[i].discrepancy);
  return p;
}

// Values of f_a and its first two derivatives at u = 1.
struct FactorValues {
  Rat value, first, second;
};

FactorValues factor_values(const Rat& a) {
  const Rat b = a + 1;
  return {-a / b, -a / (Rat(2) * b), a * (a + 2) / (Rat(6) * b)};
}

Rat stratum_euler(const StratumData& s) { return Rat(s.e.value_at_one()); }

Rat stratum_c1_cd1(const StratumData& s, int d) {
  if (d <= 0) return Rat(0);
  return s.c1_cd1 ? *s.c1_cd1 : inferred_c1_cn1(s.e, d);
}

const Rat& require_field(const std::optional<Rat>& field, const ResolutionData& data, Subset j,
                         const char* what) {
  if (!field) {
    throw IncompleteDataError(describe_subset(data, j) + " has no " + what);
  }
  return *field;
}

// prod f_j and its first two derivatives at u = 1 by the product rule.
struct ProductDerivatives {
  Rat value, first, second;
};

ProductDerivatives product_derivatives(const std::vector<FactorValues>& f) {
  ProductDerivatives out{Rat(1), Rat(0), Rat(0)};
  for (const auto& g : f) {
    // (P g)' = P' g + P g',  (P g)'' = P'' g + 2 P' g' + P g''
    ProductDerivatives next;
    next.value = out.value * g.value;
    next.first = out.first * g.value + out.value * g.first;
    next.second = out.second * g.value + Rat(2) * out.first * g.first + out.value * g.second;
    out = next;
  }
  return out;
}

std::vector<FactorValues> stratum_factors(const ResolutionData& data, Subset j) {
  std::vector<FactorValues> f;
  for (std::size_t i : positions(data, j)) f.push_back(factor_values(data.divisors()[i].discrepancy));
  return f;
}

UniPoly geometric_sum(long b) {
  std::vector<Rat> c(static_cast<std::size_t>(b), Rat(1));
  return UniPoly(std::move(c));
}

}  // namespace

std::vector<Rat> StringyTerm::exponents() const {
  std::vector<Rat> out;
  for (const auto& a : discrepancies) out.push_back(a + 1);
  return out;
}

StringyFunction stringy_function(const ResolutionData& data) {
  require_valid(data);
  StringyFunction f;
  f.dimension = data.dimension();
  f.lattice = data.lattice();
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    StringyTerm t;
    t.subset = j;
    t.e = s.e;
    for (std::size_t i : positions(data, j)) t.discrepancies.push_back(data.divisors()[i].discrepancy);
    f.terms.push_back(std::move(t));
  }
  return f;
}

Rat evaluate(const StringyFunction& f, const Rat& u0, const Rat& v0) {
  const Rat t0 = u0 * v0;
  const bool at_one = t0 == Rat(1);
  Rat root;
  if (!at_one) root = lattice_root(t0, f.lattice);
  Rat total;
  for (const auto& term : f.terms) {
    Rat value = term.e.eval(u0, v0);
    for (const auto& a : term.discrepancies) {
      if (at_one) {
        value *= correction_limit(a);
        continue;
      }
      const Rat scaled = (a + 1) * Rat(f.lattice);
      const Rat power = root.pow(scaled.numerator().get_si());
      if (power == Rat(1)) {
        throw PoleError("(uv)^" + (a + 1).str() + " = 1 at uv = " + t0.str());
      }
      value *= (t0 - 1) / (power - 1) - 1;
    }
    total += value;
  }
  return total;
}

LatticeFunction restrict_v1(const StringyFunction& f) {
  std::vector<LatticeTerm> terms;
  for (const auto& term : f.terms) {
    LatticeTerm lt;
    const UniPoly base = term.e.at_v_one();
    for (std::size_t i = 0; i < base.coefficients().size(); ++i) {
      if (!base.coefficients()[i].is_zero()) {
        lt.numerator[Rat(static_cast<std::int64_t>(i))] = base.coefficients()[i];
      }
    }
    for (const auto& b : term.exponents()) {
      // f_a = (u - u^b)/(u^b - 1)
      PuiseuxPoly factor;
      factor[Rat(1)] += Rat(1);
      factor[b] += Rat(-1);
      std::erase_if(factor, [](const auto& kv) { return kv.second.is_zero(); });
      lt.numerator = puiseux_product(lt.numerator, factor);
      lt.pole_exponents.push_back(b);
    }
    terms.push_back(std::move(lt));
  }
  return lattice_restrict(terms, f.lattice);
}

SeriesAtOne stringy_series(const StringyFunction& f, int order) {
  SeriesAtOne total(order);
  for (const auto& term : f.terms) {
    SeriesAtOne s = SeriesAtOne::of_polynomial(term.e.at_v_one(), order);
    for (const auto& a : term.discrepancies) s = s * correction_series(a, std::max(order, 2));
    total += s;
  }
  return total;
}

Rat derivative_at_one(const StringyFunction& f, int order) {
  if (order < 0 || order > kDefaultSeriesOrder) {
    throw DomainError("derivative order must be between 0 and 3");
  }
  return stringy_series(f).derivative(order);
}

Rat stringy_euler(const ResolutionData& data) {
  require_valid(data);
  Rat total;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    total += stratum_euler(s) * limit_product(data, j);
  }
  return total;
}

Rat c_st_1_n1(const ResolutionData& data) {
  require_valid(data);
  Rat total;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty() || data.stratum_dimension(j) <= 0) continue;
    total += require_field(s.pullback_c1_cd1, data, j, "pullback_c1_cd1") * limit_product(data, j);
  }
  return total;
}

Rat first_derivative_closed_form(const ResolutionData& data) {
  require_valid(data);
  Rat total;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    const int d = data.stratum_dimension(j);
    const Rat c = stratum_euler(s);
    const Rat e1 = Rat(d, 2) * c;  // d/du E(D_J; u, 1) at 1, by duality
    const ProductDerivatives p = product_derivatives(stratum_factors(data, j));
    total += e1 * p.value + c * p.first;
  }
  return total;
}

Rat second_derivative_closed_form(const ResolutionData& data) {
  require_valid(data);
  Rat total;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    const int d = data.stratum_dimension(j);
    const Rat c = stratum_euler(s);
    const Rat e1 = Rat(d, 2) * c;
    const Rat e2 = Rat(3 * d * d - 5 * d, 12) * c + stratum_c1_cd1(s, d) / Rat(6);
    const ProductDerivatives p = product_derivatives(stratum_factors(data, j));
    total += e2 * p.value + Rat(2) * e1 * p.first + c * p.second;
  }
  return total;
}

Report check_euler_limit(const ResolutionData& data) {
  return make_report("euler_limit", derivative_at_one(stringy_function(data), 0),
                     stringy_euler(data));
}

Report check_first_derivative_identity(const ResolutionData& data) {
  const Rat e_st = stringy_euler(data);
  Report r = make_report("first_derivative_identity",
                         derivative_at_one(stringy_function(data), 1),
                         Rat(data.dimension(), 2) * e_st);
  r.extras["e_st"] = e_st;
  return r;
}

Report check_main_identity(const ResolutionData& data) {
  const int n = data.dimension();
  const Rat e_st = stringy_euler(data);
  const Rat c_st = c_st_1_n1(data);
  Report r = make_report("main_identity", derivative_at_one(stringy_function(data), 2),
                         Rat(3 * n * n - 5 * n, 12) * e_st + c_st / Rat(6));
  r.extras["e_st"] = e_st;
  r.extras["c_st_1_n1"] = c_st;
  return r;
}

Report check_derivative_paths(const ResolutionData& data, int order) {
  if (order != 1 && order != 2) throw DomainError("derivative paths exist for orders 1 and 2");
  const Rat closed =
      order == 1 ? first_derivative_closed_form(data) : second_derivative_closed_form(data);
  return make_report(order == 1 ? "first_derivative_paths" : "second_derivative_paths",
                     derivative_at_one(stringy_function(data), order), closed);
}

Report check_relat_div(const ResolutionData& data) {
  require_valid(data);
  Rat lhs;
  Rat correction;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    const int d = data.stratum_dimension(j);
    const Rat weight = limit_product(data, j);
    if (d > 0) lhs += require_field(s.c1_cd1, data, j, "c1_cd1") * weight;
    Rat shift;
    for (std::size_t i : positions(data, j)) shift += data.divisors()[i].discrepancy + 1;
    correction += shift * stratum_euler(s) * weight;
  }
  const Rat c_st = c_st_1_n1(data);
  Report r = make_report("relative_divisor_relation", lhs, c_st + correction);
  r.extras["c_st_1_n1"] = c_st;
  return r;
}

bool AdjunctionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Report& r) { return r.passed(); });
}

AdjunctionReport check_adjunction_recursion(const ResolutionData& data) {
  AdjunctionReport out;
  // c_1(O_{D_S}(D_id)) . c_{d_S - 1}(D_S), zero on empty or 0-dimensional strata
  auto restriction = [&](Subset s, int id) -> std::optional<Rat> {
    const StratumData& st = data.stratum(s);
    if (st.empty() || data.stratum_dimension(s) <= 0) return Rat(0);
    auto it = st.normal_restrictions.find(id);
    if (it == st.normal_restrictions.end()) return std::nullopt;
    return it->second;
  };
  for (Subset j = 1; j < data.subset_count(); ++j) {
    for (std::size_t i : positions(data, j)) {
      const Subset k = j & ~(Subset{1} << i);
      if (data.stratum(k).empty()) continue;
      const int id = data.divisors()[i].id;
      const std::string name =
          "adjunction[" + describe_subset(data, j) + ",j=" + std::to_string(id) + "]";
      const auto outer = restriction(k, id);
      const auto inner = restriction(j, id);
      if (!outer || !inner) {
        out.skipped.push_back(name + ": missing normal restriction data");
        continue;
      }
      out.checks.push_back(make_report(name, *outer - stratum_euler(data.stratum(j)), *inner));
    }
  }
  return out;
}

std::vector<std::string> hodge_table_violations(const HodgeTable& table, int n) {
  std::vector<std::string> out;
  auto h = [&](int p, int q) {
    auto it = table.find({p, q});
    return it == table.end() ? Integer(0) : it->second;
  };
  auto pq = [](int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  if (h(0, 0) != 1) out.push_back("h_st^{0,0} = " + h(0, 0).get_str() + ", expected 1");
  if (h(n, n) != 1) out.push_back("h_st^{n,n} = " + h(n, n).get_str() + ", expected 1");
  for (const auto& [e, v] : table) {
    const auto [p, q] = e;
    if (p > n || q > n) {
      out.push_back("h_st" + pq(p, q) + " nonzero beyond dimension " + std::to_string(n));
      continue;
    }
    if (h(q, p) != v) out.push_back("h_st" + pq(p, q) + " != h_st" + pq(q, p));
    if (h(n - p, n - q) != v) out.push_back("h_st" + pq(p, q) + " != h_st" + pq(n - p, n - q));
  }
  return out;
}

StringyHodgeResult stringy_hodge_numbers(const ResolutionData& data) {
  if (!data.gorenstein_canonical()) {
    throw NotApplicableError(
        "stringy Hodge numbers need nonnegative integer discrepancies (Gorenstein canonical)");
  }
  require_valid(data);
  // f_b(t) = (1 - S_b(t)) / S_b(t), S_b = 1 + t + ... + t^(b-1)
  std::vector<UniPoly> sums;
  UniPoly denominator{Rat(1)};
  for (const auto& d : data.divisors()) {
    sums.push_back(geometric_sum((d.discrepancy + 1).numerator().get_si()));
    denominator = denominator * sums.back();
  }
  BiPoly numerator;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    UniPoly weight{Rat(1)};
    for (std::size_t i = 0; i < sums.size(); ++i) {
      weight = weight * (contains(j, i) ? UniPoly{Rat(1)} - sums[i] : sums[i]);
    }
    numerator += s.e * BiPoly::from_diagonal(weight);
  }

  StringyHodgeResult result;
  DivisionResult divided = exact_divide(numerator, denominator);
  if (auto* failure = std::get_if<DivisionFailure>(&divided)) {
    result.failure = std::move(*failure);
    return result;
  }
  BiPoly& e_st = std::get<BiPoly>(divided);
  HodgeTable table;
  for (const auto& [e, c] : e_st.terms()) table[e] = (e.first + e.second) % 2 == 0 ? c : Integer(-c);
  result.property_violations = hodge_table_violations(table, data.dimension());
  result.polynomial = std::move(e_st);
  result.table = std::move(table);
  return result;
}

namespace {

Rat table_moment(const HodgeTable& table, int n) {
  Rat acc;
  const Rat half(n, 2);
  for (const auto& [e, h] : table) {
    const Rat sign = (e.first + e.second) % 2 == 0 ? Rat(1) : Rat(-1);
    const Rat shift = Rat(e.first) - half;
    acc += sign * Rat(h) * shift * shift;
  }
  return acc;
}

}  // namespace

Report check_stringy_hodge_moment(const ResolutionData& data, const HodgeTable& table) {
  const int n = data.dimension();
  const Rat e_st = stringy_euler(data);
  const Rat c_st = c_st_1_n1(data);
  return make_report("stringy_hodge_moment", table_moment(table, n),
                     Rat(n, 12) * e_st + c_st / Rat(6));
}

Report check_stringy_calabi_yau_relation(const ResolutionData& data, const HodgeTable& table) {
  const int n = data.dimension();
  Rat table_euler;
  for (const auto& [e, h] : table) table_euler += (e.first + e.second) % 2 == 0 ? Rat(h) : -Rat(h);
  const Rat e_st = stringy_euler(data);
  Report r = make_report("stringy_calabi_yau_relation", table_moment(table, n), Rat(n, 12) * e_st);
  r.extras["table_euler"] = table_euler;
  if (table_euler != e_st) r.notes.push_back("table Euler number differs from e_st");
  return r;
}

}  // namespace stringy
