#include "stringy/lattice.hpp"

#include <algorithm>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

long integral_exponent(const Rat& e, long lattice) {
  const Rat scaled = e * Rat(lattice);
  if (!scaled.is_integer() || !scaled.numerator().fits_slong_p()) {
    throw DomainError("exponent " + e.str() + " is not a multiple of 1/" +
                      std::to_string(lattice));
  }
  return scaled.numerator().get_si();
}

std::vector<long> divisors_of(long m) {
  std::vector<long> out;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

// Cyclotomic polynomials are built recursively; the table lives only for
// the duration of one computation.
class CyclotomicTable {
 public:
  const UniPoly& get(long d) {
    auto it = table_.find(d);
    if (it != table_.end()) return it->second;
    UniPoly p = UniPoly::monomial(Rat(1), static_cast<std::size_t>(d)) - UniPoly{Rat(1)};
    for (long e : divisors_of(d)) {
      if (e == d) continue;
      p = divmod(p, get(e)).quotient;
    }
    return table_.emplace(d, std::move(p)).first->second;
  }

 private:
  std::map<long, UniPoly> table_;
};

UniPoly power_product(CyclotomicTable& table, const std::map<long, int>& mult) {
  UniPoly out{Rat(1)};
  for (const auto& [d, k] : mult) {
    for (int i = 0; i < k; ++i) out = out * table.get(d);
  }
  return out;
}

}  // namespace

PuiseuxPoly puiseux_product(const PuiseuxPoly& lhs, const PuiseuxPoly& rhs) {
  PuiseuxPoly out;
  for (const auto& [ea, ca] : lhs) {
    for (const auto& [eb, cb] : rhs) {
      Rat& slot = out[ea + eb];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

UniPoly cyclotomic(long d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  CyclotomicTable table;
  return table.get(d);
}

Rat lattice_root(const Rat& u0, long lattice) {
  if (lattice < 1) throw DomainError("lattice must be positive");
  if (lattice == 1) return u0;
  if (u0.sign() < 0) {
    throw UnsupportedPointError("negative point " + u0.str() + " with fractional exponents");
  }
  Rat root;
  if (!exact_root(u0, static_cast<unsigned long>(lattice), root)) {
    throw UnsupportedPointError(u0.str() + " is not the " + std::to_string(lattice) +
                                "-th power of a rational");
  }
  return root;
}

LatticeFunction::LatticeFunction(long lattice, UniPoly numerator, UniPoly denominator)
    : lattice_(lattice), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (lattice_ < 1) throw DomainError("lattice must be positive");
  if (denominator_.is_zero()) throw DomainError("zero denominator");
  const Rat lead = denominator_.leading();
  if (lead != Rat(1)) {
    numerator_ *= Rat(1) / lead;
    denominator_ *= Rat(1) / lead;
  }
}

Rat LatticeFunction::eval_x(const Rat& x0) const {
  const Rat d = denominator_.eval(x0);
  if (d.is_zero()) throw PoleError("pole at x = " + x0.str());
  return numerator_.eval(x0) / d;
}

Rat LatticeFunction::eval_u(const Rat& u0) const { return eval_x(lattice_root(u0, lattice_)); }

SeriesAtOne LatticeFunction::series_at_one(int order) const {
  const SeriesAtOne x = SeriesAtOne::binomial(Rat(1, lattice_), order);
  return x.compose_into(numerator_) / x.compose_into(denominator_);
}

std::string LatticeFunction::str() const {
  const char var = lattice_ == 1 ? 'u' : 'x';
  return "(" + numerator_.str(var) + ") / (" + denominator_.str(var) + ")";
}

LatticeFunction lattice_restrict(const std::vector<LatticeTerm>& terms, long lattice) {
  if (lattice < 1) throw DomainError("lattice must be positive");
  CyclotomicTable table;

  struct Converted {
    UniPoly numerator;
    std::map<long, int> poles;
  };
  std::vector<Converted> converted;
  std::map<long, int> common;
  for (const auto& term : terms) {
    Converted c;
    for (const auto& [e, coeff] : term.numerator) {
      const long k = integral_exponent(e, lattice);
      if (k < 0) throw DomainError("negative exponent " + e.str());
      c.numerator += UniPoly::monomial(coeff, static_cast<std::size_t>(k));
    }
    for (const auto& m : term.pole_exponents) {
      const long k = integral_exponent(m, lattice);
      if (k <= 0) throw DomainError("pole exponent " + m.str() + " must be positive");
      for (long d : divisors_of(k)) ++c.poles[d];
    }
    for (const auto& [d, k] : c.poles) common[d] = std::max(common[d], k);
    converted.push_back(std::move(c));
  }

  UniPoly numerator;
  for (auto& c : converted) {
    std::map<long, int> missing;
    for (const auto& [d, k] : common) {
      auto it = c.poles.find(d);
      const int have = it == c.poles.end() ? 0 : it->second;
      if (k > have) missing[d] = k - have;
    }
    numerator += c.numerator * power_product(table, missing);
  }

  if (numerator.is_zero()) return LatticeFunction(lattice, {}, UniPoly{Rat(1)});

  for (auto& [d, k] : common) {
    const UniPoly& phi = table.get(d);
    while (k > 0) {
      auto [q, r] = divmod(numerator, phi);
      if (!r.is_zero()) break;
      numerator = std::move(q);
      --k;
    }
  }
  return LatticeFunction(lattice, std::move(numerator), power_product(table, common));
}

}  // namespace stringy
