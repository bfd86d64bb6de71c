#include "stringy/resolution.hpp"

#include <algorithm>
#include <set>

#include "stringy/hodge.hpp"

namespace stringy {

ResolutionData::ResolutionData(int dimension, std::vector<DivisorInfo> divisors)
    : n_(dimension), divisors_(std::move(divisors)) {
  if (n_ < 0) throw DomainError("negative dimension");
  if (divisors_.size() > kMaxDivisors) {
    throw DomainError("at most " + std::to_string(kMaxDivisors) + " divisors are supported");
  }
  std::set<int> seen;
  for (const auto& d : divisors_) {
    if (d.id <= 0) throw DomainError("divisor ids must be positive");
    if (!seen.insert(d.id).second) {
      throw DomainError("repeated divisor id " + std::to_string(d.id));
    }
  }
  strata_.resize(std::size_t{1} << divisors_.size());
}

Subset ResolutionData::subset_of(std::span<const int> ids) const {
  Subset s = 0;
  for (int id : ids) {
    const auto pos = position_of(id);
    if (!pos) throw DomainError("unknown divisor id " + std::to_string(id));
    const Subset bit = Subset{1} << *pos;
    if (s & bit) throw DomainError("repeated divisor id " + std::to_string(id));
    s |= bit;
  }
  return s;
}

std::vector<int> ResolutionData::ids_of(Subset j) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (contains(j, i)) out.push_back(divisors_[i].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> ResolutionData::position_of(int id) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i].id == id) return i;
  }
  return std::nullopt;
}

long ResolutionData::lattice() const {
  Integer l = 1;
  for (const auto& d : divisors_) l = lcm(l, d.discrepancy.denominator());
  if (!l.fits_slong_p()) throw DomainError("discrepancy denominators too large");
  return l.get_si();
}

bool ResolutionData::gorenstein_canonical() const {
  return std::all_of(divisors_.begin(), divisors_.end(),
                     [](const DivisorInfo& d) { return d.gorenstein_canonical(); });
}

ResolutionData ResolutionData::relabeled(std::span<const std::size_t> order) const {
  if (order.size() != divisors_.size()) throw DomainError("permutation has the wrong size");
  std::vector<DivisorInfo> divisors;
  for (std::size_t i : order) divisors.push_back(divisors_.at(i));
  ResolutionData out(n_, std::move(divisors));
  for (Subset s = 0; s < strata_.size(); ++s) {
    Subset old = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (contains(s, i)) old |= Subset{1} << order[i];
    }
    out.strata_[s] = strata_[old];
  }
  return out;
}

std::string describe_subset(const ResolutionData& data, Subset j) {
  std::string out = "J={";
  bool first = true;
  for (int id : data.ids_of(j)) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kLogTerminal: return "log_terminal";
    case Violation::Kind::kNegativeDimension: return "negative_dimension";
    case Violation::Kind::kDegreeBound: return "degree_bound";
    case Violation::Kind::kDuality: return "poincare_duality";
    case Violation::Kind::kEulerMismatch: return "euler_mismatch";
    case Violation::Kind::kLibgoberWood: return "libgober_wood";
    case Violation::Kind::kMonotonicity: return "monotonicity";
    case Violation::Kind::kDataOnEmptyStratum: return "data_on_empty_stratum";
    case Violation::Kind::kUnknownDivisor: return "unknown_divisor";
    case Violation::Kind::kHodgeDiamond: return "hodge_diamond";
  }
  return "unknown";
}

std::vector<Violation> validate(const ResolutionData& data) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  auto report = [&](Kind k, std::string msg) { out.push_back({k, std::move(msg)}); };

  for (const auto& d : data.divisors()) {
    if (!d.log_terminal()) {
      report(Kind::kLogTerminal, "divisor " + std::to_string(d.id) + " has discrepancy " +
                                     d.discrepancy.str() + " <= -1");
    }
  }

  for (Subset j = 0; j < data.subset_count(); ++j) {
    const StratumData& s = data.stratum(j);
    const int d = data.stratum_dimension(j);
    const std::string where = describe_subset(data, j);

    for (const auto& [id, value] : s.normal_restrictions) {
      if (!data.position_of(id)) {
        report(Kind::kUnknownDivisor, where + ": normal restriction for unknown divisor " +
                                          std::to_string(id));
      }
    }
    if (s.euler && *s.euler != s.e.value_at_one()) {
      report(Kind::kEulerMismatch, where + ": E(1,1) = " + s.e.value_at_one().get_str() +
                                       " but the declared Euler number is " + s.euler->get_str());
    }

    if (s.empty()) {
      const bool stray = (s.c1_cd1 && !s.c1_cd1->is_zero()) ||
                         (s.pullback_c1_cd1 && !s.pullback_c1_cd1->is_zero()) ||
                         std::any_of(s.normal_restrictions.begin(), s.normal_restrictions.end(),
                                     [](const auto& kv) { return !kv.second.is_zero(); });
      if (stray) report(Kind::kDataOnEmptyStratum, where + ": nonzero intersection data on an empty stratum");
      continue;
    }

    if (d < 0) {
      report(Kind::kNegativeDimension, where + ": stratum of dimension " + std::to_string(d) +
                                           " must be empty");
      continue;
    }
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(j, i) && data.stratum(j & ~(Subset{1} << i)).empty()) {
        report(Kind::kMonotonicity, where + " is nonempty but " +
                                        describe_subset(data, j & ~(Subset{1} << i)) +
                                        " is empty");
        break;
      }
    }
    if (s.e.degree_u() > d || s.e.degree_v() > d) {
      report(Kind::kDegreeBound, where + ": E-polynomial exceeds degree " + std::to_string(d));
      continue;
    }
    if (auto bad = s.e.duality_violation(d)) {
      report(Kind::kDuality, where + ": Poincare duality fails at (" + std::to_string(bad->first) +
                                 "," + std::to_string(bad->second) + ")");
      continue;
    }
    if (s.c1_cd1) {
      const Rat inferred = d == 0 ? Rat(0) : inferred_c1_cn1(s.e, d);
      if (inferred != *s.c1_cd1) {
        report(Kind::kLibgoberWood, where + ": c1_cd1 = " + s.c1_cd1->str() +
                                        " but the Hodge numbers force " + inferred.str());
      }
    }
  }
  return out;
}

namespace {

std::string join_messages(const std::vector<Violation>& v) {
  std::string out = "invalid resolution data:";
  for (const auto& x : v) out += "\n  [" + to_string(x.kind) + "] " + x.message;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_messages(violations)), violations_(std::move(violations)) {}

void require_valid(const ResolutionData& data) {
  auto v = validate(data);
  if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace stringy
