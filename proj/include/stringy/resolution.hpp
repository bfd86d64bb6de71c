#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stringy/errors.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/rational.hpp"

namespace stringy {

/// Exceptional divisor D_i with discrepancy a_i in K_Y = rho^* K_X + sum a_i D_i.
struct DivisorInfo {
  int id = 0;
  Rat discrepancy;

  bool log_terminal() const { return discrepancy > Rat(-1); }
  bool gorenstein_canonical() const {
    return discrepancy.is_integer() && discrepancy.sign() >= 0;
  }
};

/// Subset J of the divisors as a bit mask over divisor positions.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline bool contains(Subset s, std::size_t position) { return (s >> position) & 1U; }

/// Data attached to the stratum D_J (J empty means Y itself). E = 0 marks
/// an empty stratum.
struct StratumData {
  BiPoly e;
  /// Declared Euler number; when present it must equal E(1,1).
  std::optional<Integer> euler;
  /// c_1(D_J) . c_{d-1}(D_J)
  std::optional<Rat> c1_cd1;
  /// rho^* c_1(X) . c_{d-1}(D_J)
  std::optional<Rat> pullback_c1_cd1;
  /// divisor id j -> c_1(O_{D_J}(D_j)) . c_{d-1}(D_J)
  std::map<int, Rat> normal_restrictions;

  bool empty() const { return e.is_zero(); }
};

/// A resolution rho: Y -> X with simple normal crossing exceptional divisor,
/// described by its discrepancies and the data of all 2^r strata.
class ResolutionData {
 public:
  static constexpr std::size_t kMaxDivisors = 16;

  /// All strata start empty. Throws DomainError for a negative dimension,
  /// more than kMaxDivisors divisors, or repeated or nonpositive ids.
  ResolutionData(int dimension, std::vector<DivisorInfo> divisors);

  int dimension() const { return n_; }
  std::size_t divisor_count() const { return divisors_.size(); }
  const std::vector<DivisorInfo>& divisors() const { return divisors_; }
  Subset full_subset() const { return static_cast<Subset>(strata_.size() - 1); }
  std::size_t subset_count() const { return strata_.size(); }

  StratumData& stratum(Subset j) { return strata_.at(j); }
  const StratumData& stratum(Subset j) const { return strata_.at(j); }
  int stratum_dimension(Subset j) const { return n_ - subset_size(j); }

  /// Subset for a list of divisor ids; DomainError for unknown or repeated ids.
  Subset subset_of(std::span<const int> ids) const;
  std::vector<int> ids_of(Subset j) const;
  /// Position of the divisor with this id, if any.
  std::optional<std::size_t> position_of(int id) const;

  /// Least common multiple of the discrepancy denominators.
  long lattice() const;
  bool gorenstein_canonical() const;

  /// Same resolution with divisor positions permuted: position i of the
  /// result holds divisor order[i] of this one. Ids travel with divisors.
  ResolutionData relabeled(std::span<const std::size_t> order) const;

 private:
  int n_;
  std::vector<DivisorInfo> divisors_;
  std::vector<StratumData> strata_;
};

/// "J={1,3}" style rendering of a subset by divisor ids.
std::string describe_subset(const ResolutionData& data, Subset j);

struct Violation {
  enum class Kind {
    kLogTerminal,
    kNegativeDimension,
    kDegreeBound,
    kDuality,
    kEulerMismatch,
    kLibgoberWood,
    kMonotonicity,
    kDataOnEmptyStratum,
    kUnknownDivisor,
    /// Broken diamond invariant in a hodge_diamond document.
    kHodgeDiamond,
  };
  Kind kind;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every broken invariant of the data; empty iff the data is admissible.
std::vector<Violation> validate(const ResolutionData& data);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws ValidationError unless validate(data) is empty.
void require_valid(const ResolutionData& data);

}  // namespace stringy
