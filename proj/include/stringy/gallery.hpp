#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stringy/invariants.hpp"
#include "stringy/resolution.hpp"

namespace stringy {

struct ExpectedValue {
  Rat value;
  /// How the value was obtained by hand.
  std::string provenance;
};

/// A worked example: resolution data plus the exact invariants it must
/// reproduce. Expected keys are e_st, c_st_1_n1, d1_at_one, d2_at_one and,
/// for smooth varieties, euler and c1_cn1.
struct GalleryEntry {
  std::string name;
  std::string description;
  ResolutionData data;
  std::map<std::string, ExpectedValue> expected;
  std::optional<HodgeTable> expected_hodge;
  std::string hodge_provenance;
  /// Numerically trivial canonical class.
  bool calabi_yau = false;
};

/// Names accepted by builtin(), in a fixed order.
const std::vector<std::string>& builtin_names();

/// Throws DomainError for an unknown name.
GalleryEntry builtin(std::string_view name);

/// Internally consistent random resolution data, deterministic in seed:
///  - strata E-polynomials are products of Hodge-symmetric, dual-symmetric
///    atoms (points, curves, projective spaces, K3 and abelian surfaces);
///  - c1_cd1 on each stratum is the value forced by its Hodge numbers;
///  - normal restrictions satisfy the adjunction recursion;
///  - pullback_c1_cd1 is free except on Y itself, where it is solved from
///    the relative-divisor relation;
///  - discrepancies lie in (-1, 3] with denominators at most max_denominator.
/// Requires n >= 1, 0 <= r <= kMaxDivisors, max_denominator >= 1.
ResolutionData random_consistent(std::uint64_t seed, int n, int r, int max_denominator);

}  // namespace stringy
