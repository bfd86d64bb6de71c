#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "stringy/gallery.hpp"
#include "stringy/hodge.hpp"
#include "stringy/resolution.hpp"

namespace stringy {

/// A "resolution" input file. Strata not listed are empty.
struct ResolutionDocument {
  std::optional<std::string> name;
  std::optional<std::string> description;
  ResolutionData data;
  /// invariant name -> asserted value; see resolution_assertion_names().
  std::map<std::string, Rat> assertions;
};

/// A "hodge_diamond" input file.
struct DiamondDocument {
  std::optional<std::string> name;
  std::optional<std::string> description;
  HodgeDiamond diamond;
  /// c_1 c_{n-1}, when known.
  std::optional<Rat> c1_cn1;
  /// Numerically trivial canonical class; implies c1_cn1 = 0.
  bool c1_trivial = false;
  /// Run the Betti-number relation for hyper-Kaehler manifolds.
  bool hyperkaehler = false;
  std::map<std::string, Rat> assertions;
};

using InputDocument = std::variant<ResolutionDocument, DiamondDocument>;

/// e_st, c_st_1_n1, d1_at_one, d2_at_one.
const std::vector<std::string>& resolution_assertion_names();
/// euler, c1_cn1_inferred.
const std::vector<std::string>& diamond_assertion_names();

/// Parses a UTF-8 JSON document. Throws ParseError for malformed JSON,
/// unknown or mistyped fields and unparsable rationals, and DomainError for
/// well-formed but inconsistent structure (unknown divisor ids in a stratum,
/// repeated ids, Hodge numbers out of range).
InputDocument parse_document(std::string_view text);

/// Canonical form: sorted keys, two-space indent, reduced fractions, strata
/// ordered by (|J|, J) with empty strata omitted, triples in lexicographic
/// order. Ends with a newline.
std::string export_document(const InputDocument& doc);

/// The entry as a resolution document whose assertions are the entry's
/// expected stringy invariants.
ResolutionDocument gallery_document(const GalleryEntry& entry);

}  // namespace stringy
