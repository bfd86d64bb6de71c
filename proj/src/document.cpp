#include "stringy/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "stringy/errors.hpp"

namespace stringy {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void require_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(where, "unknown field '" + key + "'");
    }
  }
  for (const char* key : required) {
    if (!j.contains(key)) fail(where, "missing field '" + std::string(key) + "'");
  }
}

Rat parse_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) fail(where, "expected a rational as a \"p/q\" string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const Rat r = parse_rat(j, where);
    if (r.is_integer()) return r.numerator();
  }
  fail(where, "expected an integer");
}

int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::optional<std::string> parse_text(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  if (!doc[key].is_string()) fail(key, "expected a string");
  return doc[key].get<std::string>();
}

bool parse_flag(const json& doc, const char* key) {
  if (!doc.contains(key)) return false;
  if (!doc[key].is_boolean()) fail(key, "expected true or false");
  return doc[key].get<bool>();
}

// [[p, q, c], ...] with p, q >= 0
std::map<Exponent, Integer> parse_triples(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of [p, q, coeff] triples");
  std::map<Exponent, Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_array() || t.size() != 3) fail(at, "expected [p, q, coeff]");
    const int p = parse_int(t[0], at);
    const int q = parse_int(t[1], at);
    if (p < 0 || q < 0) fail(at, "negative exponent");
    if (!out.emplace(Exponent{p, q}, parse_integer(t[2], at)).second) {
      fail(at, "repeated exponent");
    }
  }
  return out;
}

std::map<std::string, Rat> parse_assertions(const json& doc,
                                            const std::vector<std::string>& allowed) {
  std::map<std::string, Rat> out;
  if (!doc.contains("assertions")) return out;
  const json& a = doc["assertions"];
  if (!a.is_object()) fail("assertions", "expected an object");
  for (const auto& [key, value] : a.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail("assertions", "unknown invariant '" + key + "'");
    }
    out[key] = parse_rat(value, "assertions." + key);
  }
  return out;
}

std::optional<Rat> parse_optional_rat(const json& s, const char* key, const std::string& where) {
  if (!s.contains(key) || s[key].is_null()) return std::nullopt;
  return parse_rat(s[key], where + "." + key);
}

ResolutionDocument parse_resolution(const json& doc) {
  require_keys(doc, "document",
               {"kind", "name", "description", "dimension", "divisors", "strata", "assertions"},
               {"kind", "dimension", "divisors", "strata"});
  const int n = parse_int(doc["dimension"], "dimension");

  const json& divs = doc["divisors"];
  if (!divs.is_array()) fail("divisors", "expected a list");
  std::vector<DivisorInfo> divisors;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::string at = "divisors[" + std::to_string(i) + "]";
    require_keys(divs[i], at, {"id", "discrepancy"}, {"id", "discrepancy"});
    divisors.push_back(
        {parse_int(divs[i]["id"], at + ".id"), parse_rat(divs[i]["discrepancy"], at + ".discrepancy")});
  }
  ResolutionData data(n, std::move(divisors));

  const json& strata = doc["strata"];
  if (!strata.is_array()) fail("strata", "expected a list");
  std::set<Subset> seen;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string at = "strata[" + std::to_string(i) + "]";
    const json& s = strata[i];
    require_keys(s, at,
                 {"J", "e_polynomial", "euler", "c1_cd1", "pullback_c1_cd1", "normal_restrictions"},
                 {"J", "e_polynomial"});
    if (!s["J"].is_array()) fail(at + ".J", "expected a list of divisor ids");
    std::vector<int> ids;
    for (const auto& id : s["J"]) ids.push_back(parse_int(id, at + ".J"));
    const Subset j = data.subset_of(ids);
    if (!seen.insert(j).second) fail(at, "repeated stratum " + describe_subset(data, j));

    StratumData& st = data.stratum(j);
    st.e = BiPoly(parse_triples(s["e_polynomial"], at + ".e_polynomial"));
    if (s.contains("euler")) st.euler = parse_integer(s["euler"], at + ".euler");
    st.c1_cd1 = parse_optional_rat(s, "c1_cd1", at);
    st.pullback_c1_cd1 = parse_optional_rat(s, "pullback_c1_cd1", at);
    if (s.contains("normal_restrictions")) {
      const json& nr = s["normal_restrictions"];
      if (!nr.is_object()) fail(at + ".normal_restrictions", "expected an object");
      for (const auto& [key, value] : nr.items()) {
        const std::string where = at + ".normal_restrictions." + key;
        int id = 0;
        try {
          std::size_t used = 0;
          id = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail(where, "keys must be divisor ids");
        }
        st.normal_restrictions[id] = parse_rat(value, where);
      }
    }
  }
  return {parse_text(doc, "name"), parse_text(doc, "description"), std::move(data),
          parse_assertions(doc, resolution_assertion_names())};
}

DiamondDocument parse_diamond(const json& doc) {
  require_keys(doc, "document",
               {"kind", "name", "description", "dimension", "hodge_numbers", "c1_cn1", "c1_trivial",
                "hyperkaehler", "assertions"},
               {"kind", "dimension", "hodge_numbers"});
  const int n = parse_int(doc["dimension"], "dimension");
  DiamondDocument out{parse_text(doc, "name"),
                      parse_text(doc, "description"),
                      HodgeDiamond(n, parse_triples(doc["hodge_numbers"], "hodge_numbers")),
                      parse_optional_rat(doc, "c1_cn1", "document"),
                      parse_flag(doc, "c1_trivial"),
                      parse_flag(doc, "hyperkaehler"),
                      parse_assertions(doc, diamond_assertion_names())};
  return out;
}

json rat_json(const Rat& r) { return r.str(); }

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

json triples_json(const std::map<Exponent, Integer>& terms) {
  json out = json::array();
  for (const auto& [e, c] : terms) out.push_back({e.first, e.second, integer_json(c)});
  return out;
}

void put_common(json& out, const std::optional<std::string>& name,
                const std::optional<std::string>& description,
                const std::map<std::string, Rat>& assertions) {
  if (name) out["name"] = *name;
  if (description) out["description"] = *description;
  if (!assertions.empty()) {
    json a = json::object();
    for (const auto& [k, v] : assertions) a[k] = rat_json(v);
    out["assertions"] = a;
  }
}

json resolution_json(const ResolutionDocument& doc) {
  const ResolutionData& data = doc.data;
  json out;
  out["kind"] = "resolution";
  out["dimension"] = data.dimension();
  std::vector<DivisorInfo> divisors = data.divisors();
  std::sort(divisors.begin(), divisors.end(),
            [](const DivisorInfo& a, const DivisorInfo& b) { return a.id < b.id; });
  out["divisors"] = json::array();
  for (const auto& d : divisors) {
    out["divisors"].push_back({{"id", d.id}, {"discrepancy", rat_json(d.discrepancy)}});
  }

  std::vector<std::pair<std::vector<int>, Subset>> order;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    if (!data.stratum(j).empty()) order.emplace_back(data.ids_of(j), j);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  out["strata"] = json::array();
  for (const auto& [ids, j] : order) {
    const StratumData& s = data.stratum(j);
    json st;
    st["J"] = ids;
    st["e_polynomial"] = triples_json(s.e.terms());
    if (s.euler) st["euler"] = integer_json(*s.euler);
    st["c1_cd1"] = s.c1_cd1 ? rat_json(*s.c1_cd1) : json(nullptr);
    st["pullback_c1_cd1"] = s.pullback_c1_cd1 ? rat_json(*s.pullback_c1_cd1) : json(nullptr);
    if (!s.normal_restrictions.empty()) {
      json nr = json::object();
      for (const auto& [id, v] : s.normal_restrictions) nr[std::to_string(id)] = rat_json(v);
      st["normal_restrictions"] = nr;
    }
    out["strata"].push_back(st);
  }
  put_common(out, doc.name, doc.description, doc.assertions);
  return out;
}

json diamond_json(const DiamondDocument& doc) {
  json out;
  out["kind"] = "hodge_diamond";
  out["dimension"] = doc.diamond.dimension();
  std::map<Exponent, Integer> nonzero;
  for (const auto& [e, h] : doc.diamond.entries()) {
    if (h != 0) nonzero[e] = h;
  }
  out["hodge_numbers"] = triples_json(nonzero);
  if (doc.c1_cn1) out["c1_cn1"] = rat_json(*doc.c1_cn1);
  if (doc.c1_trivial) out["c1_trivial"] = true;
  if (doc.hyperkaehler) out["hyperkaehler"] = true;
  put_common(out, doc.name, doc.description, doc.assertions);
  return out;
}

}  // namespace

const std::vector<std::string>& resolution_assertion_names() {
  static const std::vector<std::string> names = {"e_st", "c_st_1_n1", "d1_at_one", "d2_at_one"};
  return names;
}

const std::vector<std::string>& diamond_assertion_names() {
  static const std::vector<std::string> names = {"euler", "c1_cn1_inferred"};
  return names;
}

InputDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("document: missing string field 'kind'");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "resolution") return parse_resolution(doc);
  if (kind == "hodge_diamond") return parse_diamond(doc);
  throw ParseError("document: unknown kind '" + kind + "'");
}

std::string export_document(const InputDocument& doc) {
  const json out = std::visit(
      [](const auto& d) {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, ResolutionDocument>) {
          return resolution_json(d);
        } else {
          return diamond_json(d);
        }
      },
      doc);
  return out.dump(2) + "\n";
}

ResolutionDocument gallery_document(const GalleryEntry& entry) {
  ResolutionDocument doc{entry.name, entry.description, entry.data, {}};
  for (const auto& key : resolution_assertion_names()) {
    auto it = entry.expected.find(key);
    if (it != entry.expected.end()) doc.assertions[key] = it->second.value;
  }
  return doc;
}

}  // namespace stringy
