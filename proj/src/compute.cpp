#include "stringy/compute.hpp"

#include <sstream>

#include <json.hpp>

#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"

namespace stringy {

using nlohmann::json;

int exit_code(Status status) {
  switch (status) {
    case Status::kPass: return 0;
    case Status::kFail: return 1;
    case Status::kParseError: return 2;
    case Status::kInvalid: return 3;
  }
  return 1;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kParseError: return "parse_error";
    case Status::kInvalid: return "invalid";
  }
  return "fail";
}

namespace {

void add_assertions(ReportDocument& out, const std::map<std::string, Rat>& asserted) {
  for (const auto& [name, value] : asserted) {
    auto it = out.invariants.find(name);
    if (it == out.invariants.end()) {
      out.skipped.push_back("assertion " + name + ": " +
                            (out.absent.count(name) ? out.absent.at(name) : "not computed"));
      // an assertion that cannot be evaluated does not hold
      out.status = Status::kFail;
      continue;
    }
    out.assertions.push_back({name, value, it->second});
  }
}

void settle(ReportDocument& out) {
  if (out.status != Status::kPass) return;
  for (const auto& c : out.checks) {
    if (!c.passed()) out.status = Status::kFail;
  }
  for (const auto& a : out.assertions) {
    if (!a.passed()) out.status = Status::kFail;
  }
}

template <typename F>
void run_check(ReportDocument& out, const std::string& name, F&& check) {
  try {
    out.checks.push_back(check());
  } catch (const IncompleteDataError& e) {
    out.skipped.push_back(name + ": " + e.what());
  } catch (const PreconditionError& e) {
    out.skipped.push_back(name + ": " + e.what());
  }
}

void compute_resolution(ReportDocument& out, const ResolutionDocument& doc) {
  const ResolutionData& data = doc.data;
  out.kind = "resolution";
  out.name = doc.name;
  out.violations = validate(data);
  if (!out.violations.empty()) {
    out.status = Status::kInvalid;
    return;
  }

  const StringyFunction f = stringy_function(data);
  out.invariants["e_st"] = stringy_euler(data);
  out.invariants["d1_at_one"] = derivative_at_one(f, 1);
  out.invariants["d2_at_one"] = derivative_at_one(f, 2);
  std::optional<Rat> c_st;
  try {
    c_st = c_st_1_n1(data);
    out.invariants["c_st_1_n1"] = *c_st;
  } catch (const IncompleteDataError& e) {
    out.absent["c_st_1_n1"] = e.what();
  }

  run_check(out, "euler_limit", [&] { return check_euler_limit(data); });
  run_check(out, "first_derivative_identity", [&] { return check_first_derivative_identity(data); });
  run_check(out, "first_derivative_paths", [&] { return check_derivative_paths(data, 1); });
  run_check(out, "second_derivative_paths", [&] { return check_derivative_paths(data, 2); });
  run_check(out, "main_identity", [&] { return check_main_identity(data); });
  run_check(out, "relative_divisor_relation", [&] { return check_relat_div(data); });
  AdjunctionReport adjunction = check_adjunction_recursion(data);
  for (auto& r : adjunction.checks) out.checks.push_back(std::move(r));
  for (auto& s : adjunction.skipped) out.skipped.push_back(std::move(s));

  if (!data.gorenstein_canonical()) {
    out.absent["stringy_hodge"] = "not applicable: some discrepancy is not a nonnegative integer";
  } else {
    StringyHodgeResult h = stringy_hodge_numbers(data);
    if (!h.exists()) {
      out.absent["stringy_hodge"] = "E_st is not a polynomial (diagonal " +
                                    std::to_string(h.failure->diagonal) + ": " +
                                    h.failure->reason + ")";
    } else {
      Report props = make_report("stringy_hodge_properties",
                                 Rat(static_cast<std::int64_t>(h.property_violations.size())), Rat(0));
      props.notes = h.property_violations;
      out.checks.push_back(std::move(props));
      if (c_st) {
        out.checks.push_back(check_stringy_hodge_moment(data, *h.table));
        if (c_st->is_zero()) out.checks.push_back(check_stringy_calabi_yau_relation(data, *h.table));
      } else {
        out.skipped.push_back("stringy_hodge_moment: c_st_1_n1 unavailable");
      }
      out.stringy_hodge = std::move(h.table);
    }
  }
  add_assertions(out, doc.assertions);
}

void compute_diamond(ReportDocument& out, const DiamondDocument& doc) {
  out.kind = "hodge_diamond";
  out.name = doc.name;
  const HodgeDiamond& d = doc.diamond;
  for (const auto& v : d.violations()) {
    out.violations.push_back({Violation::Kind::kHodgeDiamond, v});
  }
  if (!out.violations.empty()) {
    out.status = Status::kInvalid;
    return;
  }
  const int n = d.dimension();
  const BiPoly e = e_polynomial(d);
  const Integer c_n = euler_number(e);
  out.invariants["euler"] = Rat(c_n);
  out.invariants["c1_cn1_inferred"] = inferred_c1_cn1(e, n);

  std::optional<Rat> c1 = doc.c1_cn1;
  if (doc.c1_trivial) {
    if (c1 && !c1->is_zero()) {
      out.checks.push_back(make_report("c1_trivial_consistency", *c1, Rat(0)));
    }
    if (!c1) c1 = Rat(0);
  }

  run_check(out, "first_derivative", [&] { return first_derivative_check(e, n); });
  if (c1) {
    const ChernData chern{c_n, *c1};
    run_check(out, "libgober_wood", [&] { return libgober_wood_check(e, n, chern); });
    run_check(out, "second_derivative", [&] { return second_derivative_check(e, n, chern); });
    run_check(out, "virasoro_form", [&] { return virasoro_identity_form(e, n, chern); });
  } else {
    out.skipped.push_back("libgober_wood: no c1_cn1 given");
  }
  if (doc.c1_trivial) {
    run_check(out, "calabi_yau_relation", [&] { return cy_relation_check(e, n); });
    if (n == 4) run_check(out, "cy4_linear_relation", [&] { return cy4_linear_relation(e); });
  }
  if (doc.hyperkaehler) {
    if (n % 2 != 0) {
      out.skipped.push_back("hyperkaehler_betti: odd dimension");
    } else {
      const std::vector<Integer> betti = d.betti();
      run_check(out, "hyperkaehler_betti", [&] { return hyperkaehler_betti_check(betti, n / 2); });
    }
  }
  add_assertions(out, doc.assertions);
}

json rat_json(const Rat& r) { return r.str(); }

}  // namespace

ReportDocument compute(const InputDocument& doc, std::string source) {
  ReportDocument out;
  out.source = std::move(source);
  if (const auto* r = std::get_if<ResolutionDocument>(&doc)) {
    compute_resolution(out, *r);
  } else {
    compute_diamond(out, std::get<DiamondDocument>(doc));
  }
  settle(out);
  return out;
}

ReportDocument compute_text(std::string_view text, std::string source) {
  std::optional<InputDocument> doc;
  try {
    doc = parse_document(text);
  } catch (const ParseError& e) {
    ReportDocument out;
    out.source = std::move(source);
    out.status = Status::kParseError;
    out.error = e.what();
    return out;
  } catch (const DomainError& e) {
    ReportDocument out;
    out.source = std::move(source);
    out.status = Status::kInvalid;
    out.error = e.what();
    return out;
  }
  return compute(*doc, std::move(source));
}

std::string report_json(const ReportDocument& r) {
  json out;
  out["source"] = r.source;
  out["status"] = to_string(r.status);
  if (!r.kind.empty()) out["kind"] = r.kind;
  if (r.name) out["name"] = *r.name;
  if (!r.error.empty()) out["error"] = r.error;
  if (!r.violations.empty()) {
    out["violations"] = json::array();
    for (const auto& v : r.violations) {
      out["violations"].push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    }
  }
  if (r.status == Status::kParseError || r.status == Status::kInvalid) return out.dump(2) + "\n";

  out["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name},
               {"lhs", rat_json(c.lhs)},
               {"rhs", rat_json(c.rhs)},
               {"residual", rat_json(c.residual())},
               {"verdict", c.passed() ? "pass" : "fail"}};
    if (!c.notes.empty()) cj["notes"] = c.notes;
    if (!c.extras.empty()) {
      json ex = json::object();
      for (const auto& [k, v] : c.extras) ex[k] = rat_json(v);
      cj["extras"] = ex;
    }
    out["checks"].push_back(cj);
  }
  json inv = json::object();
  for (const auto& [k, v] : r.invariants) inv[k] = rat_json(v);
  if (r.stringy_hodge) {
    json table = json::array();
    for (const auto& [e, h] : *r.stringy_hodge) table.push_back({e.first, e.second, h.get_str()});
    inv["stringy_hodge"] = {{"table", table}};
  } else if (r.absent.count("stringy_hodge")) {
    inv["stringy_hodge"] = {{"absent", r.absent.at("stringy_hodge")}};
  }
  for (const auto& [k, reason] : r.absent) {
    if (k != "stringy_hodge") inv[k] = {{"absent", reason}};
  }
  out["invariants"] = inv;
  out["assertions"] = json::array();
  for (const auto& a : r.assertions) {
    out["assertions"].push_back({{"name", a.name},
                                 {"asserted", rat_json(a.asserted)},
                                 {"computed", rat_json(a.computed)},
                                 {"residual", rat_json(a.residual())},
                                 {"verdict", a.passed() ? "pass" : "fail"}});
  }
  out["skipped"] = r.skipped;
  return out.dump(2) + "\n";
}

std::string report_text(const ReportDocument& r) {
  std::ostringstream os;
  os << r.source;
  if (!r.kind.empty()) os << " (" << r.kind << (r.name ? " " + *r.name : "") << ")";
  os << ": " << to_string(r.status) << "\n";
  if (!r.error.empty()) os << "  error: " << r.error << "\n";
  for (const auto& v : r.violations) os << "  violation [" << to_string(v.kind) << "] " << v.message << "\n";
  if (r.status == Status::kParseError || r.status == Status::kInvalid) return os.str();

  os << "  invariants:\n";
  for (const auto& [k, v] : r.invariants) os << "    " << k << " = " << v << "\n";
  for (const auto& [k, reason] : r.absent) os << "    " << k << ": " << reason << "\n";
  if (r.stringy_hodge) {
    os << "    stringy_hodge:";
    for (const auto& [e, h] : *r.stringy_hodge) {
      os << " h^{" << e.first << "," << e.second << "}=" << h.get_str();
    }
    os << "\n";
  }
  os << "  checks:\n";
  for (const auto& c : r.checks) {
    os << "    " << summary_line(c) << "\n";
    for (const auto& note : c.notes) os << "      note: " << note << "\n";
  }
  for (const auto& s : r.skipped) os << "  skipped " << s << "\n";
  if (!r.assertions.empty()) os << "  assertions:\n";
  for (const auto& a : r.assertions) {
    os << "    " << a.name << ": computed " << a.computed << ", asserted " << a.asserted;
    if (a.passed()) {
      os << " [pass]\n";
    } else {
      os << " (residual " << a.residual() << ") [FAIL]\n";
    }
  }
  return os.str();
}

}  // namespace stringy
