// Command-line front end: compute | gallery | fuzz.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stringy/compute.hpp"
#include "stringy/document.hpp"
#include "stringy/errors.hpp"
#include "stringy/gallery.hpp"

namespace {

using namespace stringy;

ReportDocument compute_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ReportDocument r;
    r.source = path;
    r.status = Status::kParseError;
    r.error = "cannot read file";
    return r;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return compute_text(buffer.str(), path);
}

int run_compute(const std::vector<std::string>& files, bool as_json) {
  std::vector<std::future<ReportDocument>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, compute_file, f));
  int code = 0;
  if (as_json && files.size() > 1) std::cout << "[\n";
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const ReportDocument r = jobs[i].get();
    code = std::max(code, exit_code(r.status));
    if (!as_json) {
      std::cout << report_text(r);
      continue;
    }
    std::string text = report_json(r);
    if (files.size() > 1) {
      text.pop_back();
      if (i + 1 < jobs.size()) text += ",";
      text += "\n";
    }
    std::cout << text;
  }
  if (as_json && files.size() > 1) std::cout << "]\n";
  return code;
}

int run_gallery(const std::optional<std::string>& name, const std::optional<std::string>& dir) {
  std::vector<std::string> names;
  if (name) {
    const auto& all = builtin_names();
    if (std::find(all.begin(), all.end(), *name) == all.end()) {
      std::cerr << "unknown gallery entry '" << *name << "'; run 'stringy gallery' for the list\n";
      return 2;
    }
    names.push_back(*name);
  } else if (dir) {
    names = builtin_names();
  } else {
    for (const auto& n : builtin_names()) {
      std::cout << n << "\t" << builtin(n).description << "\n";
    }
    return 0;
  }
  for (const auto& n : names) {
    const std::string text = export_document(gallery_document(builtin(n)));
    if (!dir) {
      std::cout << text;
      continue;
    }
    std::filesystem::create_directories(*dir);
    const std::filesystem::path path = std::filesystem::path(*dir) / (n + ".json");
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << path.string() << "\n";
      return 2;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

struct FuzzOptions {
  std::uint64_t seed = 0;
  long count = 100;
  std::optional<int> dim;
  std::optional<int> divisors;
  int max_denominator = 6;
  bool corrupt = false;
};

// First failing check on one datum, if any.
std::optional<std::string> fuzz_one(const ResolutionData& data) {
  const auto violations = validate(data);
  if (!violations.empty()) return "validate: " + violations.front().message;
  for (const Report& r : {check_first_derivative_identity(data), check_main_identity(data),
                          check_relat_div(data), check_derivative_paths(data, 1),
                          check_derivative_paths(data, 2)}) {
    if (!r.passed()) return summary_line(r);
  }
  if (data.gorenstein_canonical()) {
    const StringyHodgeResult h = stringy_hodge_numbers(data);
    if (h.exists() && !h.property_violations.empty()) {
      return "stringy_hodge_properties: " + h.property_violations.front();
    }
  }
  return std::nullopt;
}

int run_fuzz(const FuzzOptions& o) {
  long passed = 0;
  for (long i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    const int n = o.dim.value_or(1 + static_cast<int>(seed % 4));
    const int r = o.divisors.value_or(static_cast<int>((seed / 4) % 4));
    ResolutionData data = random_consistent(seed, n, r, o.max_denominator);
    if (o.corrupt) {
      StratumData& y = data.stratum(0);
      if (y.pullback_c1_cd1) *y.pullback_c1_cd1 += Rat(1);
    }
    const auto failure = fuzz_one(data);
    if (failure) {
      std::cout << "FAIL seed=" << seed << " dim=" << n << " divisors=" << r << ": " << *failure
                << "\n"
                << "reproduce: stringy fuzz --seed " << seed << " --count 1 --dim " << n
                << " --divisors " << r << " --max-denominator " << o.max_denominator
                << (o.corrupt ? " --corrupt" : "") << "\n";
      return 1;
    }
    ++passed;
  }
  std::cout << "fuzz: " << passed << "/" << o.count << " pass (seed " << o.seed << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stringy E-functions and their identities"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute invariants and run checks on JSON files");
  std::vector<std::string> files;
  bool as_json = false;
  compute->add_option("files", files, "input documents")->required();
  compute->add_flag("--json", as_json, "machine-readable output");

  auto* gallery = app.add_subcommand("gallery", "list, print or export builtin examples");
  std::optional<std::string> name;
  std::optional<std::string> dir;
  gallery->add_option("name", name, "entry to print or export");
  gallery->add_option("--export", dir, "write <name>.json files into this directory");

  auto* fuzz = app.add_subcommand("fuzz", "run identity checks on generated data");
  FuzzOptions fo;
  fuzz->add_option("--seed", fo.seed, "first seed");
  fuzz->add_option("--count", fo.count, "number of data")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--dim", fo.dim, "dimension (default: varies with the seed)")
      ->check(CLI::Range(1, 8));
  fuzz->add_option("--divisors", fo.divisors, "divisor count (default: varies with the seed)")
      ->check(CLI::Range(0, 8));
  fuzz->add_option("--max-denominator", fo.max_denominator, "bound on discrepancy denominators")
      ->check(CLI::Range(1, 64));
  fuzz->add_flag("--corrupt", fo.corrupt, "perturb each datum so the checks must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*compute) return run_compute(files, as_json);
    if (*gallery) return run_gallery(name, dir);
    return run_fuzz(fo);
  } catch (const stringy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
