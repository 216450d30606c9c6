// excy: construct the extremal weighted-projective families, derive their
// invariants in exact arithmetic, and machine-check the identities, bounds
// and gcd conjecture attached to them.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "excy/document.hpp"
#include "excy/families.hpp"
#include "excy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure or internal assertion
constexpr int kExitUsage = 2;

int dimension_cap() {
  if (const char* env = std::getenv("EXCY_MAX_DIM_OVERRIDE")) {
    try {
      return std::max(excy::families::kDefaultDimCap, std::stoi(env));
    } catch (...) {
      return excy::families::kDefaultDimCap;
    }
  }
  return excy::families::kDefaultDimCap;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

struct GenerateOptions {
  std::string family;
  int dim = 2;
  std::string format = "text";
  std::string out;
};

int run_generate(const GenerateOptions& opt) {
  auto fam = excy::families::family_from_tag(opt.family);
  if (!fam) {
    std::cerr << "unknown family: " << opt.family << "\n";
    return kExitUsage;
  }
  if (opt.dim < 2) {
    std::cerr << "dimension must be at least 2\n";
    return kExitUsage;
  }
  bool allow = opt.dim <= dimension_cap();
  if (!allow) {
    std::cerr << "dimension " << opt.dim
              << " exceeds the safety cap; set EXCY_MAX_DIM_OVERRIDE to lift it\n";
    return kExitUsage;
  }
  excy::families::FamilyRecord rec =
      excy::families::build(*fam, opt.dim, opt.dim > excy::families::kDefaultDimCap);
  if (opt.format == "json")
    write_output(excy::doc::render_json(rec).dump(2) + "\n", opt.out);
  else
    write_output(excy::doc::render_text(rec), opt.out);
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_dim = 10;
  int max_r = 8;
  int jobs = 1;
  std::string format = "text";
  std::string out;
};

int run_verify(const VerifyOptions& opt) {
  using excy::verify::VerificationReport;
  std::vector<VerificationReport> reports;
  auto want = [&](const char* name) { return opt.suite == name || opt.suite == "all"; };
  if (want("product")) reports.push_back(excy::verify::product_formulas(opt.max_r));
  if (opt.suite == "qk") reports.push_back(excy::verify::qk_formulas(opt.max_r));
  if (want("calabi-yau"))
    reports.push_back(excy::verify::calabi_yau_sums(opt.max_dim, opt.jobs));
  if (want("index-identity"))
    reports.push_back(excy::verify::index_identity(opt.max_dim, opt.jobs));
  if (want("pair-degree")) reports.push_back(excy::verify::pair_degree(opt.max_dim, opt.jobs));
  if (want("cover")) reports.push_back(excy::verify::cover_identity(opt.max_dim, opt.jobs));
  if (want("bounds"))
    reports.push_back(excy::verify::asymptotic_bounds(
        opt.max_dim, excy::asymptotics::kDefaultAlphaTerms, opt.jobs));
  if (want("loop-inverse"))
    reports.push_back(excy::verify::loop_inverse_oracle(200, 3, 13, 50, 20240229));
  if (want("negative")) reports.push_back(excy::verify::negative_controls());
  if (reports.empty()) {
    std::cerr << "unknown suite: " << opt.suite << "\n";
    return kExitUsage;
  }
  std::string text;
  bool all_pass = true;
  if (opt.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      j.push_back(excy::doc::report_json(r));
      all_pass = all_pass && r.all_pass();
    }
    text = j.dump(2) + "\n";
  } else {
    for (const auto& r : reports) {
      text += excy::doc::report_text(r);
      all_pass = all_pass && r.all_pass();
    }
  }
  write_output(text, opt.out);
  return all_pass ? kExitOk : kExitFailure;
}

struct ScanOptions {
  int max_dim = 30;
  int jobs = 1;
  std::string out;
  bool verbose = false;
};

int run_scan(const ScanOptions& opt) {
  if (opt.max_dim < 2) {
    std::cerr << "scan-gcd requires --max-dim at least 2\n";
    return kExitUsage;
  }
  std::vector<excy::verify::ScanRow> table;
  auto start = std::chrono::steady_clock::now();
  auto emit = [&](const excy::verify::CheckResult& c) {
    // params is "n=<dim>", witness the gcd
    std::string n = c.params.substr(c.params.find('=') + 1);
    std::cout << n << ", " << c.witness << ", "
              << (c.status == excy::verify::Status::pass ? "PASS" : "FAIL") << "\n"
              << std::flush;
    if (opt.verbose) {
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "# n=" << n << " done, " << static_cast<long>(elapsed) << "s elapsed\n";
    }
  };
  excy::verify::VerificationReport report = excy::verify::scan_gcd_conjecture(
      opt.max_dim, opt.jobs, opt.out.empty() ? nullptr : &table, emit);
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file " << opt.out << "\n";
      return kExitFailure;
    }
    f << excy::doc::scan_table_json(opt.max_dim, table).dump(2) << "\n";
  }
  return report.all_pass() ? kExitOk : kExitFailure;
}

struct AlphaOptions {
  int digits = 6;
};

int run_alpha(const AlphaOptions& opt) {
  if (opt.digits < 1) {
    std::cerr << "--digits must be at least 1\n";
    return kExitUsage;
  }
  excy::Rat target = excy::fraction(1, excy::int_pow(10, static_cast<unsigned long>(opt.digits) + 1));
  int terms = 2;
  excy::asymptotics::RationalEnclosure enc = excy::asymptotics::alpha(terms);
  while (enc.width() >= target) enc = excy::asymptotics::alpha(++terms);
  excy::Rat mid = (enc.lo + enc.hi) / 2;
  std::cout << "alpha in [" << excy::decimal_string(enc.lo, opt.digits + 2, excy::Rounding::down)
            << ", " << excy::decimal_string(enc.hi, opt.digits + 2, excy::Rounding::up) << "]\n";
  std::cout << "terms: " << terms << ", width < 1e-" << (opt.digits + 1) << "\n";
  std::cout << excy::decimal_string(mid, opt.digits) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal weighted-projective hypersurface families"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "construct a family member");
  generate->add_option("--family", gen.family,
                       "small-volume | esser-mld | pair-mld | index1-cover | large-index | "
                       "kollar | liu")
      ->required();
  generate->add_option("--dim", gen.dim, "dimension (>= 2)")->required();
  generate->add_option("--format", gen.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  generate->add_option("--out", gen.out, "write to file instead of stdout");

  VerifyOptions ver;
  CLI::App* verify = app.add_subcommand("verify", "run an identity or bound suite");
  verify->add_option("--suite", ver.suite,
                     "product | qk | calabi-yau | index-identity | pair-degree | cover | "
                     "bounds | loop-inverse | negative | all")
      ->required();
  verify->add_option("--max-dim", ver.max_dim, "largest dimension to sweep");
  verify->add_option("--max-r", ver.max_r, "largest r for the product formulas");
  verify->add_option("--jobs", ver.jobs, "parallel fan-out across dimensions");
  verify->add_option("--format", ver.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", ver.out, "write to file instead of stdout");

  ScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand("scan-gcd", "gcd(m'_n, E_n) conjecture scan");
  scan_cmd->add_option("--max-dim", scan.max_dim, "largest dimension (default 30)");
  scan_cmd->add_option("--jobs", scan.jobs, "parallel fan-out across dimensions");
  scan_cmd->add_option("--out", scan.out, "persist the full table as JSON");
  scan_cmd->add_flag("--verbose", scan.verbose, "progress notes on stderr");

  AlphaOptions alpha;
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "certified enclosure of the constant alpha");
  alpha_cmd->add_option("--digits", alpha.digits, "certified decimal places (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (verify->parsed()) return run_verify(ver);
    if (scan_cmd->parsed()) return run_scan(scan);
    if (alpha_cmd->parsed()) return run_alpha(alpha);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
