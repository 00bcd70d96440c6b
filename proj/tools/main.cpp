#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdiff/parser.hpp"
#include "hdiff/suites.hpp"

using namespace hdiff;

namespace {

void print_json(const SuiteResult& res, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = res.suite;
  j["params"] = {{"n", res.params.n}, {"N", res.params.N}, {"seed", res.params.seed}, {"degree", res.params.degree}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : res.report.sorted()) {
    nlohmann::ordered_json e{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  j["elapsed_ms"] = timing ? res.elapsed_ms : 0;
  std::cout << j.dump(2) << "\n";
}

void print_text(const SuiteResult& res, bool timing) {
  const auto checks = res.report.sorted();
  std::cout << "suite " << res.suite << " n=" << res.params.n << " N=" << res.params.N << " seed=" << res.params.seed
            << " degree=" << res.params.degree << "\n";
  for (const Check& c : checks) {
    std::cout << to_string(c.status) << "  " << c.name;
    if (!c.witness.empty()) std::cout << (c.status == Status::Skipped ? ": " : "  -- ") << c.witness;
    std::cout << "\n";
  }
  const auto failed = res.report.failures();
  std::cout << checks.size() << " checks, " << failed << " failed";
  if (timing) std::cout << ", " << res.elapsed_ms << " ms";
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the ring of h-deformed differential operators"};
  app.require_subcommand(1);

  SuiteParams params;
  std::string suite;
  std::string format = "text";
  bool no_timing = false;
  auto* run = app.add_subcommand("suite", "run a verification suite");
  run->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  run->add_option("--n", params.n, "number of sites")->check(CLI::Range(1, 7));
  run->add_option("--N", params.N, "number of copies")->check(CLI::Range(1, 16));
  run->add_option("--seed", params.seed, "random seed");
  run->add_option("--degree", params.degree, "maximal word length of sampled inputs")->check(CLI::Range(1, 8));
  run->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  int nf_n = 2, nf_N = 1;
  std::string expr;
  auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
  nf->add_option("--n", nf_n, "number of sites")->check(CLI::Range(1, 7));
  nf->add_option("--N", nf_N, "number of copies")->check(CLI::Range(1, 16));
  nf->add_option("expr", expr, "expression, e.g. \"d[1]*Z[1]\"")->required();

  auto* list = app.add_subcommand("list", "list the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& s : suite_names()) std::cout << s << "\n";
    return 0;
  }

  if (nf->parsed()) {
    try {
      const RingCtx ctx(nf_n, nf_N);
      std::cout << print(parse_element(expr, ctx)) << "\n";
      return 0;
    } catch (const ParseError& e) {
      std::cerr << "error at position " << e.position() << ": " << e.what() << "\n";
      std::cerr << "  " << expr << "\n  " << std::string(e.position(), ' ') << "^\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  SuiteResult res;
  try {
    res = run_suite(suite, params);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (format == "json")
    print_json(res, !no_timing);
  else
    print_text(res, !no_timing);
  return res.report.passed() ? 0 : 1;
}
