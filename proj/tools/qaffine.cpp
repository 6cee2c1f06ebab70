// qaffine <suite> [--rank n] [--max-delta K] [--max-height h] [--out path]
//                 [--format json|csv|text] [--threads t]
// QAFFINE_PROFILE=<name> supplies caps; explicit flags override it.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "qaffine/report.hpp"
#include "qaffine/suites.hpp"

using namespace qaffine;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for affine quantum groups of type A"};
  std::string suite, out, format = "json", weight;
  std::vector<std::string> anchors;
  std::optional<int> rank, max_delta, max_height;
  int threads = 1, periods = 2;
  bool timing = false;

  std::string names;
  for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
  app.add_option("suite", suite, "Suite to run: " + names)->required();
  app.add_option("--rank", rank, "Largest n of the affine sl_{n+1} data tried")->check(CLI::Range(1, 6));
  app.add_option("--max-delta", max_delta, "Bound on delta-degrees")->check(CLI::Range(1, 30));
  app.add_option("--max-height", max_height, "Instances of taller weight are reported skipped-cap")
      ->check(CLI::Range(1, 31));
  app.add_option("--out", out, "Output file (default stdout)");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", threads, "Worker threads; 0 uses every core")->check(CLI::Range(0, 256));
  app.add_option("--weight", weight, "pbw: a single weight \"a0,a1,...,an\"");
  app.add_option("--periods", periods, "weyl: periods of the beta sequence")->check(CLI::Range(1, 20));
  app.add_option("--anchor", anchors, "Run only checks with these anchors");
  app.add_flag("--timing", timing, "Include wall time (output is then run-dependent)");
  CLI11_PARSE(app, argc, argv);

  if (!is_suite(suite)) {
    std::cerr << "qaffine: unknown suite '" << suite << "' (expected one of " << names << ")\n";
    return 2;
  }
  Caps caps = *profile("desk");
  if (const char* env = std::getenv("QAFFINE_PROFILE"); env && *env) {
    auto p = profile(env);
    if (!p) {
      std::cerr << "qaffine: unknown profile '" << env << "'\n";
      return 2;
    }
    caps = *p;
  }
  if (rank) caps.rank = *rank;
  if (max_delta) caps.max_delta = *max_delta;
  if (max_height) caps.max_height = *max_height;

  SuiteOptions opt;
  opt.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  opt.periods = periods;
  if (!anchors.empty())
    opt.select = [anchors](const CheckRecord& r) {
      return std::find(anchors.begin(), anchors.end(), r.anchor) != anchors.end();
    };
  try {
    if (!weight.empty()) {
      opt.weight = Weight::parse(weight);
      if (opt.weight->rank() < 1) throw std::invalid_argument("weight needs at least two entries");
      opt.ranks = {opt.weight->rank()};
      caps.rank = std::max(caps.rank, opt.weight->rank());
    }
    SuiteReport rep = run_suite(suite, caps, opt);
    std::string text = emit(rep, parse_format(format), timing);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!(f << text)) {
        std::cerr << "qaffine: cannot write " << out << "\n";
        return 2;
      }
    }
    if (!out.empty() || format != "text")
      std::cerr << rep.suite << ": " << rep.count(CheckStatus::Pass) << " pass, " << rep.count(CheckStatus::Fail)
                << " fail, " << rep.count(CheckStatus::SkippedCap) << " skipped-cap\n";
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "qaffine: " << e.what() << "\n";
    return 2;
  }
}
