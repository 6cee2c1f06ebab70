// Verification suites: every identity the library can check, instantiated
// over index tuples within caps, evaluated concurrently and reported in a
// fixed order.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/cartan.hpp"

namespace qaffine {

enum class CheckStatus { Pass, Fail, SkippedCap };

std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct CheckRecord {
  std::string id;      // unique within a report; records are sorted by id
  std::string anchor;  // name of the identity checked
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::SkippedCap;
  std::string lhs, rhs, value;
  std::string limit;  // limit at q = infinity, for checks stated mod q^-1 A

  std::string param(const std::string& key) const;
  friend bool operator==(const CheckRecord& a, const CheckRecord& b) = default;
};

/// Caps bound every suite. rank is the largest n tried (suites run n = 1..rank
/// unless a check needs a specific n); max_delta bounds delta-degrees k, l;
/// max_height skips any instance whose weight is taller.
struct Caps {
  int rank = 2;
  int max_delta = 3;
  int max_height = 8;
  friend bool operator==(const Caps& a, const Caps& b) = default;
};

/// Named cap profiles: "desk" = {2, 3, 8}, "extended" = {3, 4, 17}.
std::optional<Caps> profile(const std::string& name);

struct SuiteReport {
  std::string suite;
  Caps caps;
  std::vector<CheckRecord> checks;
  double wall_time = 0;  // seconds; not serialized unless asked for

  size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  friend bool operator==(const SuiteReport& a, const SuiteReport& b) {
    return a.suite == b.suite && a.caps == b.caps && a.checks == b.checks;
  }
};

struct SuiteOptions {
  int threads = 1;
  /// Ranks to run; empty means 1..caps.rank.
  std::vector<int> ranks;
  /// Keeps only the instances it accepts (called on the record before it
  /// is evaluated, so id, anchor and params are set).
  std::function<bool(const CheckRecord&)> select;
  /// pbw: a single weight instead of all weights within the height cap.
  std::optional<Weight> weight;
  /// weyl: periods of the beta sequence to scan.
  int periods = 2;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a suite; "all" concatenates every suite. Throws std::invalid_argument
/// for an unknown suite or caps out of range.
SuiteReport run_suite(const std::string& name, const Caps& caps, const SuiteOptions& opt = {});

}  // namespace qaffine
