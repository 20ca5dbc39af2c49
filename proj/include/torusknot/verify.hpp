#pragma once

// Cross-check sweeps: every closed form against its recursion, the
// d-invariant formula against the Alexander-coefficient oracle, the
// truncation identity, pinch-chain lengths, table reproductions and the
// residue-class classifications.  The CLI `verify` command runs these and
// exits nonzero on any mismatch.

#include <functional>
#include <string>
#include <vector>

#include "torusknot/invariants.hpp"

namespace torusknot::verify {

struct CheckResult {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string first_failure = "-";

  void pass() { ++instances; }
  void fail(const std::string& where) {
    ++instances;
    if (failures++ == 0) first_failure = where;
  }
  void record(bool ok, const std::string& where) { ok ? pass() : fail(where); }
};

struct Options {
  long long p_max = 8;
  long long q_max = 80;
};

// Implementations under test.  Defaults are the production functions; the
// acceptance suite injects deliberately broken variants to demonstrate that
// the sweeps catch them.
struct Hooks {
  DivFn div = [](long long a, long long b) { return floor_div(a, b); };
  AdjacentFn upsilon_adjacent = [](long long p) { return torusknot::upsilon_adjacent(p); };
};

struct Report {
  std::vector<CheckResult> checks;

  long long total_failures() const {
    long long n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
  }
};

Report run_all(const Options& opts, const Hooks& hooks = Hooks{});

// One line per check: name<TAB>instances<TAB>failures<TAB>first_failure_or_dash
std::string to_tsv(const Report& report);

}  // namespace torusknot::verify
