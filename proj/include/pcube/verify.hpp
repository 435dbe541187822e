#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcube::verify {

// Knobs for the exhaustive invariant suite.  Deterministic given
// (max_n, sample_n6, seed); time_budget caps each individual check.
struct Config {
  int max_n = 5;                // exhaustive isomorphism-type range 1..max_n (<= 7)
  int sample_n6 = 50;           // seeded sample size among the 318 six-element types
  std::uint64_t seed = 0;
  double time_budget = 600.0;   // seconds per check; <= 0 disables the deadline
};

enum class Status { pass, fail, inconclusive };
const char* status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  long long checked = 0;  // items examined (posets, cuts, representations, ...)
  long long failures = 0;
  std::string detail;     // first failure, or a note on what was established
};

struct Report {
  Config config;
  std::vector<CheckResult> checks;
  int passed() const;
  int failed() const;
  int inconclusive() const;
  bool all_passed() const { return failed() == 0 && inconclusive() == 0; }
};

std::string report_to_json(const Report& r);

// Runs every check; individual checks fail fast internally but the suite
// always completes the full list.
Report run_all(const Config& cfg);

} // namespace pcube::verify
