#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgelab/parallel.hpp"

namespace hodgelab {

struct DegreeOutcome {
  int degree = 0;
  bool passed = false;
  std::string witness;  ///< empty when passed
};

/// Outcome of one verification check across a range of degrees.
struct CheckRecord {
  std::string id;
  std::string certifies;
  std::vector<DegreeOutcome> degrees;
  double seconds = 0.0;

  bool passed() const;
  /// "degree N: <witness>" for the first failing degree, else empty.
  std::string first_failure() const;
  nlohmann::json to_json(bool with_timings) const;
  /// Throws VerificationFailure naming the first failing degree.
  void require() const;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool passed() const;
  nlohmann::json to_json(bool with_timings) const;
  std::string summary() const;
};

/// Evaluates check(n) for every n in [lo, hi]. A check returns an empty
/// string on success and a witness description on failure; exceptions are
/// recorded as failures.
std::vector<DegreeOutcome> sweep_degrees(int lo, int hi, Execution ex,
                                         const std::function<std::string(int)>& check);

/// Runs the sweep and fills a record, including the wall time.
CheckRecord run_check(std::string id, std::string certifies, int lo, int hi,
                      Execution ex, const std::function<std::string(int)>& check);

}  // namespace hodgelab
