#include "hodgelab/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <omp.h>

#include "hodgelab/common.hpp"

namespace hodgelab {

void set_thread_count(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

int thread_count() { return omp_get_max_threads(); }

bool CheckRecord::passed() const {
  for (const auto& d : degrees)
    if (!d.passed) return false;
  return true;
}

std::string CheckRecord::first_failure() const {
  for (const auto& d : degrees)
    if (!d.passed) return "degree " + std::to_string(d.degree) + ": " + d.witness;
  return {};
}

void CheckRecord::require() const {
  if (!passed()) throw VerificationFailure(id + " failed at " + first_failure());
}

nlohmann::json CheckRecord::to_json(bool with_timings) const {
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : degrees) {
    nlohmann::json j = {{"degree", d.degree}, {"status", d.passed ? "pass" : "fail"}};
    if (!d.passed) j["witness"] = d.witness;
    degs.push_back(std::move(j));
  }
  nlohmann::json j = {{"id", id},
                      {"certifies", certifies},
                      {"status", passed() ? "pass" : "fail"},
                      {"degrees", std::move(degs)}};
  if (with_timings) j["seconds"] = seconds;
  return j;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json(with_timings));
  return {{"schema", "hodgelab/1"},
          {"type", "verification-report"},
          {"status", passed() ? "pass" : "fail"},
          {"checks", std::move(arr)}};
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    char line[256];
    int lo = c.degrees.empty() ? 0 : c.degrees.front().degree;
    int hi = c.degrees.empty() ? 0 : c.degrees.back().degree;
    std::snprintf(line, sizeof line, "[%s] %-28s n=%d..%d  %8.3fs  ",
                  c.passed() ? "PASS" : "FAIL", c.id.c_str(), lo, hi, c.seconds);
    os << line << c.certifies << '\n';
    if (!c.passed()) os << "       " << c.first_failure() << '\n';
    ok += c.passed() ? 1 : 0;
  }
  os << ok << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::vector<DegreeOutcome> sweep_degrees(int lo, int hi, Execution ex,
                                         const std::function<std::string(int)>& check) {
  const std::size_t count = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<DegreeOutcome> out(count);
  parallel_for(count, ex, [&](std::size_t i) {
    const int n = lo + static_cast<int>(i);
    DegreeOutcome& d = out[i];
    d.degree = n;
    try {
      d.witness = check(n);
      d.passed = d.witness.empty();
    } catch (const std::exception& e) {
      d.passed = false;
      d.witness = std::string("exception: ") + e.what();
    }
  });
  return out;
}

CheckRecord run_check(std::string id, std::string certifies, int lo, int hi,
                      Execution ex, const std::function<std::string(int)>& check) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.certifies = std::move(certifies);
  const auto start = std::chrono::steady_clock::now();
  rec.degrees = sweep_degrees(lo, hi, ex, check);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace hodgelab
