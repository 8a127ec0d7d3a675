#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace gk1 {

// Outcome of one verification suite. Failures are data, not exceptions.
struct Report {
  std::string suite;
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  long cases_total = 0;
  long cases_failed = 0;
  std::vector<std::string> witnesses;
  nlohmann::json extra = nlohmann::json::object();
  double seconds = 0.0;

  static constexpr size_t kMaxWitnesses = 8;

  bool passed() const { return cases_failed == 0; }
  std::string status() const { return passed() ? "pass" : "fail"; }

  // Records one case; the label is only kept for failures.
  void check(bool ok, const std::string& label) {
    ++cases_total;
    if (!ok) {
      ++cases_failed;
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(label);
    }
  }
  template <class F>
  void check_lazy(bool ok, F&& make_label) {
    ++cases_total;
    if (!ok) {
      ++cases_failed;
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(make_label());
    }
  }

  void merge(const Report& other) {
    cases_total += other.cases_total;
    cases_failed += other.cases_failed;
    for (const auto& w : other.witnesses)
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["family"] = family;
    j["params"] = params;
    j["cases_total"] = cases_total;
    j["cases_failed"] = cases_failed;
    j["witnesses"] = witnesses;
    j["status"] = status();
    j["timing"] = {{"seconds", seconds}};
    if (!extra.empty()) j["details"] = extra;
    return j;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gk1
