#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace starxor {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict v);

/// Machine-readable record of one experiment.
///
/// `parameters` are also copied to the top level of to_json(), so a state
/// complexity measurement serializes as
/// {n1, n2, method, measured, predicted, equal, wall_time_ms, ...}.
struct ExperimentReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json measured;   // null when skipped
  nlohmann::ordered_json predicted;  // null when skipped
  Verdict verdict = Verdict::skipped;
  std::string reason;
  double wall_time_ms = 0.0;
  nlohmann::ordered_json details;  // free-form, omitted when null
  std::vector<ExperimentReport> children;

  /// True when this report or any child failed.
  bool any_failure() const;
  nlohmann::ordered_json to_json() const;
};

/// Milliseconds elapsed since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace starxor
