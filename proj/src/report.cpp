#include "starxor/report.hpp"

namespace starxor {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

bool ExperimentReport::any_failure() const {
  if (verdict == Verdict::fail) return true;
  for (const auto& c : children) {
    if (c.any_failure()) return true;
  }
  return false;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  for (const auto& [key, value] : parameters.items()) j[key] = value;
  j["parameters"] = parameters;
  j["measured"] = measured;
  j["predicted"] = predicted;
  if (measured.is_number_integer() && predicted.is_number_integer()) {
    j["equal"] = measured == predicted;
  }
  j["verdict"] = to_string(verdict);
  if (!reason.empty()) j["reason"] = reason;
  j["wall_time_ms"] = wall_time_ms;
  if (!details.is_null()) j["details"] = details;
  if (!children.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : children) arr.push_back(c.to_json());
    j["children"] = std::move(arr);
  }
  return j;
}

}  // namespace starxor
