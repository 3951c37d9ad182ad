#include "kahler/report.hpp"

namespace kahler {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["axiom"] = axiom;
  j["seed"] = seed;
  j["samples"] = samples;
  auto fails = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json jf;
    jf["input"] = f.input;
    jf["lhs"] = f.lhs;
    jf["rhs"] = f.rhs;
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  return j;
}

bool all_ok(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(r.to_json());
  return arr;
}

std::string summarize(const std::vector<CheckReport>& rs) {
  std::string s;
  for (const auto& r : rs) {
    s += r.axiom + ": " + (r.ok() ? "ok" : "FAILED") + " (" +
         std::to_string(r.samples) + " samples";
    if (!r.ok()) s += ", " + std::to_string(r.failures.size()) + " failures";
    s += ")\n";
  }
  return s;
}

}  // namespace kahler
