#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "balkan/verifier.hpp"

namespace balkan {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void Report::add_exact(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), "exact", pass});
}

void Report::add_up_to_sign(std::string name, std::string expected, std::string actual, bool pass) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), "upToSign", pass});
}

void Report::add_digits(std::string name, const HPReal& expected, const HPReal& actual, long digits) {
  const bool pass = agree_to_places(expected, actual, digits);
  checks.push_back({std::move(name), expected.to_string(digits), actual.to_string(digits),
                    "digits:" + std::to_string(digits), pass});
}

void Report::add(Check c) { checks.push_back(std::move(c)); }

void Report::merge(Report&& other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto d : other.depths_used) depths_used.push_back(d);
  for (auto& n : other.notes) notes.push_back(std::move(n));
  for (auto& r : other.results) results.push_back(std::move(r));
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) j["parameters"][k] = v;
  if (!results.empty()) {
    j["results"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : results) j["results"][k] = v;
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"mode", c.mode},
                           {"pass", c.pass}});
  j["depthsUsed"] = depths_used;
  if (!notes.empty()) j["notes"] = notes;
  j["pass"] = passed();
  j["wallTime"] = wall_time;
  return j.dump(2);
}

namespace {

std::string clip(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << command;
  for (const auto& [k, v] : parameters) os << "  " << k << "=" << v;
  os << "\n";
  for (const auto& [k, v] : results) os << "  " << k << ": " << v << "\n";
  std::size_t wname = 4;
  for (const auto& c : checks) wname = std::max(wname, std::min<std::size_t>(c.name.size(), 48));
  for (const auto& c : checks) {
    os << (c.pass ? "  ok    " : "  FAIL  ") << std::left << std::setw(static_cast<int>(wname)) << clip(c.name, 48)
       << "  " << std::setw(10) << c.mode << "  " << clip(c.actual, 60);
    if (!c.pass) os << "  (expected " << clip(c.expected, 60) << ")";
    os << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  long dmax = 0;
  for (auto d : depths_used) dmax = std::max(dmax, d);
  os << (passed() ? "PASS" : "FAIL") << "  " << checks.size() - failures() << "/" << checks.size()
     << " checks";
  if (!depths_used.empty()) os << ", max depth " << dmax;
  os << ", " << std::fixed << std::setprecision(2) << wall_time << " s\n";
  return os.str();
}

}  // namespace balkan
