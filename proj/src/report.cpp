#include "leonard/report.hpp"

#include <algorithm>

namespace leonard {

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool CheckReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

std::string CheckReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return c.name;
  return {};
}

}  // namespace leonard
