#pragma once

#include <string>
#include <vector>

namespace leonard {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks produced by the verification routines.
class CheckReport {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  void append(const CheckReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;
  /// First failing check name, or empty.
  std::string first_failure() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace leonard
