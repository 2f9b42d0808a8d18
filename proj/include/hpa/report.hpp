#pragma once

#include <string>
#include <vector>

namespace hpa {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Named pass/fail results of a verification run.
struct Report {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

}  // namespace hpa
