#include "hpa/budget.hpp"

#include <cstdlib>
#include <sstream>

namespace hpa {

namespace {

std::size_t positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || v <= 0)
    throw std::invalid_argument("budget: " + key + " must be a positive integer, got '" + value + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

Budget Budget::parse(const std::string& text) { return parse(text, Budget{}); }

Budget Budget::parse(const std::string& text, Budget base) {
  if (text.empty()) return base;
  if (text.find('=') == std::string::npos) {
    base.gram_entries = positive("gram_entries", text);
    return base;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("budget: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "gram_entries")
      base.gram_entries = positive(key, value);
    else if (key == "max_boxes")
      base.max_boxes = positive(key, value);
    else if (key == "tiling_k")
      base.tiling_k = static_cast<int>(positive(key, value));
    else
      throw std::invalid_argument("budget: unknown key '" + key + "'");
  }
  return base;
}

Budget Budget::from_env() {
  const char* env = std::getenv("HPA_BUDGET");
  return env ? parse(env) : Budget{};
}

}  // namespace hpa
