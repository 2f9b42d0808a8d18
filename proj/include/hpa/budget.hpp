#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hpa {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size caps for the expensive operations.
struct Budget {
  std::size_t gram_entries = 10000;
  std::size_t max_boxes = 16;
  int tiling_k = 8;

  /// "key=value,..." with keys gram_entries, max_boxes, tiling_k, or a bare
  /// number for gram_entries.  Throws std::invalid_argument.
  static Budget parse(const std::string& text);
  static Budget parse(const std::string& text, Budget base);

  /// Defaults overridden by HPA_BUDGET when set.
  static Budget from_env();
};

}  // namespace hpa
