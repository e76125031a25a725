#pragma once

#include <stdexcept>
#include <string>

namespace wpr {

/// A computation gave up after exhausting a configured budget (resolution
/// length, stabilization index). Distinct from malformed input.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wpr
