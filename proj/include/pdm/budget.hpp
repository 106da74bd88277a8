#pragma once
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdm {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Budget for the exponential searches. Node counts are deterministic;
// the optional wall-clock deadline is a convenience for interactive use
// and makes runs non-reproducible near the limit.
struct SearchBudget {
  std::uint64_t max_nodes = ~std::uint64_t{0};
  bool has_deadline = false;
  std::chrono::steady_clock::time_point deadline{};

  SearchBudget() = default;
  explicit SearchBudget(std::uint64_t nodes) : max_nodes(nodes) {}
};

// Countdown shared by the nested searches of one operation.
struct BudgetMeter {
  SearchBudget budget;
  std::uint64_t nodes = 0;

  explicit BudgetMeter(const SearchBudget& b) : budget(b) {}
  void tick() {
    if (++nodes > budget.max_nodes) throw BudgetExceeded("node budget exceeded");
    if (budget.has_deadline && (nodes & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > budget.deadline)
      throw BudgetExceeded("time limit exceeded");
  }
};

}  // namespace pdm
