#include "chib/solvers.hpp"

namespace chib {

const char* to_string(SolveStatus s) {
  return s == SolveStatus::complete ? "complete" : "budget_exhausted";
}

Budget::Budget(const SolverLimits& limits) : limits_(limits), start_(std::chrono::steady_clock::now()) {}

bool Budget::tick() {
  if (exhausted_) return false;
  ++nodes_;
  if (limits_.node_budget && nodes_ > *limits_.node_budget) {
    exhausted_ = true;
    return false;
  }
  if (limits_.time_budget && (nodes_ & 1023u) == 0) {
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
    if (spent.count() > *limits_.time_budget) {
      exhausted_ = true;
      return false;
    }
  }
  return true;
}

}  // namespace chib
