#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace tutte {

// Caller-supplied data violates a documented precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exact search hit its node-expansion cap.  Distinct from "no object
// exists": callers must never conflate the two outcomes.
struct BudgetExceededError : std::runtime_error {
  BudgetExceededError() : std::runtime_error("search budget exceeded") {}
};

// Two supposedly equivalent computations disagree (e.g. the two line-graph
// characterizations).  Indicates a bug, not bad input.
struct InternalInconsistencyError : std::logic_error {
  explicit InternalInconsistencyError(const std::string& what,
                                      nlohmann::json detail = nullptr)
      : std::logic_error(what), detail(std::move(detail)) {}
  nlohmann::json detail;
};

// A verified structural guarantee failed on concrete data.  Carries enough
// context (graph6 strings, witness sequences) to replay the failure.
struct CounterexampleError : std::runtime_error {
  CounterexampleError(const std::string& what, nlohmann::json detail)
      : std::runtime_error(what), detail(std::move(detail)) {}
  nlohmann::json detail;
};

// Node-expansion budget threaded through the exponential searches.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceededError();
  }
  bool can_afford(std::uint64_t n) const { return used_ + n <= limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace tutte
