// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_BUDGET_HPP
#define CONTPATH_BUDGET_HPP

#include <cstdint>

#include "contpath/errors.hpp"

namespace contpath {

// Function-evaluation accounting shared by all optimizers. Every objective
// or gradient query costs its declared number of units: a plain value or
// analytic gradient is 1, a K-sample zeroth-order estimate is K+1.
class Budget {
 public:
  explicit Budget(std::int64_t limit) : limit_(limit) {
    if (limit < 0) throw InvalidParam("budget limit must be non-negative");
  }

  // Consumes `units` if they fit, returns false otherwise (nothing consumed).
  bool try_consume(std::int64_t units) noexcept {
    if (used_ + units > limit_) return false;
    used_ += units;
    return true;
  }

  // Consumes unconditionally; throws if the limit would be exceeded.
  void consume(std::int64_t units) {
    if (!try_consume(units)) throw BudgetExhausted("function-evaluation budget exhausted");
  }

  std::int64_t used() const noexcept { return used_; }
  std::int64_t limit() const noexcept { return limit_; }
  std::int64_t remaining() const noexcept { return limit_ - used_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

}  // namespace contpath

#endif  // CONTPATH_BUDGET_HPP
