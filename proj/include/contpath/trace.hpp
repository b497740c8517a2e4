// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_TRACE_HPP
#define CONTPATH_TRACE_HPP

#include <cstdint>
#include <vector>

namespace contpath {

// Per-iteration record of an optimization run. `f_best` is the best value of
// the original objective seen so far; it is produced through a monitoring
// callback that does not count against the run's budget, so traces can be
// emitted even for algorithms that never query f directly.
struct RunTrace {
  struct Record {
    std::int64_t iter = 0;
    std::int64_t evals = 0;
    double t = 1.0;       // homotopy level active at this record
    double f_best = 0.0;  // non-increasing across records
  };

  std::vector<Record> records;

  // Appends a record, folding `f_value` into the running best.
  void record(std::int64_t iter, std::int64_t evals, double t, double f_value) {
    const double best =
        records.empty() ? f_value : (f_value < records.back().f_best ? f_value : records.back().f_best);
    records.push_back({iter, evals, t, best});
  }

  double final_best() const { return records.empty() ? 0.0 : records.back().f_best; }
};

}  // namespace contpath

#endif  // CONTPATH_TRACE_HPP
