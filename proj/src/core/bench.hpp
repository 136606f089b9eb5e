// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark harness: seeded trials over algorithm/parameter grids, wall
// time measurement, reliability aggregation with Wilson intervals, and
// machine-readable results (CSV/JSON) plus per-series plot data.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/options.hpp"

namespace essmat {

struct BenchGridEntry {
  Generator algorithm = Generator::GN;
  double inlier_fraction = 0.5;
  int num_matches = 500;
  int hypotheses = 500;  // M
  int block_size = 100;  // B
  int trials = 100;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TrialResult {
  BenchGridEntry point;  // grid coordinates of this trial
  int trial_index = 0;
  double wall_time_s = 0.0;  // estimation only; scene generation excluded
  bool correct = false;
  int hypotheses_generated = 0;
  int generator_successes = 0;
};

struct ReliabilityRow {
  Generator algorithm = Generator::GN;
  double inlier_fraction = 0.0;
  int num_matches = 0;
  int hypotheses = 0;
  int block_size = 0;
  int trials = 0;
  double reliability = 0.0;
  double reliability_lo = 0.0;  // Wilson 95% interval
  double reliability_hi = 0.0;
  double mean_time_s = 0.0;
  double median_time_s = 0.0;
};

// 95% Wilson score interval for `successes` out of `n`.
std::pair<double, double> wilson_interval(int successes, int n);

// One seeded trial: scene -> preemptive RANSAC -> optional IRLS refinement
// -> correctness. An estimator that returns nothing scores as incorrect.
TrialResult run_trial(const BenchGridEntry& point, int trial_index,
                      const Options& opts);

// All trials of all grid entries, parallelized across trials when
// threads > 1. Output order and content are independent of thread count;
// only the timing fields vary between runs.
std::vector<TrialResult> run_grid(std::span<const BenchGridEntry> grid,
                                  const Options& opts, int threads);

// Groups results by (algorithm, inlier_fraction, num_matches, hypotheses,
// block_size) and aggregates correctness and timing. Rows sorted by the
// group key.
std::vector<ReliabilityRow> reliability(std::span<const TrialResult> results);

// CSV columns, exactly:
//   algorithm,inlier_fraction,num_matches,hypotheses,block_size,trials,
//   reliability,reliability_lo,reliability_hi,mean_time_s,median_time_s
void write_results_csv(std::span<const ReliabilityRow> rows,
                       const std::string& path);
void write_results_json(std::span<const ReliabilityRow> rows,
                        const std::string& path);

// Reads rows back from a .csv or .json results file (by extension).
std::vector<ReliabilityRow> load_results(const std::string& path);

// One two-column text file (mean_time_s reliability) per series, a series
// being a (algorithm, inlier_fraction, num_matches, block_size) group
// ordered by hypothesis count. Returns the paths written.
std::vector<std::string> write_curves(std::span<const ReliabilityRow> rows,
                                      const std::string& prefix);

// JSON array of grid entries using the field names of BenchGridEntry.
std::vector<BenchGridEntry> load_grid(const std::string& path);
std::vector<BenchGridEntry> parse_grid(const std::string& json_text);

}  // namespace essmat
