// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Preemptive breadth-first RANSAC over hypotheses from any generator, and
// the final robust refinement on all data.

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "core/solvers.hpp"

namespace essmat {

struct RansacConfig {
  int num_hypotheses = 500;       // M: hypothesis budget per estimation
  int block_size = 100;           // B: matches scored per preemption stage
  double inlier_threshold = 3e-3; // tau, in epipolar-error units
  Generator generator = Generator::GN;
  bool refine = true;             // final IRLS on all data
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Truncated squared epipolar error: min(e^2, tau^2), where e is the
// per-match epipolar reprojection error; sentinel errors saturate at tau^2.
double match_cost(const EssentialMatrix& e, const PointMatch& m, double tau);

struct RansacOutcome {
  std::optional<Hypothesis> best;
  int attempts = 0;              // minimal sets drawn
  int generator_successes = 0;   // attempts that produced >= 1 hypothesis
  int hypotheses_generated = 0;  // pool size entering preemptive scoring
};

// Draws minimal (or super-minimal) sets without replacement, generates up
// to cfg.num_hypotheses hypotheses (every five-point solution counts
// against the budget), then scores them breadth-first in blocks of
// cfg.block_size pre-shuffled matches, halving the surviving population
// after each block per the schedule f(i) = floor(M * 2^-floor(i/B)).
// Returns the surviving hypothesis of least cumulative truncated cost, or
// nothing when no generator call succeeded. Fully deterministic in
// (matches, cfg): attempt k draws from rng substream k of cfg.seed.
RansacOutcome preemptive_ransac(std::span<const PointMatch> matches,
                                const RansacConfig& cfg,
                                const SolverConfig& solver_cfg);

// Iteratively reweighted LM refinement of e0 on all matches (the
// solve_robust machinery without a set-size limit). Returns e0 unchanged
// when the pose cannot be recovered from e0 or when refinement does not
// improve the robust cost.
EssentialMatrix refine_irls(const EssentialMatrix& e0,
                            std::span<const PointMatch> matches,
                            const SolverConfig& solver_cfg);

}  // namespace essmat
