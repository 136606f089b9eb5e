// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// RANSAC hypothesis generators: Gauss-Newton and Levenberg-Marquardt on
// minimal five-match sets, robust IRLS on super-minimal sets, and the
// direct five-point solver (see fivepoint.hpp). Generators return nothing
// rather than erroring when a set does not optimize cleanly; failing fast
// and cheaply is the design goal.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/fivepoint.hpp"
#include "core/geom.hpp"
#include "core/rng.hpp"

namespace essmat {

enum class Generator { LM, GN, ROBUST, FIVEPOINT };

const char* generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

struct SolverConfig {
  int gn_max_iters = 10;
  int lm_max_iters = 20;
  double lm_lambda_init = 1e-3;
  // Acceptance bound on the minimal-set residual RMS.
  double converge_rms = 1e-8;
  // Super-minimal set size; 10 works markedly better than anything smaller.
  int robust_set_size = 10;
  // Scale of the redescending Cauchy weight, in epipolar-error units.
  double robust_scale = 0.01;
  int robust_max_iters = 20;
  double fivepoint_accept_tol = 1e-6;  // relative to max |coeff| of d
  double fivepoint_z_max = 100.0;

  void validate() const;  // throws std::invalid_argument
  FivePointSettings fivepoint() const {
    return {fivepoint_accept_tol, fivepoint_z_max};
  }
};

// A candidate essential matrix with provenance.
struct Hypothesis {
  EssentialMatrix essential;
  std::optional<EssentialPose> pose;  // absent for five-point solutions
  Generator generator = Generator::GN;
  int iterations = 0;
  double final_rms = 0.0;
};

// Uniform random pose: rotation uniform over SO(3), translation direction
// uniform over the sphere. Deterministic for a given rng state.
EssentialPose random_pose(Rng& rng);

// Gauss-Newton on the five algebraic residuals (5x5 normal equations).
// Accepts iff the residual RMS drops below cfg.converge_rms within
// cfg.gn_max_iters iterations; abandons immediately when the error grows on
// two consecutive iterations or the normal equations are singular
// (condition estimate above 1e12).
std::optional<Hypothesis> solve_gn(std::span<const PointMatch> five,
                                   const EssentialPose& init,
                                   const SolverConfig& cfg);

// Levenberg-Marquardt with multiplicative damping (x10 on a rejected step,
// /10 on an accepted one, floor 1e-12); same acceptance criterion as
// solve_gn, budget cfg.lm_max_iters. If accepted_rms_trace is non-null it
// receives the residual RMS after every accepted step.
std::optional<Hypothesis> solve_lm(std::span<const PointMatch> five,
                                   const EssentialPose& init,
                                   const SolverConfig& cfg,
                                   std::vector<double>* accepted_rms_trace =
                                       nullptr);

// One iteratively-reweighted LM fit on epipolar reprojection errors, used
// by both solve_robust and the final refinement. Matches at a degenerate
// epipole get weight zero.
struct RobustFit {
  EssentialPose pose;
  int iterations = 0;
  std::vector<double> errors;   // signed larger epipolar error per match
  std::vector<double> weights;  // Cauchy weights at the final pose
};

RobustFit robust_irls_fit(std::span<const PointMatch> matches,
                          const EssentialPose& init, const SolverConfig& cfg);

// Cauchy M-estimator cost of E over the matches; infinite errors
// contribute a fixed saturated loss.
double robust_cost(const EssentialMatrix& e,
                   std::span<const PointMatch> matches, double scale);

// Robust IRLS fit of a super-minimal set (exactly cfg.robust_set_size
// matches, >= 6). Accepts iff the weighted RMS of epipolar errors over the
// top-weighted ceil(N/2)+2 matches is below 3*cfg.robust_scale.
std::optional<Hypothesis> solve_robust(std::span<const PointMatch> matches,
                                       const EssentialPose& init,
                                       const SolverConfig& cfg);

}  // namespace essmat
