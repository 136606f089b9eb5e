// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/ransac.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace essmat {

namespace {

// Cap on minimal-set draws when the generator keeps failing; keeps the
// hypothesis budget meaningful on hard data without looping forever.
constexpr int kMaxAttemptFactor = 8;

std::vector<int> sample_without_replacement(std::vector<int>& scratch, int k,
                                            Rng& rng) {
  const int n = static_cast<int>(scratch.size());
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(scratch[i], scratch[pick(rng)]);
    out[i] = scratch[i];
  }
  return out;
}

}  // namespace

void RansacConfig::validate() const {
  if (num_hypotheses < 0) {
    throw std::invalid_argument("num_hypotheses must be >= 0");
  }
  if (block_size < 1) throw std::invalid_argument("block_size must be >= 1");
  if (!(inlier_threshold > 0.0)) {
    throw std::invalid_argument("inlier_threshold must be > 0");
  }
}

double match_cost(const EssentialMatrix& e, const PointMatch& m, double tau) {
  const double err = epipolar_error(e, m);
  const double tau2 = tau * tau;
  if (!std::isfinite(err)) return tau2;
  return std::min(err * err, tau2);
}

RansacOutcome preemptive_ransac(std::span<const PointMatch> matches,
                                const RansacConfig& cfg,
                                const SolverConfig& solver_cfg) {
  cfg.validate();
  solver_cfg.validate();
  const int n = static_cast<int>(matches.size());
  const int set_size =
      cfg.generator == Generator::ROBUST ? solver_cfg.robust_set_size : 5;
  if (n < set_size) {
    throw std::invalid_argument("preemptive_ransac: too few matches");
  }

  RansacOutcome outcome;
  const int budget = cfg.num_hypotheses;

  // Pre-randomize the scoring order once.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  {
    Rng shuffle_rng = make_rng(derive_seed(cfg.seed, 0x8d5f03ba94e7d3c1ull));
    for (int i = n - 1; i > 0; --i) {
      std::uniform_int_distribution<int> pick(0, i);
      std::swap(order[i], order[pick(shuffle_rng)]);
    }
  }

  // Generate the hypothesis pool; attempt k is fully determined by
  // substream k, so any execution order yields the same pool.
  std::vector<Hypothesis> pool;
  pool.reserve(budget);
  std::vector<int> scratch(n);
  const long long max_attempts =
      static_cast<long long>(kMaxAttemptFactor) * budget;
  for (long long attempt = 0;
       attempt < max_attempts && static_cast<int>(pool.size()) < budget;
       ++attempt) {
    Rng rng = make_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));
    std::iota(scratch.begin(), scratch.end(), 0);
    const std::vector<int> idx =
        sample_without_replacement(scratch, set_size, rng);
    std::vector<PointMatch> subset(set_size);
    for (int i = 0; i < set_size; ++i) subset[i] = matches[idx[i]];

    ++outcome.attempts;
    int produced = 0;
    switch (cfg.generator) {
      case Generator::GN: {
        if (auto h = solve_gn(subset, random_pose(rng), solver_cfg)) {
          pool.push_back(std::move(*h));
          produced = 1;
        }
        break;
      }
      case Generator::LM: {
        if (auto h = solve_lm(subset, random_pose(rng), solver_cfg)) {
          pool.push_back(std::move(*h));
          produced = 1;
        }
        break;
      }
      case Generator::ROBUST: {
        if (auto h = solve_robust(subset, random_pose(rng), solver_cfg)) {
          pool.push_back(std::move(*h));
          produced = 1;
        }
        break;
      }
      case Generator::FIVEPOINT: {
        for (EssentialMatrix& e :
             five_point(subset, solver_cfg.fivepoint())) {
          Hypothesis h;
          h.essential = e;
          h.generator = Generator::FIVEPOINT;
          pool.push_back(std::move(h));
          ++produced;
        }
        break;
      }
    }
    if (produced > 0) ++outcome.generator_successes;
  }
  if (static_cast<int>(pool.size()) > budget) pool.resize(budget);
  outcome.hypotheses_generated = static_cast<int>(pool.size());
  if (pool.empty()) return outcome;

  // Breadth-first preemptive scoring.
  struct Scored {
    int pool_index;
    double cost;
  };
  std::vector<Scored> active(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    active[i] = {static_cast<int>(i), 0.0};
  }
  const double tau = cfg.inlier_threshold;
  int consumed = 0;
  int stage = 0;
  while (consumed < n) {
    const int end = std::min(consumed + cfg.block_size, n);
    for (Scored& s : active) {
      const EssentialMatrix& e = pool[s.pool_index].essential;
      for (int i = consumed; i < end; ++i) {
        s.cost += match_cost(e, matches[order[i]], tau);
      }
    }
    consumed = end;
    ++stage;
    const long long f =
        stage < 62 ? (static_cast<long long>(budget) >> stage) : 0;
    const std::size_t keep = static_cast<std::size_t>(std::max<long long>(f, 1));
    if (keep < active.size()) {
      std::stable_sort(active.begin(), active.end(),
                       [](const Scored& a, const Scored& b) {
                         if (a.cost != b.cost) return a.cost < b.cost;
                         return a.pool_index < b.pool_index;
                       });
      active.resize(keep);
    }
    if (f <= 1) break;  // schedule exhausted: lone survivor decided
  }

  const Scored* best = &active.front();
  for (const Scored& s : active) {
    if (s.cost < best->cost ||
        (s.cost == best->cost && s.pool_index < best->pool_index)) {
      best = &s;
    }
  }
  outcome.best = pool[best->pool_index];
  return outcome;
}

EssentialMatrix refine_irls(const EssentialMatrix& e0,
                            std::span<const PointMatch> matches,
                            const SolverConfig& solver_cfg) {
  const auto rel = decompose_essential(e0, matches);
  if (!rel) return e0;
  const EssentialPose start = pose_from_relative(*rel);
  const RobustFit fit = robust_irls_fit(matches, start, solver_cfg);
  const EssentialMatrix refined = essential_from_pose(fit.pose);
  const double scale = solver_cfg.robust_scale;
  if (robust_cost(refined, matches, scale) <=
      robust_cost(e0, matches, scale)) {
    return refined;
  }
  return e0;  // refinement diverged; keep the starting point
}

}  // namespace essmat
