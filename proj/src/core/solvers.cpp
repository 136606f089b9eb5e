// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/solvers.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace essmat {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::LM:
      return "LM";
    case Generator::GN:
      return "GN";
    case Generator::ROBUST:
      return "ROBUST";
    case Generator::FIVEPOINT:
      return "FIVEPOINT";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
  if (name == "LM") return Generator::LM;
  if (name == "GN") return Generator::GN;
  if (name == "ROBUST") return Generator::ROBUST;
  if (name == "FIVEPOINT") return Generator::FIVEPOINT;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (gn_max_iters < 1 || lm_max_iters < 1 || robust_max_iters < 1) {
    throw std::invalid_argument("solver iteration counts must be >= 1");
  }
  if (!(lm_lambda_init > 0.0) || !(converge_rms > 0.0) ||
      !(robust_scale > 0.0) || !(fivepoint_accept_tol > 0.0) ||
      !(fivepoint_z_max > 0.0)) {
    throw std::invalid_argument("solver tolerances must be > 0");
  }
  if (robust_set_size < 6) {
    throw std::invalid_argument("robust_set_size must be >= 6");
  }
}

EssentialPose random_pose(Rng& rng) {
  EssentialPose pose;
  pose.rot = sample_rotation(rng);
  pose.trot = rotation_between(Vec3::UnitX(), sample_unit_vector(rng));
  return pose;
}

namespace {

EssentialPose apply_update(const EssentialPose& pose, const Vec5& delta) {
  EssentialPose out;
  out.rot = so3_exp(delta.head<3>()) * pose.rot;
  out.trot = pose.trot * so3_exp(Vec3(delta(3), delta(4), 0.0));
  return out;
}

double residual_rms(const EssentialPose& pose,
                    std::span<const PointMatch> five) {
  const EssentialMatrix e = essential_from_pose(pose);
  double sum = 0.0;
  for (const PointMatch& m : five) {
    const double r = residual(e, m);
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(five.size()));
}

// Solves (h + lambda I) delta = -g; reports a condition estimate of the
// undamped system via the eigenvalue ratio.
bool solve_normal_equations(const Mat5& h, const Vec5& g, double lambda,
                            Vec5& delta, double* cond) {
  Eigen::SelfAdjointEigenSolver<Mat5> eig(h);
  if (eig.info() != Eigen::Success) return false;
  const Vec5 ev = eig.eigenvalues();
  const double ev_max = ev.cwiseAbs().maxCoeff();
  const double ev_min = ev.minCoeff();
  *cond = (ev_min <= 0.0 || ev_max <= 0.0) ? kInfiniteError : ev_max / ev_min;
  Vec5 inv;
  for (int i = 0; i < 5; ++i) {
    const double lam = ev(i) + lambda;
    if (!(std::abs(lam) > 0.0)) return false;
    inv(i) = 1.0 / lam;
  }
  delta = -(eig.eigenvectors() *
            inv.asDiagonal() * (eig.eigenvectors().transpose() * g));
  return delta.allFinite();
}

struct MinimalSystem {
  Vec5 residuals;
  Eigen::Matrix<double, 5, 5> jacobian;  // row per match
};

MinimalSystem build_minimal_system(const EssentialPose& pose,
                                   std::span<const PointMatch> five) {
  MinimalSystem sys;
  const EssentialMatrix e = essential_from_pose(pose);
  for (int i = 0; i < 5; ++i) {
    sys.residuals(i) = residual(e, five[i]);
    sys.jacobian.row(i) = residual_jacobian(pose, five[i]).transpose();
  }
  return sys;
}

Hypothesis make_hypothesis(const EssentialPose& pose, Generator gen, int iters,
                           double rms) {
  Hypothesis h;
  h.essential = essential_from_pose(pose);
  h.pose = pose;
  h.generator = gen;
  h.iterations = iters;
  h.final_rms = rms;
  return h;
}

}  // namespace

std::optional<Hypothesis> solve_gn(std::span<const PointMatch> five,
                                   const EssentialPose& init,
                                   const SolverConfig& cfg) {
  if (five.size() != 5) {
    throw std::invalid_argument("solve_gn: need exactly 5 matches");
  }
  EssentialPose pose = init;
  double prev_rms = kInfiniteError;
  int increases = 0;
  for (int it = 0; it < cfg.gn_max_iters; ++it) {
    const MinimalSystem sys = build_minimal_system(pose, five);
    const double rms = sys.residuals.norm() / std::sqrt(5.0);
    if (rms < cfg.converge_rms) {
      return make_hypothesis(pose, Generator::GN, it, rms);
    }
    if (rms > prev_rms) {
      if (++increases >= 2) return std::nullopt;  // diverging, give up fast
    } else {
      increases = 0;
    }
    prev_rms = rms;

    const Mat5 h = sys.jacobian.transpose() * sys.jacobian;
    const Vec5 g = sys.jacobian.transpose() * sys.residuals;
    Vec5 delta;
    double cond = kInfiniteError;
    if (!solve_normal_equations(h, g, 0.0, delta, &cond) || cond > 1e12) {
      return std::nullopt;
    }
    pose = apply_update(pose, delta);
  }
  const double rms = residual_rms(pose, five);
  if (rms < cfg.converge_rms) {
    return make_hypothesis(pose, Generator::GN, cfg.gn_max_iters, rms);
  }
  return std::nullopt;
}

std::optional<Hypothesis> solve_lm(std::span<const PointMatch> five,
                                   const EssentialPose& init,
                                   const SolverConfig& cfg,
                                   std::vector<double>* accepted_rms_trace) {
  if (five.size() != 5) {
    throw std::invalid_argument("solve_lm: need exactly 5 matches");
  }
  EssentialPose pose = init;
  double rms = residual_rms(pose, five);
  if (accepted_rms_trace) accepted_rms_trace->push_back(rms);
  double lambda = cfg.lm_lambda_init;
  for (int it = 0; it < cfg.lm_max_iters; ++it) {
    if (rms < cfg.converge_rms) {
      return make_hypothesis(pose, Generator::LM, it, rms);
    }
    const MinimalSystem sys = build_minimal_system(pose, five);
    const Mat5 h = sys.jacobian.transpose() * sys.jacobian;
    const Vec5 g = sys.jacobian.transpose() * sys.residuals;
    Vec5 delta;
    double cond = 0.0;
    if (!solve_normal_equations(h, g, lambda, delta, &cond)) {
      return std::nullopt;
    }
    const EssentialPose trial = apply_update(pose, delta);
    const double trial_rms = residual_rms(trial, five);
    if (trial_rms < rms) {
      pose = trial;
      rms = trial_rms;
      lambda = std::max(lambda * 0.1, 1e-12);
      if (accepted_rms_trace) accepted_rms_trace->push_back(rms);
    } else {
      lambda *= 10.0;
    }
  }
  if (rms < cfg.converge_rms) {
    return make_hypothesis(pose, Generator::LM, cfg.lm_max_iters, rms);
  }
  return std::nullopt;
}

namespace {

// Signed epipolar error (the larger of g, g') and its derivative with
// respect to the five pose parameters. valid == false marks a degenerate
// epipole; such matches drop out of the weighted system.
struct ErrorRow {
  double error = 0.0;
  Vec5 jac = Vec5::Zero();
  bool valid = false;
};

ErrorRow epipolar_error_row(const EssentialPose& pose, const PointMatch& m,
                            bool with_jacobian) {
  ErrorRow row;
  const Mat3& r = pose.rot.matrix();
  const Mat3& rt = pose.trot.matrix();
  const Vec3 t = rt.col(0);
  const Mat3 e = skew(t) * r;

  const Vec3 line1 = e * m.q;
  const Vec3 line2 = e.transpose() * m.qp;
  const double res = m.qp.dot(line1);
  const double d1 = line1.head<2>().norm();
  const double d2 = line2.head<2>().norm();
  // Either denominator collapsing makes max(|g|, |g'|) the sentinel, and
  // sentinel matches carry no weight.
  if (d1 < 1e-12 || d2 < 1e-12) return row;

  const double g1 = res / d1;
  const double g2 = res / d2;
  const bool use_first = std::abs(g1) >= std::abs(g2);

  row.valid = true;
  row.error = use_first ? g1 : g2;
  if (!with_jacobian) return row;

  static const Mat3 kG1 = (Mat3() << 0, 1, 0, -1, 0, 0, 0, 0, 0).finished();
  static const Mat3 kG2 = (Mat3() << 0, 0, 1, 0, 0, 0, -1, 0, 0).finished();
  static const Mat3 kG3 = (Mat3() << 0, 0, 0, 0, 0, 1, 0, -1, 0).finished();
  const double denom = use_first ? d1 : d2;
  // dE/dtheta_k as in residual_jacobian: rotation generators act from the
  // left of R, translation generators tilt t.
  Mat3 de[5];
  de[0] = skew(t) * kG1 * r;
  de[1] = skew(t) * kG2 * r;
  de[2] = skew(t) * kG3 * r;
  de[3] = skew(Vec3(-rt.col(1))) * r;
  de[4] = skew(Vec3(-rt.col(2))) * r;
  for (int k = 0; k < 5; ++k) {
    const double dres = m.qp.dot(de[k] * m.q);
    double ddenom;
    if (use_first) {
      const Vec3 dline = de[k] * m.q;
      ddenom = line1.head<2>().dot(dline.head<2>()) / d1;
    } else {
      const Vec3 dline = de[k].transpose() * m.qp;
      ddenom = line2.head<2>().dot(dline.head<2>()) / d2;
    }
    row.jac(k) = (dres - row.error * ddenom) / denom;
  }
  return row;
}

double cauchy_weight(double error, double scale) {
  const double u = error / scale;
  return 1.0 / (1.0 + u * u);
}

}  // namespace

RobustFit robust_irls_fit(std::span<const PointMatch> matches,
                          const EssentialPose& init, const SolverConfig& cfg) {
  const int n = static_cast<int>(matches.size());
  const double s = cfg.robust_scale;
  EssentialPose pose = init;
  double lambda = cfg.lm_lambda_init;
  int iters_used = 0;

  std::vector<ErrorRow> rows(n);
  for (int it = 0; it < cfg.robust_max_iters; ++it) {
    iters_used = it + 1;
    Mat5 h = Mat5::Zero();
    Vec5 g = Vec5::Zero();
    std::vector<double> w(n, 0.0);
    double cost = 0.0;
    for (int i = 0; i < n; ++i) {
      rows[i] = epipolar_error_row(pose, matches[i], true);
      if (!rows[i].valid) continue;
      w[i] = cauchy_weight(rows[i].error, s);
      h.noalias() += w[i] * rows[i].jac * rows[i].jac.transpose();
      g.noalias() += (w[i] * rows[i].error) * rows[i].jac;
      cost += w[i] * rows[i].error * rows[i].error;
    }
    Vec5 delta;
    double cond = 0.0;
    if (!solve_normal_equations(h, g, lambda, delta, &cond)) break;
    const EssentialPose trial = apply_update(pose, delta);
    // Step acceptance under the weights of this outer iteration.
    double trial_cost = 0.0;
    bool finite = true;
    for (int i = 0; i < n; ++i) {
      if (w[i] == 0.0) continue;
      const ErrorRow tr = epipolar_error_row(trial, matches[i], false);
      if (!tr.valid) {
        finite = false;
        break;
      }
      trial_cost += w[i] * tr.error * tr.error;
    }
    if (finite && trial_cost < cost) {
      pose = trial;
      lambda = std::max(lambda * 0.1, 1e-12);
      if (delta.norm() < 1e-14) break;
    } else {
      lambda *= 10.0;
    }
  }

  RobustFit fit;
  fit.pose = pose;
  fit.iterations = iters_used;
  fit.errors.resize(n);
  fit.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const ErrorRow row = epipolar_error_row(pose, matches[i], false);
    fit.errors[i] = row.valid ? row.error : kInfiniteError;
    fit.weights[i] = row.valid ? cauchy_weight(row.error, s) : 0.0;
  }
  return fit;
}

double robust_cost(const EssentialMatrix& e,
                   std::span<const PointMatch> matches, double scale) {
  // Saturate the (unbounded) Cauchy loss for infinite errors.
  const double rho_max =
      0.5 * scale * scale * std::log1p(1e16);
  double cost = 0.0;
  for (const PointMatch& m : matches) {
    const double err = epipolar_error(e, m);
    if (!std::isfinite(err)) {
      cost += rho_max;
      continue;
    }
    const double u = err / scale;
    cost += std::min(0.5 * scale * scale * std::log1p(u * u), rho_max);
  }
  return cost;
}

std::optional<Hypothesis> solve_robust(std::span<const PointMatch> matches,
                                       const EssentialPose& init,
                                       const SolverConfig& cfg) {
  if (static_cast<int>(matches.size()) != cfg.robust_set_size) {
    throw std::invalid_argument("solve_robust: set size != robust_set_size");
  }
  const RobustFit fit = robust_irls_fit(matches, init, cfg);

  // Weighted RMS over the top-weighted majority of the set.
  const int n = static_cast<int>(matches.size());
  const int majority = (n + 1) / 2 + 2;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return fit.weights[a] > fit.weights[b];
  });
  double wsum = 0.0;
  double wsq = 0.0;
  for (int k = 0; k < majority && k < n; ++k) {
    const int i = order[k];
    if (!std::isfinite(fit.errors[i])) continue;
    wsum += fit.weights[i];
    wsq += fit.weights[i] * fit.errors[i] * fit.errors[i];
  }
  if (wsum <= 0.0) return std::nullopt;
  const double weighted_rms = std::sqrt(wsq / wsum);
  if (weighted_rms >= 3.0 * cfg.robust_scale) return std::nullopt;

  Hypothesis h = make_hypothesis(fit.pose, Generator::ROBUST, fit.iterations,
                                 weighted_rms);
  return h;
}

}  // namespace essmat
