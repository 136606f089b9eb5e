// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace essmat {

void SceneConfig::validate() const {
  if (!(fov_degrees > 0.0) || !(fov_degrees < 180.0)) {
    throw std::invalid_argument("fov_degrees must be in (0, 180)");
  }
  if (!(noise_sigma >= 0.0)) {
    throw std::invalid_argument("noise_sigma must be >= 0");
  }
  if (num_inliers < 0 || num_outliers < 0) {
    throw std::invalid_argument("match counts must be >= 0");
  }
  if (!(max_translation > 0.0)) {
    throw std::invalid_argument("max_translation must be > 0");
  }
  if (!(max_rotation_degrees >= 0.0)) {
    throw std::invalid_argument("max_rotation_degrees must be >= 0");
  }
  if (!(min_depth > 0.0)) {
    throw std::invalid_argument("min_depth must be > 0");
  }
}

std::vector<PointMatch> SyntheticScene::labeled_inliers() const {
  std::vector<PointMatch> out;
  for (const PointMatch& m : matches) {
    if (m.label == 1) out.push_back(m);
  }
  return out;
}

SyntheticScene generate_scene(const SceneConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double tan_half = std::tan(cfg.fov_degrees * M_PI / 360.0);
  const double max_rot = cfg.max_rotation_degrees * M_PI / 180.0;

  for (int transform_try = 0; transform_try < 100; ++transform_try) {
    // Random bounded transform: uniform rotation axis with uniform angle,
    // translation uniform in the ball.
    const Vec3 axis = sample_unit_vector(rng);
    const Rotation3 rot = Rotation3::from_axis_angle(axis, unit(rng) * max_rot);
    Vec3 t;
    do {
      t = Vec3(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0,
               2.0 * unit(rng) - 1.0);
    } while (t.squaredNorm() > 1.0 || t.squaredNorm() < 1e-24);
    t *= cfg.max_translation;

    std::vector<PointMatch> matches;
    matches.reserve(cfg.num_inliers + cfg.num_outliers);

    // Inliers: resample until the configured count is visible in both
    // frustums (visibility judged before noise).
    const long long budget = 1000 + 200LL * cfg.num_inliers;
    long long tries = 0;
    while (static_cast<int>(matches.size()) < cfg.num_inliers &&
           tries < budget) {
      ++tries;
      const double u = (2.0 * unit(rng) - 1.0) * tan_half;
      const double v = (2.0 * unit(rng) - 1.0) * tan_half;
      const double inv_depth = (1.0 - unit(rng)) / cfg.min_depth;  // (0, 1/d0]
      const Vec3 x1 = Vec3(u, v, 1.0) / inv_depth;
      const Vec3 x2 = rot.matrix() * x1 + t;
      if (x2.z() <= 0.0) continue;
      const double up = x2.x() / x2.z();
      const double vp = x2.y() / x2.z();
      if (std::abs(up) > tan_half || std::abs(vp) > tan_half) continue;
      PointMatch m;
      m.q = Vec3(u + cfg.noise_sigma * gauss(rng),
                 v + cfg.noise_sigma * gauss(rng), 1.0);
      m.qp = Vec3(up + cfg.noise_sigma * gauss(rng),
                  vp + cfg.noise_sigma * gauss(rng), 1.0);
      m.label = 1;
      matches.push_back(m);
    }
    if (static_cast<int>(matches.size()) < cfg.num_inliers) continue;

    // Mismatches: independent uniform points in each image.
    for (int i = 0; i < cfg.num_outliers; ++i) {
      PointMatch m;
      m.q = Vec3((2.0 * unit(rng) - 1.0) * tan_half,
                 (2.0 * unit(rng) - 1.0) * tan_half, 1.0);
      m.qp = Vec3((2.0 * unit(rng) - 1.0) * tan_half,
                  (2.0 * unit(rng) - 1.0) * tan_half, 1.0);
      m.label = 0;
      matches.push_back(m);
    }

    for (int i = static_cast<int>(matches.size()) - 1; i > 0; --i) {
      std::uniform_int_distribution<int> pick(0, i);
      std::swap(matches[i], matches[pick(rng)]);
    }

    SyntheticScene scene;
    scene.rotation = rot;
    scene.translation = t;
    EssentialMatrix e;
    e.m = skew(t.normalized()) * rot.matrix();
    scene.essential = e;
    scene.matches = std::move(matches);
    return scene;
  }
  throw std::runtime_error(
      "generate_scene: no visible points after 100 transforms");
}

bool classify_correct(const EssentialMatrix& estimate,
                      const SyntheticScene& scene, double threshold) {
  const std::vector<PointMatch> inliers = scene.labeled_inliers();
  if (inliers.empty()) {
    throw std::invalid_argument("classify_correct: scene has no inliers");
  }
  return rms_epipolar_error(estimate, inliers) < threshold;
}

}  // namespace essmat
