// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Synthetic two-view scene generator: points uniform in the first camera
// in image position and inverse depth, a random bounded transform, Gaussian
// measurement noise in both image planes, uniform mismatches, shuffled
// output. Exactly the configured number of good and bad matches is always
// produced, whatever the transform.

#pragma once

#include <cstdint>
#include <vector>

#include "core/geom.hpp"

namespace essmat {

struct SceneConfig {
  double fov_degrees = 90.0;
  double max_translation = 1.0;
  double max_rotation_degrees = 35.0;
  double noise_sigma = 0.001;
  int num_inliers = 250;
  int num_outliers = 250;
  double min_depth = 1.0;

  void validate() const;  // throws std::invalid_argument
};

struct SyntheticScene {
  Rotation3 rotation;  // second camera: x2 = R x1 + t
  Vec3 translation;
  EssentialMatrix essential;
  std::vector<PointMatch> matches;  // shuffled; labels carried per match

  std::vector<PointMatch> labeled_inliers() const;
};

// Deterministic in (cfg, seed). Labels mark which matches are inliers but
// are never consulted by estimators. Throws std::runtime_error if 100
// consecutive transforms leave too few points visible.
SyntheticScene generate_scene(const SceneConfig& cfg, std::uint64_t seed);

// RMS epipolar error of the estimate over the scene's known inliers,
// thresholded. The default threshold is twice the default noise sigma.
bool classify_correct(const EssentialMatrix& estimate,
                      const SyntheticScene& scene, double threshold = 0.002);

}  // namespace essmat
