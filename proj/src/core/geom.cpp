// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/geom.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace essmat {

namespace {

// Generator combination w1*G1 + w2*G2 + w3*G3.
Mat3 generator_sum(const Vec3& w) {
  Mat3 g;
  g << 0.0, w(0), w(1),  //
      -w(0), 0.0, w(2),  //
      -w(1), -w(2), 0.0;
  return g;
}

}  // namespace

Rotation3 so3_exp(const Vec3& w) {
  const Mat3 g = generator_sum(w);
  const double theta2 = w.squaredNorm();
  Mat3 r;
  if (theta2 < 1e-16) {
    r = Mat3::Identity() + g + 0.5 * (g * g);
  } else {
    const double theta = std::sqrt(theta2);
    r = Mat3::Identity() + (std::sin(theta) / theta) * g +
        ((1.0 - std::cos(theta)) / theta2) * (g * g);
  }
  return Rotation3::from_matrix_unchecked(r);
}

Vec3 so3_log(const Rotation3& r) {
  Eigen::Quaterniond q(r.matrix());
  q.normalize();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  const double sin_half = q.vec().norm();
  Vec3 aa;
  if (sin_half < 1e-12) {
    aa = 2.0 * q.vec();
  } else {
    aa = (2.0 * std::atan2(sin_half, q.w()) / sin_half) * q.vec();
  }
  // generator_sum(w) equals skew(a) with a = (-w3, w2, -w1); invert that.
  return Vec3(-aa.z(), aa.y(), -aa.x());
}

double rotation_angle(const Rotation3& r) {
  Eigen::Quaterniond q(r.matrix());
  q.normalize();
  return 2.0 * std::atan2(q.vec().norm(), std::abs(q.w()));
}

Rotation3 rotation_between(const Vec3& from, const Vec3& to) {
  return Rotation3::from_quaternion(
      Eigen::Quaterniond::FromTwoVectors(from, to));
}

EssentialMatrix EssentialMatrix::from_matrix(const Mat3& raw) {
  const double n = raw.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("essential matrix must be finite and nonzero");
  }
  EssentialMatrix e;
  e.m = raw * (std::sqrt(2.0) / n);
  return e;
}

double essential_det_rel(const EssentialMatrix& e) {
  const double n = e.m.norm();
  return std::abs(e.m.determinant()) / (n * n * n);
}

double essential_trace_rel(const EssentialMatrix& e) {
  const Mat3 eet = e.m * e.m.transpose();
  const Mat3 t = 2.0 * eet * e.m - eet.trace() * e.m;
  const double n = e.m.norm();
  return t.norm() / (n * n * n);
}

double essential_distance(const EssentialMatrix& a, const EssentialMatrix& b) {
  const Mat3 an = a.m * (std::sqrt(2.0) / a.m.norm());
  const Mat3 bn = b.m * (std::sqrt(2.0) / b.m.norm());
  return std::min((an - bn).norm(), (an + bn).norm());
}

EssentialMatrix essential_from_pose(const EssentialPose& pose) {
  EssentialMatrix e;
  e.m = skew(pose.translation()) * pose.rot.matrix();
  return e;  // |[t]x R|_F = sqrt(2) for unit t already
}

Vec5 residual_jacobian(const EssentialPose& pose, const PointMatch& m) {
  const Mat3& r = pose.rot.matrix();
  const Mat3& rt = pose.trot.matrix();
  const Vec3 t = rt.col(0);
  const Vec3 u = r * m.q;
  // q' . (t x (G_i u)) == (q' x t) . (G_i u); fold q' through the skew once.
  const Vec3 a = m.qp.cross(t);
  Vec5 j;
  j(0) = a.dot(Vec3(u.y(), -u.x(), 0.0));
  j(1) = a.dot(Vec3(u.z(), 0.0, -u.x()));
  j(2) = a.dot(Vec3(0.0, u.z(), -u.y()));
  // translation: d t / d v_i = R_t G_i e1 = -rt.col(1), -rt.col(2)
  j(3) = m.qp.dot(Vec3(-rt.col(1)).cross(u));
  j(4) = m.qp.dot(Vec3(-rt.col(2)).cross(u));
  return j;
}

EpipolarErrors epipolar_errors(const EssentialMatrix& e, const PointMatch& m) {
  const Vec3 line1 = e.m * m.q;               // epipolar line of q in image 2
  const Vec3 line2 = e.m.transpose() * m.qp;  // epipolar line of q' in image 1
  const double r = m.qp.dot(line1);
  const double d1 = line1.head<2>().norm();
  const double d2 = line2.head<2>().norm();
  EpipolarErrors out;
  out.g = d1 < 1e-12 ? kInfiniteError : r / d1;
  out.gp = d2 < 1e-12 ? kInfiniteError : r / d2;
  return out;
}

double epipolar_error(const EssentialMatrix& e, const PointMatch& m) {
  const EpipolarErrors ge = epipolar_errors(e, m);
  return std::max(std::abs(ge.g), std::abs(ge.gp));
}

double rms_epipolar_error(const EssentialMatrix& e,
                          std::span<const PointMatch> matches) {
  if (matches.empty()) {
    throw std::invalid_argument("rms_epipolar_error: empty match list");
  }
  double sum = 0.0;
  for (const PointMatch& m : matches) {
    const double err = epipolar_error(e, m);
    if (!std::isfinite(err)) return kInfiniteError;
    sum += err * err;
  }
  return std::sqrt(sum / static_cast<double>(matches.size()));
}

EssentialPose pose_from_relative(const RelativePose& rp) {
  EssentialPose pose;
  pose.rot = rp.rotation;
  pose.trot = rotation_between(Vec3::UnitX(), rp.translation.normalized());
  return pose;
}

std::optional<Triangulation> triangulate(const RelativePose& pose,
                                         const PointMatch& m) {
  const Vec3 d1 = m.q.normalized();
  const Vec3 d2 = pose.rotation.matrix().transpose() * m.qp.normalized();
  if (d1.cross(d2).norm() < 1e-8) return std::nullopt;  // parallel rays
  const Vec3 c2 = -(pose.rotation.matrix().transpose() * pose.translation);
  // Closest points of the two rays: min over (s, u) of |s d1 - (c2 + u d2)|.
  const double dd = d1.dot(d2);
  const double det = dd * dd - 1.0;
  const double b1 = d1.dot(c2);
  const double b2 = d2.dot(c2);
  const double s = (-b1 + dd * b2) / det;
  const double u = (-dd * b1 + b2) / det;
  Triangulation out;
  out.point = 0.5 * ((s * d1) + (c2 + u * d2));
  out.depth1 = out.point.z();
  out.depth2 = (pose.rotation.matrix() * out.point + pose.translation).z();
  return out;
}

std::optional<RelativePose> decompose_essential(
    const EssentialMatrix& e, std::span<const PointMatch> matches) {
  if (matches.size() < 2) {
    throw std::invalid_argument("decompose_essential: need at least 2 matches");
  }
  Eigen::JacobiSVD<Mat3> svd(e.m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 sv = svd.singularValues();
  if (sv(1) < 1e-6 * sv(0)) return std::nullopt;  // numerically rank 1
  if (sv(2) > 1e-4 * sv(0)) return std::nullopt;  // numerically rank 3
  Mat3 u = svd.matrixU();
  Mat3 v = svd.matrixV();
  if (u.determinant() < 0.0) u = -u;
  if (v.determinant() < 0.0) v = -v;
  Mat3 w;
  w << 0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0;
  const Mat3 ra = u * w * v.transpose();
  const Mat3 rb = u * w.transpose() * v.transpose();
  const Vec3 t = u.col(2);

  const RelativePose candidates[4] = {
      {Rotation3::from_matrix_unchecked(ra), t},
      {Rotation3::from_matrix_unchecked(ra), -t},
      {Rotation3::from_matrix_unchecked(rb), t},
      {Rotation3::from_matrix_unchecked(rb), -t},
  };
  int best = 0;
  int best_votes = -1;
  for (int c = 0; c < 4; ++c) {
    int votes = 0;
    for (const PointMatch& m : matches) {
      const auto tri = triangulate(candidates[c], m);
      if (tri && tri->depth1 > 0.0 && tri->depth2 > 0.0) ++votes;
    }
    if (votes > best_votes) {
      best_votes = votes;
      best = c;
    }
  }
  return candidates[best];
}

Vec3 sample_unit_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(gauss(rng), gauss(rng), gauss(rng));
  } while (v.squaredNorm() < 1e-24);
  return v.normalized();
}

Rotation3 sample_rotation(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  } while (q.squaredNorm() < 1e-24);
  return Rotation3::from_quaternion(q);
}

}  // namespace essmat
