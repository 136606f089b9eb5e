// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Two-view epipolar geometry: the unconstrained 5-DoF essential-matrix
// parameterization, algebraic residuals and their analytic derivatives,
// epipolar reprojection errors, triangulation and pose decomposition.

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "core/rng.hpp"

namespace essmat {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

// Epipolar errors at a degenerate epipole take this value; it compares
// larger than any finite error, so scoring rejects such matches naturally.
inline constexpr double kInfiniteError = std::numeric_limits<double>::infinity();

// A correspondence (q, q') in normalized homogeneous camera coordinates.
// Finite points canonically carry w = 1; the algebraic residual accepts any
// homogeneous representative (it is bilinear in q and q').
struct PointMatch {
  Vec3 q;
  Vec3 qp;
  int label = -1;  // ground truth: 1 inlier, 0 outlier, -1 unknown
};

inline bool point_is_valid(const Vec3& p) { return p.squaredNorm() > 0.0; }

// Canonical form of a finite homogeneous point (w = 1). Idempotent.
inline Vec3 canonical_point(const Vec3& p) {
  return std::abs(p.z()) > 0.0 ? Vec3(p / p.z()) : p;
}

// Cross-product matrix: skew(t) * v == t x v.
inline Mat3 skew(const Vec3& t) {
  Mat3 s;
  s << 0.0, -t.z(), t.y(), t.z(), 0.0, -t.x(), -t.y(), t.x(), 0.0;
  return s;
}

// A proper rotation (orthogonal, det +1). Construction goes through the
// factories below so values stay on the manifold; from_matrix_unchecked is
// for matrices already known to be rotations (e.g. SVD factors).
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::Identity()) {}

  static Rotation3 from_matrix_unchecked(const Mat3& m) { return Rotation3(m); }
  static Rotation3 from_quaternion(const Eigen::Quaterniond& q) {
    return Rotation3(q.normalized().toRotationMatrix());
  }
  static Rotation3 from_axis_angle(const Vec3& unit_axis, double angle) {
    return Rotation3(Eigen::AngleAxisd(angle, unit_axis).toRotationMatrix());
  }

  const Mat3& matrix() const { return m_; }
  Rotation3 transposed() const { return Rotation3(m_.transpose()); }
  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

  bool is_valid(double tol = 1e-12) const {
    return (m_.transpose() * m_ - Mat3::Identity()).norm() <= tol &&
           std::abs(m_.determinant() - 1.0) <= tol;
  }

 private:
  explicit Rotation3(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

// exp of w1*G1 + w2*G2 + w3*G3 for the fixed generator basis
//   G1 = [0 1 0; -1 0 0; 0 0 0]
//   G2 = [0 0 1;  0 0 0; -1 0 0]
//   G3 = [0 0 0;  0 0 1; 0 -1 0]
// Falls back to the second-order Taylor expansion for |w| < 1e-8.
Rotation3 so3_exp(const Vec3& w);

// Inverse of so3_exp (same generator packing). Angle of the result is in
// [0, pi].
Vec3 so3_log(const Rotation3& r);

double rotation_angle(const Rotation3& r);

// Shortest-arc rotation taking unit vector `from` onto unit vector `to`.
Rotation3 rotation_between(const Vec3& from, const Vec3& to);

// The 5-DoF parameterization: E = [t]x R with t = R_t * (1 0 0)^T.
struct EssentialPose {
  Rotation3 rot;   // R
  Rotation3 trot;  // R_t

  Vec3 translation() const { return trot.matrix().col(0); }
};

// A 3x3 essential matrix, by convention scaled to Frobenius norm sqrt(2)
// (the norm of [t]x R with unit t). Sign remains ambiguous.
struct EssentialMatrix {
  Mat3 m = Mat3::Zero();

  static EssentialMatrix from_matrix(const Mat3& raw);
};

// Residuals of the two defining cubic constraints, relative to |E|_F^3.
double essential_det_rel(const EssentialMatrix& e);
double essential_trace_rel(const EssentialMatrix& e);

// min over sign of the Frobenius distance after scaling both arguments to
// |E|_F = sqrt(2). The canonical comparison between essential matrices.
double essential_distance(const EssentialMatrix& a, const EssentialMatrix& b);

EssentialMatrix essential_from_pose(const EssentialPose& pose);

// Algebraic epipolar residual r = q'^T E q.
inline double residual(const EssentialMatrix& e, const PointMatch& m) {
  return m.qp.dot(e.m * m.q);
}

// d r / d (w1, w2, w3, v1, v2): three rotation derivatives (infinitesimal
// generators left-multiplied into R) followed by the two translation
// derivatives (generators right-multiplied into R_t), in that fixed order.
Vec5 residual_jacobian(const EssentialPose& pose, const PointMatch& m);

// Epipolar reprojection errors: the residual normalized by the image-plane
// norm of the epipolar line, in each image. Sign matches the residual.
// Degenerate denominators (< 1e-12) yield kInfiniteError.
struct EpipolarErrors {
  double g;
  double gp;
};

EpipolarErrors epipolar_errors(const EssentialMatrix& e, const PointMatch& m);

// max(|g|, |g'|), the per-match error used for scoring and classification.
double epipolar_error(const EssentialMatrix& e, const PointMatch& m);

// RMS over matches of epipolar_error; infinite errors propagate. Throws
// std::invalid_argument on an empty list.
double rms_epipolar_error(const EssentialMatrix& e,
                          std::span<const PointMatch> matches);

// Relative pose of the second camera: x2 = R x1 + t, |t| = 1 (the scale of
// the baseline is unrecoverable).
struct RelativePose {
  Rotation3 rotation;
  Vec3 translation;
};

// Rebuilds the 5-DoF parameterization from a decomposed pose.
EssentialPose pose_from_relative(const RelativePose& rp);

struct Triangulation {
  Vec3 point;     // in the first camera frame
  double depth1;  // signed depth along each optical axis
  double depth2;
};

// Midpoint triangulation of a match. Fails (nullopt) when the two rays are
// parallel to within 1e-8 rad.
std::optional<Triangulation> triangulate(const RelativePose& pose,
                                         const PointMatch& m);

// Four-candidate decomposition of E with chirality voting: the (R, t) pair
// triangulating the most matches in front of both cameras wins; ties go to
// the first candidate in the fixed order (Ra,+t), (Ra,-t), (Rb,+t), (Rb,-t).
// Fails when the singular-value profile is not (s, s, 0): rank-1 or rank-3
// inputs yield nullopt. Needs at least 2 matches.
std::optional<RelativePose> decompose_essential(
    const EssentialMatrix& e, std::span<const PointMatch> matches);

Vec3 sample_unit_vector(Rng& rng);
Rotation3 sample_rotation(Rng& rng);  // uniform over SO(3)

}  // namespace essmat
