// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Direct five-point essential-matrix solver: epipolar data matrix, null
// space by Gauss-Jordan reduction, cubic-constraint coefficient matrix,
// action-polynomial extraction and back substitution. Each stage degrades
// to "no solutions" instead of failing hard; speed is preferred over
// exhaustiveness throughout.

#pragma once

#include <Eigen/Core>

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "core/geom.hpp"
#include "core/poly.hpp"

namespace essmat {

using Mat59 = Eigen::Matrix<double, 5, 9>;
using Mat49 = Eigen::Matrix<double, 4, 9>;
using Mat1020 = Eigen::Matrix<double, 10, 20>;

// Rows annihilate the 5x9 data matrix they were extracted from. The basis
// is intentionally not orthonormal: Gauss-Jordan reduction to [I|A] gives
// [A^T|-I], which is all the later stages need and is much cheaper than an
// SVD.
struct NullBasis {
  Mat49 rows;
};

// Row i is the Kronecker-style vector of match i: [q'1*q1, q'1*q2, q'1*q3,
// q'2*q1, ...], so that row . vec(E) equals the epipolar residual of the
// match (vec(E) row-major).
Mat59 build_qtilde(std::span<const PointMatch> five);

// Null space of qtilde via Gauss-Jordan reduction with full pivoting;
// column permutations are undone so the rows annihilate the input as-is.
// Fails (nullopt) when a pivot falls below 1e-10 (rank-deficient data).
std::optional<NullBasis> null_basis(const Mat59& qtilde);

// 3x3 polynomial matrix C(z) with C(z) [x y 1]^T = 0 at solutions, plus
// d(z) = det C(z), degree 10 generically.
struct ActionPoly {
  std::array<std::array<Polynomial, 3>, 3> c;
  Polynomial d;
};

// Reduces the 10x20 constraint matrix over its first ten columns and forms
// the three row combinations that cancel every monomial containing x or y
// except x, y and 1 times powers of z. Fails (nullopt) when a pivot falls
// below 1e-10.
std::optional<ActionPoly> extract_action_poly(const Mat1020& m);

// Solves C(z) [x y 1]^T = 0 for a polished root z via the cross product of
// the most independent pair of rows, then assembles E from the null basis
// and normalizes |E|_F = sqrt(2). Fails when the solution lies at infinity
// in (x, y) (third null-vector component below 1e-10).
std::optional<EssentialMatrix> back_substitute(const ActionPoly& action,
                                               double z,
                                               const NullBasis& basis);

struct FivePointSettings {
  double accept_tol = 1e-6;  // root acceptance, relative to max |coeff| of d
  double z_max = 100.0;      // roots beyond this are never sought
};

// All essential matrices consistent with the five matches (0 to 10). Every
// returned matrix satisfies both cubic constraints to 1e-6 relative and has
// |q'^T E q| < 1e-6 * |E|_F on all five input matches.
std::vector<EssentialMatrix> five_point(std::span<const PointMatch> five,
                                        const FivePointSettings& settings = {});

}  // namespace essmat
