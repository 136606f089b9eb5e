// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace essmat {

// Coefficient matrix of the ten cubic constraints on an essential matrix
// (det E = 0 and 2 E E^T E - trace(E E^T) E = 0) after substituting
// E = x*B0 + y*B1 + z*B2 + B3, the rows of `basis` reshaped 3x3 row-major.
// Column order is the fixed monomial basis
//   x^3 y^3 x^2y xy^2 x^2z x^2 y^2z y^2 xyz xy xz^2 xz x yz^2 yz y z^3 z^2 z 1
// Row 0 is the determinant constraint; rows 1..9 the trace constraint in
// row-major order. The implementation is machine-generated straight-line
// arithmetic (see scripts/gen_constraint_coeffs.py).
void build_constraint_matrix(const Eigen::Matrix<double, 4, 9>& basis,
                             Eigen::Matrix<double, 10, 20>& M);

}  // namespace essmat
