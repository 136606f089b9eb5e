// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/fivepoint.hpp"

#include <cmath>
#include <stdexcept>

#include "core/constraint_coeffs.hpp"

namespace essmat {

Mat59 build_qtilde(std::span<const PointMatch> five) {
  if (five.size() != 5) {
    throw std::invalid_argument("build_qtilde: need exactly 5 matches");
  }
  Mat59 q;
  for (int i = 0; i < 5; ++i) {
    const Vec3& a = five[i].q;
    const Vec3& b = five[i].qp;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        q(i, 3 * r + c) = b(r) * a(c);
      }
    }
  }
  return q;
}

std::optional<NullBasis> null_basis(const Mat59& qtilde) {
  Mat59 a = qtilde;
  int perm[9];
  for (int i = 0; i < 9; ++i) perm[i] = i;

  for (int k = 0; k < 5; ++k) {
    // Full pivot over remaining rows and columns.
    int pr = k, pc = k;
    double best = 0.0;
    for (int r = k; r < 5; ++r) {
      for (int c = k; c < 9; ++c) {
        const double v = std::abs(a(r, c));
        if (v > best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    }
    if (best < 1e-10) return std::nullopt;  // rank deficient
    if (pr != k) a.row(k).swap(a.row(pr));
    if (pc != k) {
      a.col(k).swap(a.col(pc));
      std::swap(perm[k], perm[pc]);
    }
    a.row(k) /= a(k, k);
    for (int r = 0; r < 5; ++r) {
      if (r == k) continue;
      a.row(r) -= a(r, k) * a.row(k);
    }
  }

  // a == [I | A] in permuted columns; null rows there are (A_col_j, -e_j).
  NullBasis basis;
  basis.rows.setZero();
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 5; ++i) basis.rows(j, perm[i]) = a(i, 5 + j);
    basis.rows(j, perm[5 + j]) = -1.0;
  }
  return basis;
}

namespace {

// Polynomials read off one reduced constraint row: the tail columns hold
// the coefficients of x*(z^2, z, 1), y*(z^2, z, 1) and (z^3, z^2, z, 1).
struct RowPolys {
  Polynomial p;  // multiplies x
  Polynomial q;  // multiplies y
  Polynomial r;  // free term
};

RowPolys row_polys(const Mat1020& m, int row) {
  RowPolys out;
  out.p = Polynomial({m(row, 12), m(row, 11), m(row, 10)});
  out.q = Polynomial({m(row, 15), m(row, 14), m(row, 13)});
  out.r = Polynomial({m(row, 19), m(row, 18), m(row, 17), m(row, 16)});
  return out;
}

}  // namespace

std::optional<ActionPoly> extract_action_poly(const Mat1020& m_in) {
  Mat1020 m = m_in;
  // Row-normalize first: reduced row echelon form depends only on the row
  // space, and unit-scale rows keep the pivoting threshold meaningful.
  for (int r = 0; r < 10; ++r) {
    const double s = m.row(r).cwiseAbs().maxCoeff();
    if (s > 0.0) m.row(r) /= s;
  }
  for (int k = 0; k < 10; ++k) {
    int pr = k;
    double best = 0.0;
    for (int r = k; r < 10; ++r) {
      const double v = std::abs(m(r, k));
      if (v > best) {
        best = v;
        pr = r;
      }
    }
    if (best < 1e-10) return std::nullopt;
    if (pr != k) m.row(k).swap(m.row(pr));
    m.row(k) /= m(k, k);
    for (int r = 0; r < 10; ++r) {
      if (r == k) continue;
      m.row(r) -= m(r, k) * m.row(k);
    }
  }

  // Rows 4..9 now lead with x^2 z, x^2, y^2 z, y^2, xyz, xy. Pairing each
  // z-row with its z-free partner cancels the quadratic leading monomial:
  //   row(x^2 z) - z * row(x^2)  ->  alpha(z) x + beta(z) y + gamma(z) = 0
  // and likewise for (y^2 z, y^2) and (xyz, xy).
  ActionPoly out;
  for (int pair = 0; pair < 3; ++pair) {
    const RowPolys hi = row_polys(m, 4 + 2 * pair);
    const RowPolys lo = row_polys(m, 5 + 2 * pair);
    out.c[pair][0] = hi.p - shift_up(lo.p);
    out.c[pair][1] = hi.q - shift_up(lo.q);
    out.c[pair][2] = hi.r - shift_up(lo.r);
  }

  const auto& c = out.c;
  out.d = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
          c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
          c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
  if (out.d.degree() < 1) return std::nullopt;
  return out;
}

std::optional<EssentialMatrix> back_substitute(const ActionPoly& action,
                                               double z,
                                               const NullBasis& basis) {
  Mat3 c;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) c(r, k) = action.c[r][k].eval(z);
  }
  // Null vector of C(z) from the most independent row pair.
  const Vec3 r0 = c.row(0).transpose();
  const Vec3 r1 = c.row(1).transpose();
  const Vec3 r2 = c.row(2).transpose();
  const Vec3 n01 = r0.cross(r1);
  const Vec3 n02 = r0.cross(r2);
  const Vec3 n12 = r1.cross(r2);
  const Vec3* n = &n01;
  if (n02.squaredNorm() > n->squaredNorm()) n = &n02;
  if (n12.squaredNorm() > n->squaredNorm()) n = &n12;
  const double nn = n->norm();
  if (nn == 0.0 || std::abs((*n)(2)) < 1e-10 * nn) {
    return std::nullopt;  // (x, y) at infinity
  }
  const double x = (*n)(0) / (*n)(2);
  const double y = (*n)(1) / (*n)(2);

  const Eigen::Matrix<double, 1, 9> e_vec =
      x * basis.rows.row(0) + y * basis.rows.row(1) + z * basis.rows.row(2) +
      basis.rows.row(3);
  Mat3 e;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) e(r, k) = e_vec(3 * r + k);
  }
  if (!(e.norm() > 0.0) || !std::isfinite(e.norm())) return std::nullopt;
  return EssentialMatrix::from_matrix(e);
}

std::vector<EssentialMatrix> five_point(std::span<const PointMatch> five,
                                        const FivePointSettings& settings) {
  std::vector<EssentialMatrix> out;
  const Mat59 qtilde = build_qtilde(five);
  const auto basis = null_basis(qtilde);
  if (!basis) return out;

  Mat1020 m;
  build_constraint_matrix(basis->rows, m);
  const auto action = extract_action_poly(m);
  if (!action) return out;

  SturmChain chain(action->d);
  const std::vector<RootBracket> brackets =
      bracket_roots(chain, settings.z_max);
  const double tol = settings.accept_tol * action->d.max_abs_coeff();

  for (const RootBracket& bracket : brackets) {
    const auto root = polish_root(action->d, bracket, 10, tol);
    if (!root) continue;
    const auto e = back_substitute(*action, *root, *basis);
    if (!e) continue;
    if (essential_det_rel(*e) > 1e-6) continue;
    if (essential_trace_rel(*e) > 1e-6) continue;
    bool fits = true;
    for (const PointMatch& match : five) {
      if (std::abs(residual(*e, match)) >= 1e-6 * e->m.norm()) {
        fits = false;
        break;
      }
    }
    if (fits) out.push_back(*e);
  }
  return out;
}

}  // namespace essmat
