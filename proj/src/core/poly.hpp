// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate real polynomials (designed for degree <= 10), Sturm
// chains, sign-change root counting, root bracketing with abandonment of
// far-away and near-repeated roots, and hybrid Newton/bisection polishing.

#pragma once

#include <optional>
#include <span>
#include <vector>

namespace essmat {

class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial
  // Coefficients in ascending degree. Trailing coefficients smaller than
  // 1e-14 relative to the largest magnitude are trimmed.
  explicit Polynomial(std::vector<double> ascending_coeffs);

  static Polynomial from_roots(std::span<const double> roots);  // monic

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double z) const;  // Horner
  Polynomial derivative() const;
  double max_abs_coeff() const;
  double leading_coeff() const { return c_.empty() ? 0.0 : c_.back(); }

  // In-place positive rescale (Sturm sign structure is preserved).
  void scale(double factor);

 private:
  std::vector<double> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double s, const Polynomial& a);

// Multiply by z (degree shift by one).
Polynomial shift_up(const Polynomial& a);

// Remainder of a / b (b nonzero).
Polynomial poly_rem(const Polynomial& a, const Polynomial& b);

// Canonical Sturm chain of d: (d, d', -rem(...), ...). Every element is
// rescaled to unit max-|coefficient| so degree-10 remainder cascades stay
// inside double range; positive scaling leaves sign-change counts intact.
// The chain ends at degree 0, or earlier where a remainder vanishes (d has
// repeated roots; the truncated chain still counts distinct roots).
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& d);  // throws if degree < 1

  const std::vector<Polynomial>& elements() const { return chain_; }

  // Sign changes of the evaluated chain at z; zeros skipped.
  int sign_changes(double z) const;

  // Number of distinct real roots in (lo, hi].
  int count_roots(double lo, double hi) const {
    return sign_changes(lo) - sign_changes(hi);
  }

 private:
  std::vector<Polynomial> chain_;
};

// An interval (lo, hi] whose Sturm count dropped by sign_change_delta.
// Brackets produced by bracket_roots isolate exactly one distinct root.
struct RootBracket {
  double lo;
  double hi;
  int sign_change_delta;
};

// Recursively bisects [-z_max, z_max] into intervals holding exactly one
// distinct root each. Roots outside +-z_max are never sought. Intervals
// still holding >= 2 roots when their width falls below 1e-10*max(1,|z|)
// are abandoned (near-repeated roots are numerically unstable and slow to
// separate, and downstream consumers tolerate missing solutions).
std::vector<RootBracket> bracket_roots(const SturmChain& chain,
                                       double z_max = 100.0);

// accept_tol matching the default root-acceptance rule: 1e-6 relative to
// the largest coefficient magnitude.
double default_accept_tol(const Polynomial& d);

// Hybrid Newton/bisection polish. The Newton step is taken whenever it
// stays inside the current bracket and at least halves the remaining
// interval, otherwise the interval is bisected. After convergence or
// max_iter iterations the candidate is kept only if |d(z)| <= accept_tol;
// otherwise nothing is returned. Expects d to change sign over the
// bracket; returns nothing if it does not. Never returns a value outside
// [b.lo, b.hi].
std::optional<double> polish_root(const Polynomial& d, const RootBracket& b,
                                  int max_iter, double accept_tol);

}  // namespace essmat
