// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace essmat {

namespace {

void trim(std::vector<double>& c) {
  double max_abs = 0.0;
  for (double v : c) max_abs = std::max(max_abs, std::abs(v));
  const double cutoff = 1e-14 * max_abs;
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

Polynomial::Polynomial(std::vector<double> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
  trim(c_);
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] *= -r;
  }
  return Polynomial(std::move(c));
}

double Polynomial::eval(double z) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = static_cast<double>(i) * c_[i];
  }
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

void Polynomial::scale(double factor) {
  for (double& v : c_) v *= factor;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.coeffs();
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial shift_up(const Polynomial& a) {
  if (a.is_zero()) return Polynomial();
  std::vector<double> c(a.coeffs().size() + 1, 0.0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + 1);
  return Polynomial(std::move(c));
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_rem: zero divisor");
  std::vector<double> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  while (static_cast<int>(r.size()) - 1 >= db) {
    const double f = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    r.pop_back();  // leading term cancels by construction
  }
  return Polynomial(std::move(r));
}

SturmChain::SturmChain(const Polynomial& d) {
  if (d.degree() < 1) {
    throw std::invalid_argument("SturmChain: need degree >= 1");
  }
  auto normalized = [](Polynomial p) {
    const double m = p.max_abs_coeff();
    if (m > 0.0) p.scale(1.0 / m);
    return p;
  };
  chain_.push_back(normalized(d));
  chain_.push_back(normalized(d.derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial r =
        -1.0 * poly_rem(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;  // gcd found: d has repeated roots
    chain_.push_back(normalized(std::move(r)));
  }
}

int SturmChain::sign_changes(double z) const {
  int changes = 0;
  int prev = 0;
  for (const Polynomial& p : chain_) {
    const int s = sign_of(p.eval(z));
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

namespace {

void bracket_recurse(const SturmChain& chain, double lo, double hi, int v_lo,
                     int v_hi, std::vector<RootBracket>& out) {
  const int delta = v_lo - v_hi;
  if (delta <= 0) return;
  if (delta == 1) {
    // Narrow the isolated bracket so that the fixed polishing budget
    // starts close to the root even when the separating split was coarse.
    int changes_lo = v_lo;
    while (hi - lo > 1e-2 * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
      const double mid = 0.5 * (lo + hi);
      const int v_mid = chain.sign_changes(mid);
      if (changes_lo - v_mid >= 1) {
        hi = mid;
      } else {
        lo = mid;
        changes_lo = v_mid;
      }
    }
    out.push_back({lo, hi, delta});
    return;
  }
  const double mid = 0.5 * (lo + hi);
  if (hi - lo < 1e-10 * std::max(1.0, std::abs(mid))) {
    return;  // near-repeated roots: abandon rather than grind on them
  }
  const int v_mid = chain.sign_changes(mid);
  bracket_recurse(chain, lo, mid, v_lo, v_mid, out);
  bracket_recurse(chain, mid, hi, v_mid, v_hi, out);
}

}  // namespace

std::vector<RootBracket> bracket_roots(const SturmChain& chain, double z_max) {
  std::vector<RootBracket> out;
  bracket_recurse(chain, -z_max, z_max, chain.sign_changes(-z_max),
                  chain.sign_changes(z_max), out);
  return out;
}

double default_accept_tol(const Polynomial& d) {
  return 1e-6 * d.max_abs_coeff();
}

std::optional<double> polish_root(const Polynomial& d, const RootBracket& b,
                                  int max_iter, double accept_tol) {
  const double fl = d.eval(b.lo);
  const double fh = d.eval(b.hi);
  if (fl * fh > 0.0) return std::nullopt;  // no sign change to work with

  // Orient so that d(xl) < 0 < d(xh).
  double xl = b.lo;
  double xh = b.hi;
  if (fl > 0.0) std::swap(xl, xh);

  const Polynomial dd = d.derivative();
  double rts = 0.5 * (b.lo + b.hi);
  double dxold = std::abs(b.hi - b.lo);
  double dx = dxold;
  double f = d.eval(rts);
  double df = dd.eval(rts);
  const double xacc =
      1e-14 * std::max(1.0, std::max(std::abs(b.lo), std::abs(b.hi)));

  for (int it = 0; it < max_iter; ++it) {
    const bool newton_escapes =
        ((rts - xh) * df - f) * ((rts - xl) * df - f) > 0.0;
    const bool newton_too_slow = std::abs(2.0 * f) > std::abs(dxold * df);
    if (newton_escapes || newton_too_slow) {
      dxold = dx;
      dx = 0.5 * (xh - xl);
      rts = xl + dx;
    } else {
      dxold = dx;
      dx = f / df;
      rts -= dx;
    }
    if (std::abs(dx) < xacc) break;
    f = d.eval(rts);
    df = dd.eval(rts);
    if (f < 0.0) {
      xl = rts;
    } else {
      xh = rts;
    }
  }
  if (std::abs(d.eval(rts)) > accept_tol) return std::nullopt;
  return rts;
}

}  // namespace essmat
