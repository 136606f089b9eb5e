#!/usr/bin/env python3
# Copyright 2026 The essmat authors
# SPDX-License-Identifier: Apache-2.0
"""Generates src/core/constraint_coeffs.cpp.

The essential matrix is written as E = x*B0 + y*B1 + z*B2 + B3, where the
B's are the rows of a 4x9 null-space basis reshaped to 3x3 row-major. The
ten cubic constraints (det E = 0 and 2*E*E^T*E - trace(E*E^T)*E = 0) are
expanded symbolically in (x, y, z) and the coefficients of the 20 monomials

    x^3 y^3 x^2y xy^2 x^2z x^2 y^2z y^2 xyz xy xz^2 xz x yz^2 yz y z^3 z^2 z 1

are emitted as straight-line C++ after common-subexpression elimination.
Run from the repository root:

    python3 scripts/gen_constraint_coeffs.py > src/core/constraint_coeffs.cpp
"""

import sys

import sympy as sp


def main() -> None:
    x, y, z = sp.symbols("x y z")

    # basis(i, j): row i of the 4x9 null basis, column j.
    b = [[sp.Symbol(f"b{i}{j}") for j in range(9)] for i in range(4)]

    # E entries, row-major, each linear in (x, y, z).
    e = [x * b[0][j] + y * b[1][j] + z * b[2][j] + b[3][j] for j in range(9)]
    E = sp.Matrix(3, 3, e)

    constraints = [E.det()]
    EEt = E * E.T
    trace_term = 2 * EEt * E - EEt.trace() * E
    for r in range(3):
        for c in range(3):
            constraints.append(trace_term[r, c])

    monomials = [
        x**3, y**3, x**2 * y, x * y**2, x**2 * z, x**2, y**2 * z, y**2,
        x * y * z, x * y, x * z**2, x * z, x, y * z**2, y * z, y,
        z**3, z**2, z, sp.S.One,
    ]

    coeff_exprs = []
    for cons in constraints:
        poly = sp.Poly(sp.expand(cons), x, y, z)
        for mono in monomials:
            mexp = sp.Poly(mono, x, y, z).monoms()[0]
            coeff_exprs.append(poly.coeff_monomial(mexp))

    repl, reduced = sp.cse(coeff_exprs, symbols=sp.numbered_symbols("t"))

    w = sys.stdout.write
    w("// Copyright 2026 The essmat authors\n")
    w("// SPDX-License-Identifier: Apache-2.0\n")
    w("//\n")
    w("// Generated by scripts/gen_constraint_coeffs.py. Do not edit by hand.\n")
    w("\n")
    w('#include "core/constraint_coeffs.hpp"\n')
    w("\n")
    w("namespace essmat {\n")
    w("\n")
    w("void build_constraint_matrix(const Eigen::Matrix<double, 4, 9>& basis,\n")
    w("                             Eigen::Matrix<double, 10, 20>& M) {\n")
    for i in range(4):
        for j in range(9):
            w(f"  const double b{i}{j} = basis({i}, {j});\n")
    w("\n")
    from sympy.printing.c import C99CodePrinter

    def unroll_pows(expr):
        return expr.replace(
            lambda t: t.is_Pow and t.exp.is_Integer and 2 <= t.exp <= 3,
            lambda t: sp.Mul(*([t.base] * int(t.exp)), evaluate=False),
        )

    repl = [(sym, unroll_pows(expr)) for sym, expr in repl]
    reduced = [unroll_pows(expr) for expr in reduced]

    ccode = C99CodePrinter()
    for sym, expr in repl:
        w(f"  const double {sym} = {ccode.doprint(expr)};\n")
    w("\n")
    for idx, expr in enumerate(reduced):
        r, c = divmod(idx, 20)
        w(f"  M({r}, {c}) = {ccode.doprint(expr)};\n")
    w("}\n")
    w("\n")
    w("}  // namespace essmat\n")


if __name__ == "__main__":
    main()
