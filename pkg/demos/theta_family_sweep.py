#!/usr/bin/env python3
"""Monogamy score across the two-spinor family (the data behind a q-vs-theta
plot).

Every state in the family violates the monogamy inequality: q(theta) > 0 on
the whole open interval.  The sweep also cross-checks the closed forms for
the marginal spectrum against the numeric eigensolver.
"""

import math

import numpy as np

from qdeficit import (
    density_of,
    family_cut_deficit,
    family_marginal_eigenvalues,
    hermitian_eig,
    partial_trace,
    q_score,
    two_spinor_family,
)

thetas = np.linspace(0.01, 0.99, 33) * math.pi
print(f"{'theta/pi':>9} {'d_ab':>10} {'d_abc':>10} {'q':>10}  verdict")
rows = []
for theta in thetas:
    rep = q_score(two_spinor_family(float(theta)))
    rows.append((theta, rep))
    print(f"{theta / math.pi:9.4f} {rep.d_ab:10.6f} {rep.d_abc:10.6f} {rep.q:10.6f}  {rep.verdict}")

qs = [rep.q for _, rep in rows]
peak_theta = rows[int(np.argmax(qs))][0]
print()
print(f"q stays positive everywhere; it peaks near theta = {peak_theta / math.pi:.3f} pi "
      f"at q = {max(qs):.6f} and vanishes only toward the product-state endpoint.")

worst = 0.0
for theta, _ in rows:
    rho_a = partial_trace(density_of(two_spinor_family(float(theta))), [2, 2, 2], [0])
    numeric = hermitian_eig(rho_a).eigenvalues
    closed = np.array(family_marginal_eigenvalues(float(theta)))
    worst = max(worst, float(np.abs(numeric - closed).max()),
                abs(family_cut_deficit(float(theta)) - (-(closed * np.log(closed)).sum())))
print(f"closed forms vs numerics across the grid: worst deviation {worst:.2e}")
print()
print("The same data at CSV resolution: qdeficit sweep-theta --out sweep_theta.csv")
