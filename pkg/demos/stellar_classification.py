#!/usr/bin/env python3
"""Majorana (stellar) representation round trips and degeneracy classes.

A symmetric n-qubit state is a symmetrized product of n spinors (points on
the sphere).  Clustering coincident spinors yields the degeneracy
configuration, which labels the state's SLOCC class; the number of classes
for r distinct spinors is the partition count p(n, r).
"""

import math

import numpy as np

from qdeficit import (
    dicke,
    ghz,
    majorana_spinors,
    partition_count,
    slocc_class,
    symmetrize,
    two_spinor_family,
    wwbar,
)
from qdeficit.majorana import Spinor

print("spinor sets for the canonical states")
print("------------------------------------")
for name, psi in [("GHZ", ghz()), ("WWbar", wwbar()), ("W = Dicke(3,1)", dicke(3, 1))]:
    spinors = majorana_spinors(psi)
    cls = slocc_class(psi)
    points = ", ".join(f"(beta={s.beta:.3f}, alpha={s.alpha:.3f})" for s in spinors)
    print(f"{name:16} -> {cls.label:10} spinors: {points}")
print()

print("round trip: spinors -> state -> spinors")
print("----------------------------------------")
rng = np.random.default_rng(0)
for n in (3, 5, 7):
    worst = 1.0
    for _ in range(50):
        spinors = [Spinor(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)) for _ in range(n)]
        psi = symmetrize(spinors)
        worst = min(worst, abs(np.vdot(symmetrize(majorana_spinors(psi)), psi)))
    print(f"n = {n}: worst reconstruction fidelity over 50 random sets: {worst:.12f}")
print()

print("the one-parameter two-spinor family stays in D_{2,1}")
print("----------------------------------------------------")
for theta in np.linspace(0.1, 0.9, 5) * math.pi:
    print(f"theta = {theta:.3f}: {slocc_class(two_spinor_family(theta)).label}")
print()

print("class counts from the partition function")
print("----------------------------------------")
for n in (3, 4, 5):
    row = ", ".join(f"p({n},{r}) = {partition_count(n, r)}" for r in range(1, n + 1))
    print(row)
