"""Majorana (stellar) representation of permutation-symmetric qubit states.

A symmetric n-qubit state is the normalized sum over all n! orderings of a
product of n single-qubit spinors; conversely the spinors are recovered as
roots of the state's Majorana polynomial.  The multiset of spinor
multiplicities (the degeneracy configuration) labels the state's SLOCC class.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .states import as_state, n_qubits

SYMMETRY_ATOL = 1e-10
COINCIDENCE_TOL = 1e-8

_ABERTH_TOL = 1e-12
_ABERTH_MAX_ITER = 200


@dataclass(frozen=True)
class Spinor:
    """Single-qubit pure state as a point on the sphere.

    beta is the polar angle in [0, pi]; alpha the azimuth, stored mod 2*pi
    (forced to 0 at the poles, where it is undefined).
    """

    beta: float
    alpha: float = 0.0

    def __post_init__(self):
        beta = float(self.beta)
        if not -1e-12 <= beta <= math.pi + 1e-12:
            raise ValueError(f"beta={beta} outside [0, pi]")
        beta = min(max(beta, 0.0), math.pi)
        alpha = float(self.alpha) % (2.0 * math.pi)
        if beta == 0.0 or beta == math.pi:
            alpha = 0.0
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "alpha", alpha)

    def ket(self):
        return np.array(
            [
                math.cos(self.beta / 2.0) * cmath.exp(-0.5j * self.alpha),
                math.sin(self.beta / 2.0) * cmath.exp(0.5j * self.alpha),
            ],
            dtype=np.complex128,
        )

    @classmethod
    def from_ket(cls, v):
        v = np.asarray(v, dtype=np.complex128).ravel()
        if v.size != 2:
            raise ValueError(f"spinor ket must have 2 amplitudes, got {v.size}")
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise ValueError("spinor ket has vanishing norm")
        v = v / norm
        beta = 2.0 * math.atan2(abs(v[1]), abs(v[0]))
        if abs(v[0]) < 1e-15 or abs(v[1]) < 1e-15:
            alpha = 0.0
        else:
            alpha = (cmath.phase(v[1]) - cmath.phase(v[0])) % (2.0 * math.pi)
        return cls(beta, alpha)


def _spinor_ket(s):
    if isinstance(s, Spinor):
        return s.ket()
    return Spinor.from_ket(s).ket()


def symmetrize(spinors):
    """Normalized sum over all n! orderings of the product of the spinors.

    Computed through the generating polynomial prod_l (a_l + b_l z): the
    amplitude on every weight-k basis ket equals k!(n-k)! times the z^k
    coefficient, which is exactly the permutation sum collected by weight.
    """
    kets = [_spinor_ket(s) for s in spinors]
    n = len(kets)
    if not 1 <= n <= 10:
        raise ValueError(f"spinor count {n} outside [1, 10]")
    poly = np.ones(1, dtype=np.complex128)
    for ket in kets:
        poly = np.convolve(poly, ket)
    amps = np.zeros(2**n, dtype=np.complex128)
    weight_amp = [math.factorial(k) * math.factorial(n - k) * poly[k] for k in range(n + 1)]
    for idx in range(2**n):
        amps[idx] = weight_amp[bin(idx).count("1")]
    norm = np.linalg.norm(amps)
    # symmetrized product states never vanish; guard kept as an assertion
    assert norm > 1e-12, "symmetrization produced a null vector"
    return amps / norm


def is_symmetric(psi, atol=SYMMETRY_ATOL):
    """True iff every adjacent-qubit transposition leaves the amplitudes unchanged."""
    psi = as_state(psi)
    n = n_qubits(psi)
    if n == 1:
        return True
    tensor = psi.reshape((2,) * n)
    for i in range(n - 1):
        swapped = np.swapaxes(tensor, i, i + 1)
        if float(np.abs(tensor - swapped).max()) > atol:
            return False
    return True


def _dicke_amplitudes(psi, n):
    # c_k = <Dicke_{n,k}|psi>, averaging the weight class for noise robustness
    c = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        idx = [i for i in range(2**n) if bin(i).count("1") == k]
        c[k] = np.mean(psi[idx]) * math.sqrt(math.comb(n, k))
    return c


def _roots_closed(coeffs):
    # coeffs descending, leading coefficient nonzero, degree <= 3
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-coeffs[1] / coeffs[0]]
    if deg == 2:
        a, b, c = coeffs
        disc = cmath.sqrt(b * b - 4.0 * a * c)
        # pick the sign that avoids cancellation in -b -/+ disc
        if (b.conjugate() * disc).real < 0.0:
            disc = -disc
        r = -(b + disc) / 2.0
        if abs(r) > 0.0:
            return [r / a, c / r]
        return [0.0 + 0.0j, 0.0 + 0.0j]
    # Cardano for the complex cubic
    a = coeffs[1] / coeffs[0]
    b = coeffs[2] / coeffs[0]
    c = coeffs[3] / coeffs[0]
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    if abs(p) < 1e-300 and abs(q) < 1e-300:
        return [shift, shift, shift]
    s = cmath.sqrt(q * q / 4.0 + p**3 / 27.0)
    u3 = -q / 2.0 + s
    alt = -q / 2.0 - s
    if abs(alt) > abs(u3):
        u3 = alt
    u = u3 ** (1.0 / 3.0)
    omega = cmath.exp(2j * math.pi / 3.0)
    if abs(u) < 1e-300:
        t0 = (-q) ** (1.0 / 3.0)
        return [t0 * omega**j + shift for j in range(3)]
    v = -p / (3.0 * u)
    return [u * omega**j + v * omega ** (-j) + shift for j in range(3)]


def _aberth_residual_ok(monic, z):
    # backward-stable roots: |p(z)| down at evaluation-noise level against the
    # coefficient magnitudes (the step criterion alone stalls near sqrt(eps)
    # on multiple roots; a loose residual cut would leave multiplicity-m
    # clusters smeared by its m-th root)
    pv = np.abs(np.polyval(monic, z))
    powers = np.maximum(np.abs(z), 1.0)[:, None] ** np.arange(len(monic) - 1, -1, -1)
    bound = powers @ np.abs(monic)
    return bool(np.all(pv <= 5e-15 * bound))


def _roots_aberth(coeffs):
    monic = np.asarray(coeffs, dtype=np.complex128) / coeffs[0]
    m = len(monic) - 1
    deriv = monic[:-1] * np.arange(m, 0, -1)
    radius = 1.0 + float(np.abs(monic[1:]).max())
    angles = 2.0 * math.pi * (np.arange(m) + 0.5) / m + 0.4
    z = radius * np.exp(1j * angles)
    for _ in range(_ABERTH_MAX_ITER):
        pv = np.polyval(monic, z)
        dv = np.polyval(deriv, z)
        dv = np.where(np.abs(dv) < 1e-300, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        denom = 1.0 - newton * inv.sum(axis=1)
        denom = np.where(np.abs(denom) < 1e-300, 1e-300, denom)
        step = newton / denom
        z = z - step
        if float(np.abs(step).max()) <= _ABERTH_TOL * max(1.0, float(np.abs(z).max())):
            return list(z)
        if _aberth_residual_ok(monic, z):
            return list(z)
    raise RuntimeError(f"Aberth iteration did not converge in {_ABERTH_MAX_ITER} steps")


def majorana_spinors(psi):
    """Constituent spinors of a symmetric state.

    Roots of the Majorana polynomial sum_k (-1)^k sqrt(C(n,k)) c_k z^(n-k)
    (c_k the Dicke-basis amplitudes) map to spinors (|0> + z|1>)/sqrt(1+|z|^2);
    each missing leading degree contributes one |1> spinor.  Degree <= 3 uses
    closed forms, higher degrees the Aberth iteration.
    """
    psi = as_state(psi)
    n = n_qubits(psi)
    if not is_symmetric(psi):
        raise ValueError("state is not permutation-symmetric")
    c = _dicke_amplitudes(psi, n)
    poly = np.array(
        [(-1.0) ** k * math.sqrt(math.comb(n, k)) * c[k] for k in range(n + 1)],
        dtype=np.complex128,
    )
    scale = float(np.abs(poly).max())
    lead = 0
    while lead <= n and abs(poly[lead]) <= 1e-12 * scale:
        lead += 1
    trail = 0
    while n - trail > lead and abs(poly[n - trail]) <= 1e-12 * scale:
        trail += 1
    reduced = poly[lead : n + 1 - trail]

    roots = [0.0 + 0.0j] * trail
    if len(reduced) - 1 >= 1:
        if len(reduced) - 1 <= 3:
            roots += _roots_closed(list(reduced))
        else:
            roots += _roots_aberth(reduced)

    spinors = [Spinor(math.pi, 0.0)] * lead
    for z in roots:
        mag = abs(z)
        beta = 2.0 * math.atan2(mag, 1.0)
        alpha = cmath.phase(z) % (2.0 * math.pi) if mag > 1e-15 else 0.0
        spinors.append(Spinor(beta, alpha))
    spinors.sort(key=lambda s: (s.beta, s.alpha))

    fidelity = abs(np.vdot(symmetrize(spinors), psi))
    if fidelity < 1.0 - 1e-8:
        raise RuntimeError(f"spinor reconstruction fidelity {fidelity} below 1 - 1e-8")
    return spinors


def degeneracy_config(spinors, tol=COINCIDENCE_TOL):
    """Multiplicities of distinct spinors, sorted descending.

    Spinors are identified when their overlap magnitude reaches 1 - tol;
    clustering takes the transitive closure so the result does not depend on
    input order.
    """
    kets = [_spinor_ket(s) for s in spinors]
    n = len(kets)
    if n == 0:
        raise ValueError("spinor list is empty")
    labels = list(range(n))

    def find(i):
        while labels[i] != i:
            labels[i] = labels[labels[i]]
            i = labels[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(np.vdot(kets[i], kets[j])) >= 1.0 - tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    labels[max(ri, rj)] = min(ri, rj)
    counts = {}
    for i in range(n):
        r = find(i)
        counts[r] = counts.get(r, 0) + 1
    return tuple(sorted(counts.values(), reverse=True))


@dataclass(frozen=True)
class SloccClass:
    label: str
    multiplicities: tuple
    spinors: tuple


def _class_label(multiplicities):
    if len(multiplicities) == 1:
        return f"D_{multiplicities[0]}"
    return "D_{" + ",".join(str(m) for m in multiplicities) + "}"


def slocc_class(psi):
    """Degeneracy-configuration class of a symmetric state (e.g. D_{2,1})."""
    spinors = majorana_spinors(psi)
    config = degeneracy_config(spinors)
    return SloccClass(_class_label(config), config, tuple(spinors))


@lru_cache(maxsize=None)
def _partitions(n, r):
    if n == 0 and r == 0:
        return 1
    if n <= 0 or r <= 0 or r > n:
        return 0
    return _partitions(n - 1, r - 1) + _partitions(n - r, r)


def partition_count(n, r):
    """Number of partitions of n into exactly r parts (counts the degeneracy
    classes available to n qubits built from r distinct spinors)."""
    n, r = int(n), int(r)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    return _partitions(n, r)
