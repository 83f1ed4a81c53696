"""Quantum deficit: relative entropy between a bipartite state and its
classical counterpart, diagonal in the product eigenbasis of the marginals.

For a bipartite density matrix rho with marginals rho_A, rho_B and their
eigenbases {|a>}, {|b>}, the decohered counterpart is
rho_d = sum_ab P_ab |a,b><a,b| with P_ab = <a,b|rho|a,b>, and the deficit is
D = sum_i lambda_i ln lambda_i - sum_ab P_ab ln P_ab (natural log), the
lambda_i being the eigenvalues of rho.  When a marginal spectrum is
degenerate the eigenbasis inside each degenerate block is rotated to
minimize the diagonal entropy, which makes D basis-independent and, for
pure states, equal to the entanglement entropy of the cut.
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEGENERACY_RTOL,
    as_complex_matrix,
    hermitian_eig,
    partial_trace,
    shannon_entropy,
)
from .states import as_state, density_of, n_qubits

DENSITY_TRACE_ATOL = 1e-9
DENSITY_EIG_ATOL = 1e-9

_OPT_PASS_TOL = 1e-10
_OPT_COMMIT_TOL = 1e-13
_OPT_MAX_PASSES = 500


@dataclass(frozen=True)
class Cut:
    """Bipartition of qubit indices into two disjoint, non-empty sides."""

    side_a: tuple
    side_b: tuple

    def __post_init__(self):
        a = tuple(sorted(int(i) for i in self.side_a))
        b = tuple(sorted(int(i) for i in self.side_b))
        if not a or not b:
            raise ValueError("both sides of a cut must be non-empty")
        if set(a) & set(b):
            raise ValueError(f"cut sides overlap: {a} and {b}")
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)


@dataclass(frozen=True)
class DeficitReport:
    """Eigenvalues of rho, decohered diagonal (row-major in the A index), the
    deficit value, and whether a degenerate marginal convention was engaged."""

    eigenvalues: np.ndarray
    decohered_diagonal: np.ndarray
    deficit: float
    degenerate_marginal: bool

    def to_dict(self):
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "decohered_diagonal": [float(x) for x in self.decohered_diagonal],
            "deficit": float(self.deficit),
            "degenerate_marginal": bool(self.degenerate_marginal),
        }


def _validate_density(rho, dims):
    rho = as_complex_matrix(rho, "rho")
    if rho.shape[0] != rho.shape[1]:
        raise ValueError(f"rho must be square, got {rho.shape}")
    if len(dims) != 2:
        raise ValueError(f"dims must list the two subsystem dimensions, got {dims}")
    d_a, d_b = int(dims[0]), int(dims[1])
    if d_a * d_b != rho.shape[0]:
        raise ValueError(f"dims {dims} inconsistent with matrix dimension {rho.shape[0]}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > DENSITY_TRACE_ATOL:
        raise ValueError(f"trace {trace} differs from 1")
    eig = hermitian_eig(rho)  # also rejects non-Hermitian input
    if float(eig.eigenvalues.min()) < -DENSITY_EIG_ATOL:
        raise ValueError(f"negative eigenvalue {eig.eigenvalues.min()} below tolerance")
    return rho, (d_a, d_b), eig


def _degenerate_blocks(vals):
    # runs of descending eigenvalues chained by relative gap < DEGENERACY_RTOL
    blocks = []
    start = 0
    n = len(vals)
    for i in range(1, n + 1):
        tied = i < n and (vals[i - 1] - vals[i]) <= DEGENERACY_RTOL * max(1.0, abs(vals[i - 1]))
        if not tied:
            if i - start >= 2:
                blocks.append(list(range(start, i)))
            start = i
    return blocks


def _product_diagonal(rho, v_a, v_b):
    basis = np.kron(v_a, v_b)
    p = np.einsum("ji,jk,ki->i", basis.conj(), rho, basis).real
    return p.reshape(v_a.shape[1], v_b.shape[1])


def _raw_entropy(p):
    q = np.clip(np.asarray(p, dtype=float).ravel(), 0.0, None)
    nz = q[q > 0.0]
    return float(-np.sum(nz * np.log(nz)))


def _rotate_columns(v, p, q, theta, phi):
    out = v.copy()
    c, s = math.cos(theta), math.sin(theta)
    e = np.exp(1j * phi)
    out[:, p] = c * v[:, p] + s * np.conj(e) * v[:, q]
    out[:, q] = -s * e * v[:, p] + c * v[:, q]
    return out


def _golden_min(f, lo, hi, iters=36):
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv * (hi - lo)
    x2 = lo + inv * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def _best_pair_rotation(rho, v_a, v_b, side, p, q, current):
    def entropy_at(theta, phi):
        if side == 0:
            return _raw_entropy(_product_diagonal(rho, _rotate_columns(v_a, p, q, theta, phi), v_b))
        return _raw_entropy(_product_diagonal(rho, v_a, _rotate_columns(v_b, p, q, theta, phi)))

    thetas = np.linspace(0.0, math.pi / 2.0, 13)
    phis = np.linspace(0.0, 2.0 * math.pi, 16, endpoint=False)
    best = (0.0, 0.0, current)
    for th in thetas[1:]:  # theta = 0 is the current basis
        for ph in phis:
            val = entropy_at(th, ph)
            if val < best[2]:
                best = (th, ph, val)
    # commit only genuine improvements; evaluation noise would otherwise walk
    # the basis away from an already-optimal point
    if best[2] >= current - _OPT_COMMIT_TOL:
        return v_a, v_b, current
    th, ph, val = best
    dth = float(thetas[1] - thetas[0])
    dph = float(phis[1] - phis[0])
    for _ in range(3):
        th, val = _golden_min(lambda x: entropy_at(x, ph), th - dth, th + dth)
        ph, val = _golden_min(lambda x: entropy_at(th, x), ph - dph, ph + dph)
        dth /= 8.0
        dph /= 8.0
    if val >= current - _OPT_COMMIT_TOL:
        return v_a, v_b, current
    if side == 0:
        return _rotate_columns(v_a, p, q, th, ph), v_b, val
    return v_a, _rotate_columns(v_b, p, q, th, ph), val


def _minimize_diagonal_entropy(rho, v_a, v_b, active_a, active_b):
    # alternating two-dimensional rotations inside the degenerate blocks
    current = _raw_entropy(_product_diagonal(rho, v_a, v_b))
    for _ in range(_OPT_MAX_PASSES):
        entering = current
        for side, blocks in ((0, active_a), (1, active_b)):
            for block in blocks:
                for i in range(len(block)):
                    for j in range(i + 1, len(block)):
                        v_a, v_b, current = _best_pair_rotation(
                            rho, v_a, v_b, side, block[i], block[j], current
                        )
        if entering - current < _OPT_PASS_TOL:
            break
    return v_a, v_b


def _decohere_parts(rho, dims):
    rho, (d_a, d_b), eig_full = _validate_density(rho, dims)
    eig_a = hermitian_eig(partial_trace(rho, [d_a, d_b], keep=[0]))
    eig_b = hermitian_eig(partial_trace(rho, [d_a, d_b], keep=[1]))
    blocks_a = _degenerate_blocks(eig_a.eigenvalues)
    blocks_b = _degenerate_blocks(eig_b.eigenvalues)
    degenerate = bool(blocks_a or blocks_b)
    v_a, v_b = eig_a.eigenvectors, eig_b.eigenvectors
    # blocks of (near-)zero eigenvalue cannot influence P: the entries of a
    # P row/column are non-negative and sum to the marginal eigenvalue
    active_a = [blk for blk in blocks_a if eig_a.eigenvalues[blk[0]] > 1e-12]
    active_b = [blk for blk in blocks_b if eig_b.eigenvalues[blk[0]] > 1e-12]
    if active_a or active_b:
        v_a, v_b = _minimize_diagonal_entropy(rho, v_a, v_b, active_a, active_b)
    p = _product_diagonal(rho, v_a, v_b)
    return rho, v_a, v_b, p, degenerate, eig_full


def decohere(rho, dims):
    """Classical counterpart of rho: same marginals, diagonal in their
    (entropy-minimizing) product eigenbasis."""
    rho, v_a, v_b, p, _, _ = _decohere_parts(rho, dims)
    basis = np.kron(v_a, v_b)
    return (basis * np.clip(p.ravel(), 0.0, None)) @ basis.conj().T


def quantum_deficit(rho, dims):
    """Deficit report for a bipartite density matrix.

    dims = [d_A, d_B]; the decohered diagonal in the report runs row-major in
    the A eigenbasis index.
    """
    _, _, _, p, degenerate, eig_full = _decohere_parts(rho, dims)
    lam = np.clip(eig_full.eigenvalues, 0.0, 1.0)
    p_flat = np.clip(p.ravel(), 0.0, 1.0)
    value = shannon_entropy(p_flat) - shannon_entropy(lam)
    return DeficitReport(lam, p_flat, value, degenerate)


def cut_deficit(psi, cut):
    """Deficit of a pure state across a bipartite cut, treating each side as
    one composite subsystem.  With the entropy-minimizing convention this
    equals the entanglement entropy of the cut."""
    psi = as_state(psi)
    n = n_qubits(psi)
    if not isinstance(cut, Cut):
        raise ValueError("cut must be a Cut instance")
    if set(cut.side_a) | set(cut.side_b) != set(range(n)):
        raise ValueError(f"cut {cut} does not partition {n} qubits")
    perm = cut.side_a + cut.side_b
    reordered = psi.reshape((2,) * n).transpose(perm).ravel()
    rho = density_of(reordered)
    return quantum_deficit(rho, [2 ** len(cut.side_a), 2 ** len(cut.side_b)])


# ---------------------------------------------------------------------------
# Closed forms for the one-parameter two-spinor family and the generalized
# W states; kept separate from the numeric path so tests can cross-validate
# two independent routes.


def _check_theta(theta):
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta={theta} outside [0, pi]")
    return theta


def _radicand(theta):
    return 6.0 + 4.0 * math.cos(theta) - math.cos(2.0 * theta)


def family_marginal_eigenvalues(theta):
    """Single-qubit marginal eigenvalues (3 +/- sqrt(6 + 4cos t - cos 2t))/6
    of the two-spinor family state, descending."""
    theta = _check_theta(theta)
    root = math.sqrt(_radicand(theta))
    return ((3.0 + root) / 6.0, (3.0 - root) / 6.0)


def family_decohered_diagonal(theta):
    """Closed-form decohered diagonal (P11, P12, P21, P22) of the two-qubit
    marginal of the two-spinor family state."""
    theta = _check_theta(theta)
    r = _radicand(theta)
    root = math.sqrt(r)
    cos_t = math.cos(theta)
    outer = (14.0 + cos_t - 9.0 * (2.0 + cos_t) / r) / 24.0
    p11 = outer + root / 6.0
    p22 = outer - root / 6.0
    p12 = (2.0 + cos_t) * math.sin(theta / 2.0) ** 4 / (3.0 * r)
    return (p11, p12, p12, p22)


def family_cut_deficit(theta):
    """Closed-form one-versus-two deficit of the two-spinor family state:
    the binary entropy of the marginal eigenvalues."""
    lam = np.clip(family_marginal_eigenvalues(theta), 0.0, 1.0)
    return _raw_entropy(lam)


def _merged_entropy_gain(x, y):
    def phi(v):
        return v * math.log(v) if v > 0.0 else 0.0

    return phi(x + y) - phi(x) - phi(y)


def gen_w_pair_deficits(a_mag, b_mag, c_mag):
    """Closed-form pairwise deficits (D_AB, D_AC) of a|100> + b|010> + c|001>.

    Tracing out C leaves eigenvalues {|a|^2 + |b|^2, |c|^2} against the
    classical diagonal {|a|^2, |b|^2, |c|^2}, and symmetrically for the AC
    pair, so each deficit is the entropy gained by merging the corresponding
    pair of squared magnitudes.
    """
    a_mag, b_mag, c_mag = float(a_mag), float(b_mag), float(c_mag)
    total = a_mag**2 + b_mag**2 + c_mag**2
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"magnitudes not normalized: sum of squares = {total}")
    a2, b2, c2 = a_mag**2, b_mag**2, c_mag**2
    return (_merged_entropy_gain(a2, b2), _merged_entropy_gain(a2, c2))
