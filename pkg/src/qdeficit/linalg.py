"""Dense complex matrix kernel: Kronecker products, partial traces, a
deterministic Hermitian eigensolver, and Shannon entropy.

Everything in this module is a pure function of its inputs; natural
logarithms are used throughout the package.
"""

from dataclasses import dataclass
from string import ascii_letters

import numpy as np

# Toolkit scope is a handful of qubits; anything larger is rejected.
MAX_DIM = 1024

HERMITIAN_RTOL = 1e-12
DEGENERACY_RTOL = 1e-9

_JACOBI_TARGET = 1e-13
_JACOBI_MAX_SWEEPS = 100


def as_complex_matrix(m, name="matrix"):
    """Coerce to a finite complex128 2-D array, validating shape and entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {a.shape}")
    if a.shape[0] == 0 or a.shape[1] == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def is_hermitian(m, rtol=HERMITIAN_RTOL):
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        return False
    scale = max(1.0, float(np.abs(a).max()))
    return float(np.abs(a - a.conj().T).max()) <= rtol * scale


def kron(a, b):
    """Kronecker product of two complex matrices.

    Raises ValueError when the product dimension would exceed the toolkit's
    few-qubit scope (2**10 on either axis).
    """
    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    if a.shape[0] * b.shape[0] > MAX_DIM or a.shape[1] * b.shape[1] > MAX_DIM:
        raise ValueError(
            f"kron result {a.shape[0] * b.shape[0]}x{a.shape[1] * b.shape[1]} "
            f"exceeds the supported dimension {MAX_DIM}"
        )
    return np.kron(a, b)


def partial_trace(rho, dims, keep):
    """Reduced matrix of ``rho`` over the subsystems listed in ``keep``.

    ``dims`` gives the dimension of each subsystem in order; ``keep`` is the
    set of subsystem indices to retain.  The result is ordered by ascending
    original index and has the same trace as ``rho``.
    """
    rho = as_complex_matrix(rho, "rho")
    if rho.shape[0] != rho.shape[1]:
        raise ValueError(f"rho must be square, got shape {rho.shape}")
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    if total != rho.shape[0]:
        raise ValueError(
            f"product of dims {dims} is {total}, but rho is {rho.shape[0]}x{rho.shape[1]}"
        )
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep or any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")

    row = list(ascii_letters[:n])
    col = list(row)
    for pos, k in enumerate(keep):
        col[k] = ascii_letters[n + pos]
    out = [row[k] for k in keep] + [col[k] for k in keep]
    subscripts = "".join(row + col) + "->" + "".join(out)
    reduced = np.einsum(subscripts, rho.reshape(dims + dims))
    d_keep = int(np.prod([dims[k] for k in keep]))
    return reduced.reshape(d_keep, d_keep)


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues sorted descending; unit eigenvector columns aligned with them."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_phases(v):
    # Largest-magnitude entry of each column made real and non-negative
    # (first index wins ties), so eigenvectors are reproducible.
    out = v.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = int(np.argmax(np.abs(col)))
        pivot = col[idx]
        mag = abs(pivot)
        if mag > 0.0:
            out[:, k] = col * (pivot.conjugate() / mag)
        out[idx, k] = abs(out[idx, k])
    return out


def _lex_key(col):
    return tuple((float(x.real), float(x.imag)) for x in col)


def _sort_eigensystem(vals, vecs):
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = _fix_phases(vecs[:, order])
    # Degenerate runs (chained relative gap below DEGENERACY_RTOL) are ordered
    # by descending lexicographic comparison of the phase-fixed columns.
    n = len(vals)
    start = 0
    idx = list(range(n))
    for i in range(1, n + 1):
        tied = i < n and (vals[i - 1] - vals[i]) <= DEGENERACY_RTOL * max(1.0, abs(vals[i - 1]))
        if not tied:
            if i - start >= 2:
                idx[start:i] = sorted(idx[start:i], key=lambda j: _lex_key(vecs[:, j]), reverse=True)
            start = i
    idx = np.array(idx)
    return vals[idx], vecs[:, idx]


def hermitian_eig(m):
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps run in a fixed order until the off-diagonal Frobenius mass falls
    below 1e-13 of the input Frobenius norm, so identical inputs produce
    identical outputs.  Raises ValueError for non-Hermitian input and
    RuntimeError if 100 sweeps do not converge.
    """
    a = as_complex_matrix(m, "matrix")
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.conj().T).max()) > HERMITIAN_RTOL * scale:
        raise ValueError("matrix is not Hermitian within tolerance")

    h = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return EigenSystem(np.array([h[0, 0].real]), np.ones((1, 1), dtype=np.complex128))

    target = _JACOBI_TARGET * float(np.linalg.norm(h))
    skip = target / (n * n)

    def off_mass():
        m = np.abs(h) ** 2
        np.fill_diagonal(m, 0.0)
        return float(np.sqrt(m.sum()))

    converged = off_mass() <= target
    for _ in range(_JACOBI_MAX_SWEEPS):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                ph = apq / mag
                tau = (h[q, q].real - h[p, p].real) / (2.0 * mag)
                # small-magnitude root of t^2 - 2 tau t - 1 = 0 annihilates h[p, q]
                sgn = 1.0 if tau >= 0.0 else -1.0
                t = -sgn / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # H <- J^dag H J with the rotation acting on the (p, q) plane
                colp = h[:, p].copy()
                colq = h[:, q].copy()
                h[:, p] = c * colp + s * np.conj(ph) * colq
                h[:, q] = -s * ph * colp + c * colq
                rowp = h[p, :].copy()
                rowq = h[q, :].copy()
                h[p, :] = c * rowp + s * ph * rowq
                h[q, :] = -s * np.conj(ph) * rowp + c * rowq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(ph) * vq
                v[:, q] = -s * ph * vp + c * vq
        converged = off_mass() <= target
    if not converged:
        raise RuntimeError(f"Jacobi eigensolver did not converge in {_JACOBI_MAX_SWEEPS} sweeps")

    vals = np.diagonal(h).real.copy()
    vals, vecs = _sort_eigensystem(vals, v)
    return EigenSystem(vals, vecs)


def shannon_entropy(p):
    """Entropy -sum(p ln p) of a probability array, in nats (0 ln 0 := 0).

    Entries may carry eigensolver noise down to -1e-12 and are clamped into
    [0, 1]; the array must sum to 1 within 1e-9.
    """
    arr = np.asarray(p, dtype=float).ravel()
    if arr.size == 0 or not np.all(np.isfinite(arr)):
        raise ValueError("probabilities must be a non-empty finite array")
    if float(arr.min()) < -1e-12:
        raise ValueError(f"negative probability {arr.min()} below tolerance")
    total = float(arr.sum())
    if not (1.0 - 1e-9 <= total <= 1.0 + 1e-9):
        raise ValueError(f"probabilities sum to {total}, expected 1")
    q = np.clip(arr, 0.0, 1.0)
    nz = q[q > 0.0]
    return float(-np.sum(nz * np.log(nz)))
