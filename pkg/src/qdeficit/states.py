"""Constructors for the pure states the toolkit analyzes.

Amplitude vectors are plain complex ndarrays of length 2**n in the
computational basis |00...0>, |00...1>, ... (binary ascending), with qubit A
as the most significant bit.
"""

import math
import warnings

import numpy as np

NORM_ATOL = 1e-10


def as_state(psi, name="state"):
    """Validate a normalized amplitude vector and return it as complex128."""
    arr = np.asarray(psi, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D amplitude vector, got shape {arr.shape}")
    n = int(round(math.log2(arr.size))) if arr.size > 0 else -1
    if n < 1 or 2**n != arr.size:
        raise ValueError(f"{name} length {arr.size} is not 2**n for n >= 1 qubits")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite amplitudes")
    norm_sq = float(np.sum(np.abs(arr) ** 2))
    if abs(norm_sq - 1.0) > NORM_ATOL:
        raise ValueError(f"{name} is not normalized: sum |amp|^2 = {norm_sq}")
    return arr


def n_qubits(psi):
    return int(round(math.log2(np.asarray(psi).size)))


def _finish(amps):
    amps = np.asarray(amps, dtype=np.complex128)
    return amps / np.linalg.norm(amps)


def two_spinor_family(theta):
    """One-parameter symmetric 3-qubit family
    cos(theta/2)|000> + sin(theta/2)(|100>+|010>+|001>)/sqrt(3).

    theta must lie in [0, pi]; the endpoints are accepted but degrade to the
    product state |000> (theta=0) and the Dicke/W state (theta=pi), where the
    degeneracy class changes.
    """
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta={theta} outside [0, pi]")
    if theta == 0.0 or theta == math.pi:
        which = "the product state |000>" if theta == 0.0 else "the Dicke (W) state"
        warnings.warn(
            f"theta={theta} is a boundary of the two-spinor family and yields {which}",
            stacklevel=2,
        )
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0) / math.sqrt(3.0)
    amps[4] = amps[2] = amps[1] = s
    return _finish(amps)


def ghz():
    """(|000> + |111>)/sqrt(2)."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = amps[7] = 1.0 / math.sqrt(2.0)
    return amps


def w():
    """(|100> + |010> + |001>)/sqrt(3)."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[4] = amps[2] = amps[1] = 1.0 / math.sqrt(3.0)
    return amps


def wbar():
    """Obverse W state (|011> + |101> + |110>)/sqrt(3)."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[3] = amps[5] = amps[6] = 1.0 / math.sqrt(3.0)
    return amps


def wwbar():
    """(|W> + |Wbar>)/sqrt(2): uniform over the six weight-1 and weight-2 kets."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[1:7] = 1.0 / math.sqrt(6.0)
    return amps


def gen_ghz(a_mag, b_mag, alpha=0.0, beta=0.0):
    """a|000> + b|111> with a = a_mag e^{i alpha}, b = b_mag e^{i beta}."""
    a_mag, b_mag = float(a_mag), float(b_mag)
    if a_mag < 0.0 or b_mag < 0.0:
        raise ValueError("magnitudes must be non-negative")
    if abs(a_mag**2 + b_mag**2 - 1.0) > 1e-9:
        raise ValueError(f"|a|^2 + |b|^2 = {a_mag ** 2 + b_mag ** 2}, expected 1")
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = a_mag * np.exp(1j * alpha)
    amps[7] = b_mag * np.exp(1j * beta)
    return _finish(amps)


def gen_w(a_mag, b_mag, c_mag, alpha=0.0, beta=0.0, gamma=0.0):
    """a|100> + b|010> + c|001> with phases alpha, beta, gamma."""
    a_mag, b_mag, c_mag = float(a_mag), float(b_mag), float(c_mag)
    if min(a_mag, b_mag, c_mag) < 0.0:
        raise ValueError("magnitudes must be non-negative")
    total = a_mag**2 + b_mag**2 + c_mag**2
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"|a|^2 + |b|^2 + |c|^2 = {total}, expected 1")
    amps = np.zeros(8, dtype=np.complex128)
    amps[4] = a_mag * np.exp(1j * alpha)
    amps[2] = b_mag * np.exp(1j * beta)
    amps[1] = c_mag * np.exp(1j * gamma)
    return _finish(amps)


def dicke(n, k):
    """Symmetric n-qubit state: equal superposition of all weight-k basis kets."""
    n, k = int(n), int(k)
    if not 1 <= n <= 10:
        raise ValueError(f"qubit count n={n} outside [1, 10]")
    if not 0 <= k <= n:
        raise ValueError(f"excitation count k={k} outside [0, {n}]")
    amps = np.zeros(2**n, dtype=np.complex128)
    for idx in range(2**n):
        if bin(idx).count("1") == k:
            amps[idx] = 1.0
    return _finish(amps)


def density_of(psi):
    """Rank-1 density matrix |psi><psi|."""
    psi = as_state(psi)
    return np.outer(psi, psi.conj())


def state_to_json(psi):
    """JSON-ready dict {"n": ..., "amplitudes": [[re, im], ...]}."""
    psi = as_state(psi)
    return {
        "n": n_qubits(psi),
        "amplitudes": [[float(a.real), float(a.imag)] for a in psi],
    }


def state_from_json(obj):
    """Parse the CLI state format, validating shape and normalization."""
    if isinstance(obj, list):
        pairs = obj
        n = None
    elif isinstance(obj, dict):
        if "amplitudes" not in obj:
            raise ValueError('state JSON must contain an "amplitudes" field')
        pairs = obj["amplitudes"]
        n = obj.get("n")
    else:
        raise ValueError(f"state JSON must be an object or a list, got {type(obj).__name__}")
    try:
        amps = np.array([complex(float(re), float(im)) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"amplitudes must be [re, im] pairs: {exc}") from None
    if n is not None and 2 ** int(n) != amps.size:
        raise ValueError(f'"n": {n} inconsistent with {amps.size} amplitudes')
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if abs(norm_sq - 1.0) > 1e-9:
        raise ValueError(f"amplitudes are not normalized: sum |amp|^2 = {norm_sq}")
    return as_state(_finish(amps))
