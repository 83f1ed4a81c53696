"""Shared random generators and brute-force oracles for the test suite."""

import itertools

import numpy as np


def random_state(rng, n_qubits):
    v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return v / np.linalg.norm(v)


def random_density(rng, dim, rank=None):
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_hermitian(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (g + g.conj().T) / 2.0


def naive_partial_trace(rho, dims, keep):
    """Index-loop partial trace, independent of the einsum implementation."""
    keep = sorted(keep)
    traced = [i for i in range(len(dims)) if i not in keep]
    d_keep = int(np.prod([dims[k] for k in keep]))
    out = np.zeros((d_keep, d_keep), dtype=complex)
    shape = tuple(dims)
    for row in itertools.product(*[range(d) for d in shape]):
        for col in itertools.product(*[range(d) for d in shape]):
            if any(row[t] != col[t] for t in traced):
                continue
            r_idx = np.ravel_multi_index([row[k] for k in keep], [dims[k] for k in keep])
            c_idx = np.ravel_multi_index([col[k] for k in keep], [dims[k] for k in keep])
            out[r_idx, c_idx] += rho[
                np.ravel_multi_index(row, shape), np.ravel_multi_index(col, shape)
            ]
    return out


def naive_symmetrize(kets):
    """Literal sum over all n! orderings of the product of the spinor kets."""
    n = len(kets)
    acc = np.zeros(2**n, dtype=complex)
    for perm in itertools.permutations(range(n)):
        vec = np.ones(1, dtype=complex)
        for i in perm:
            vec = np.kron(vec, kets[i])
        acc += vec
    return acc / np.linalg.norm(acc)


def entropy(p):
    p = np.clip(np.asarray(p, dtype=float), 0.0, None)
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum())
