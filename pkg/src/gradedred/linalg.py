"""Dense linear algebra over a prime field GF(p).

Matrices are plain 2-D ``numpy`` integer arrays whose entries are kept in
``[0, p)``.  Elimination is ordinary Gaussian elimination with the first
nonzero entry of a column as pivot, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError

DEFAULT_PRIME = 32003

# products of two reduced entries must fit in int64
_MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for an odd prime ``p < 2**31``."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not (2 < self.p < _MAX_PRIME) or not is_prime(self.p):
            raise InputError(f"modulus must be an odd prime below 2^31, got {self.p}")

    def matrix(self, rows) -> np.ndarray:
        return as_matrix(rows, self.p)

    def rank(self, A) -> int:
        return rank(A, self.p)

    def rref(self, A) -> tuple[np.ndarray, list[int]]:
        return rref(A, self.p)

    def row_space_contains(self, A, v) -> bool:
        return row_space_contains(A, v, self.p)

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)


def as_matrix(rows, p: int) -> np.ndarray:
    A = np.asarray(rows, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
    if A.ndim != 2:
        raise InputError(f"expected a 2-D matrix, got shape {A.shape}")
    return A % p


def _eliminate(A: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a private copy of ``A``; return it with the pivot columns."""
    A = np.array(A, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r, c:] = A[r, c:] * inv % p
        if reduced:
            targets = np.flatnonzero(A[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(A[r + 1:, c])
        if targets.size:
            factors = A[targets, c][:, None]
            A[targets, c:] = (A[targets, c:] - factors * A[r, c:]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(A, p: int = DEFAULT_PRIME) -> int:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        # fewer pivot steps touch a smaller working array
        A = A.T
    return len(_eliminate(A, p, reduced=False)[1])


def rref(A, p: int = DEFAULT_PRIME) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns of ``A`` over GF(p)."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise InputError(f"expected a 2-D matrix, got shape {A.shape}")
    if A.size == 0:
        return A.copy(), []
    return _eliminate(A, p, reduced=True)


def row_space_contains(A, v, p: int = DEFAULT_PRIME) -> bool:
    A = np.asarray(A, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    ncols = A.shape[1] if A.ndim == 2 else 0
    if A.ndim != 2 or v.size != ncols:
        raise InputError(f"vector of length {v.size} does not match {ncols} columns")
    if not np.any(v % p):
        return True
    if A.shape[0] == 0:
        return False
    return rank(np.vstack([A, v]), p) == rank(A, p)


def matmul(A, B, p: int = DEFAULT_PRIME) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise InputError(f"cannot multiply {A.shape} by {B.shape}")
    A, B = A % p, B % p
    # inner-dimension chunk whose partial sums stay below 2^63
    step = max(1, (2**63 - 1) // ((p - 1) ** 2 + p))
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(0, A.shape[1], step):
        out = (out + A[:, k:k + step] @ B[k:k + step, :]) % p
    return out
