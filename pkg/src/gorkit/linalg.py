"""Exact dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays with entries in ``[0, p)``.
Every routine takes the prime as a keyword so several fields can coexist,
but one field per session is the intended use (see ``DEFAULT_PRIME``).
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 32003

# above this bound products of two residues no longer fit a safe int64 dot product
_INT64_SAFE = 1 << 26


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


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p}")
    if p >= 1 << 31:
        raise ValueError(f"prime {p} too large (must be < 2**31)")
    return p


def asmat(m, p: int = DEFAULT_PRIME, shape=None) -> np.ndarray:
    """Coerce ``m`` to an int64 matrix reduced modulo ``p``."""
    a = np.array(m, dtype=np.int64)
    if shape is not None:
        a = a.reshape(shape)
    return np.mod(a, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int = DEFAULT_PRIME) -> np.ndarray:
    if p > _INT64_SAFE:
        out = np.asarray(a, dtype=object) @ np.asarray(b, dtype=object)
        return np.mod(out, p).astype(np.int64)
    return np.mod(a @ b, p)


def inv_scalar(x: int, p: int = DEFAULT_PRIME) -> int:
    return pow(int(x) % p, -1, p)


def rref(m: np.ndarray, p: int = DEFAULT_PRIME, ncols: int | None = None):
    """Reduced row echelon form of ``m`` over F_p.

    Only the first ``ncols`` columns are eligible as pivots; row operations
    still act on the full width (useful for augmented systems).

    Returns ``(R, pivots)`` where ``pivots`` lists pivot column indices.
    """
    R = np.mod(np.array(m, dtype=np.int64), p)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = R.shape
    if ncols is None:
        ncols = cols
    pivots: list[int] = []
    r = 0
    big = p > _INT64_SAFE
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = inv_scalar(R[r, c], p)
        if big:
            R[r] = np.array([(int(v) * inv) % p for v in R[r]], dtype=np.int64)
        else:
            R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            if big:
                upd = np.mod(np.outer(col[hit].astype(object), R[r].astype(object)), p)
                R[hit] = np.mod(R[hit] - upd.astype(np.int64), p)
            else:
                R[hit] = np.mod(R[hit] - np.outer(col[hit], R[r]) % p, p)
        pivots.append(c)
        r += 1
    return R, pivots


def rank(m, p: int = DEFAULT_PRIME) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Basis of the right null space, returned as the columns of an array.

    The result has shape ``(cols, cols - rank)``.
    """
    m = np.asarray(m, dtype=np.int64)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return identity(cols)
    R, piv = rref(m, p)
    free = [c for c in range(cols) if c not in set(piv)]
    K = zeros(cols, len(free))
    for j, f in enumerate(free):
        K[f, j] = 1
        for i, pc in enumerate(piv):
            K[pc, j] = (-R[i, f]) % p
    return K


def solve(m, b, p: int = DEFAULT_PRIME):
    """Some ``x`` with ``m @ x == b`` over F_p, or ``None`` if inconsistent.

    ``b`` may be a vector or a matrix of right-hand sides (solved columnwise).
    """
    m = np.asarray(m, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    B = b.reshape(-1, 1) if vec else b
    rows, cols = m.shape
    if B.shape[0] != rows:
        raise ValueError(f"rhs has {B.shape[0]} rows, matrix has {rows}")
    if rows == 0:
        x = zeros(cols, B.shape[1])
        return x[:, 0] if vec else x
    R, piv = rref(np.hstack([m, B]), p, ncols=cols)
    r = len(piv)
    if np.any(R[r:, cols:]):
        return None
    x = zeros(cols, B.shape[1])
    for i, c in enumerate(piv):
        x[c] = R[i, cols:]
    return x[:, 0] if vec else x


def image_basis(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Columns of ``m`` forming a basis of its column space (pivot columns)."""
    m = np.asarray(m, dtype=np.int64)
    if m.size == 0:
        return zeros(m.shape[0], 0)
    _, piv = rref(m, p)
    return np.mod(m[:, piv], p)


def left_inverse(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    """``L`` with ``L @ m == I`` for ``m`` of full column rank."""
    m = np.asarray(m, dtype=np.int64)
    rows, cols = m.shape
    if cols == 0:
        return zeros(0, rows)
    x = solve(m.T, identity(cols), p)
    if x is None:
        raise ValueError("matrix has no left inverse (columns dependent)")
    return x.T


def right_inverse(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    """``S`` with ``m @ S == I`` for ``m`` of full row rank."""
    m = np.asarray(m, dtype=np.int64)
    rows, cols = m.shape
    if rows == 0:
        return zeros(cols, 0)
    x = solve(m, identity(rows), p)
    if x is None:
        raise ValueError("matrix has no right inverse (rows dependent)")
    return x


def inverse(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    if m.shape[0] != m.shape[1]:
        raise ValueError("inverse of a non-square matrix")
    return right_inverse(m, p)


def cokernel_map(m, p: int = DEFAULT_PRIME) -> np.ndarray:
    """A surjection ``q`` (as a matrix) whose kernel is exactly the column space of ``m``."""
    m = np.asarray(m, dtype=np.int64)
    if m.shape[1] == 0:
        return identity(m.shape[0])
    return kernel_basis(m.T, p).T


def is_invertible(m, p: int = DEFAULT_PRIME) -> bool:
    m = np.asarray(m)
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


def random_matrix(rows: int, cols: int, rng_seed=None, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Uniform random matrix over F_p, deterministic in ``rng_seed``.

    ``rng_seed`` may also be a ``numpy.random.Generator``.
    """
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)
