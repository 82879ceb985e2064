"""Dense linear algebra over the prime field F_p.

Matrices are small (at most a few hundred rows), so plain Gaussian
elimination on int64 numpy arrays is exact and fast enough. ``p`` is capped
at ``MAX_PRIME`` so that products of reduced entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidPrime

MAX_PRIME = 97


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def check_prime(p) -> int:
    """Return ``p`` as an int, or raise InvalidPrime."""
    try:
        ip = int(p)
    except (TypeError, ValueError):
        raise InvalidPrime(f"not an integer: {p!r}") from None
    if ip != p or not is_prime(ip):
        raise InvalidPrime(f"{p!r} is not prime")
    if ip > MAX_PRIME:
        raise InvalidPrime(f"p={ip} exceeds the supported bound {MAX_PRIME}")
    return ip


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """``inv[a]`` is the inverse of ``a`` mod p (``inv[0] = 0``)."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """Matrix with entries reduced into ``0..p-1``."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        check_prime(self.p)
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("FpMatrix needs a 2-d array")
        object.__setattr__(self, "entries", a % self.p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.shape == other.shape
            and bool(np.all(self.entries == other.entries))
        )

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("prime mismatch")
        return FpMatrix(self.p, self.entries @ other.entries)

    def rank(self) -> int:
        return rank_mod_p(self.entries, self.p)


def row_reduce(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    m = np.array(a, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("row_reduce needs a 2-d array")
    inv = inverse_table(p)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * inv[m[r, c]] % p
        f = m[:, c].copy()
        f[r] = 0
        m = (m - np.outer(f, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod_p(a, p: int) -> int:
    return len(row_reduce(a, p)[1])


@dataclass(frozen=True, eq=False)
class RankKernelImage:
    rank: int
    kernel: np.ndarray  # basis vectors of the null space, as rows
    image: np.ndarray  # basis vectors of the column space, as rows


def rank_kernel_image(m: FpMatrix) -> RankKernelImage:
    """Rank, null-space basis and column-space basis of ``m``."""
    p = m.p
    rows, cols = m.shape
    rref, pivots = row_reduce(m.entries, p)
    free = [c for c in range(cols) if c not in pivots]
    kernel = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        kernel[k, f] = 1
        for r, pc in enumerate(pivots):
            kernel[k, pc] = (-rref[r, f]) % p
    image = m.entries[:, pivots].T.copy() if pivots else np.zeros((0, rows), dtype=np.int64)
    return RankKernelImage(len(pivots), kernel, image)


def span_contains(basis, vectors, p: int) -> bool:
    """True if every row of ``vectors`` lies in the row span of ``basis``."""
    b = np.atleast_2d(np.array(basis, dtype=np.int64))
    v = np.atleast_2d(np.array(vectors, dtype=np.int64))
    if v.size == 0:
        return True
    if b.size == 0:
        return not np.any(v % p)
    return rank_mod_p(np.vstack([b, v]), p) == rank_mod_p(b, p)


def same_span(a, b, p: int) -> bool:
    return span_contains(a, b, p) and span_contains(b, a, p)


def batch_rank(stack, p: int) -> np.ndarray:
    """Ranks of a stack of equally shaped matrices, eliminated in lockstep."""
    a = np.array(stack, dtype=np.int64) % p
    if a.ndim != 3:
        raise ValueError("batch_rank needs a 3-d array")
    nb, rows, cols = a.shape
    rank = np.zeros(nb, dtype=np.int64)
    if nb == 0 or rows == 0:
        return rank
    inv = inverse_table(p)
    row_ids = np.arange(rows)
    for c in range(cols):
        cand = (a[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        piv = np.argmax(cand[sel], axis=1)
        tgt = rank[sel]
        prow = a[sel, piv].copy()
        a[sel, piv] = a[sel, tgt]
        prow = prow * inv[prow[:, c]][:, None] % p
        a[sel, tgt] = prow
        below = (row_ids[None, :] > tgt[:, None]) * a[sel, :, c]
        a[sel] = (a[sel] - below[:, :, None] * prow[:, None, :]) % p
        rank[sel] += 1
        if np.all(rank >= rows):
            break
    return rank
