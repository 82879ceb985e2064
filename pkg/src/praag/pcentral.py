"""Words in a free group and their normal forms modulo the third p-central term.

For a free pro-p group F on x_1..x_d, the quotient F/F^(3) (with
F^(3) = Phi(F)^p [Phi(F), F]) is a class-two group in which every element
is uniquely

    x_1^{e_1} ... x_d^{e_d} * prod_{i<j} [x_i, x_j]^{c_ij}

with e_i mod p^2 and c_ij mod p. The commutators and the p-th powers are
central, and collecting x_j^a past x_i^b (i < j) costs [x_i, x_j]^{-ab}.
Commutators follow the convention [g, h] = g h g^-1 h^-1.

Relations living in the Frattini subgroup are independent in the sense of
minimal presentations exactly when their images in Phi(F)/F^(3), a vector
space with basis {x_i^p} and {[x_i, x_j]}, are linearly independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import MissingImage, NotInFrattiniQuotient, ParameterMismatch
from .linalg import FpMatrix, check_prime, rank_kernel_image, row_reduce


@dataclass(frozen=True)
class GroupWord:
    """Word in generators ``0..d-1``; letters are ``(generator, exponent)``."""

    d: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        out: list[tuple[int, int]] = []
        for g, e in self.letters:
            g, e = int(g), int(e)
            if not 0 <= g < self.d:
                raise ValueError(f"generator {g} out of range for d={self.d}")
            if e == 0:
                continue
            if out and out[-1][0] == g:
                e += out.pop()[1]
                if e == 0:
                    continue
            out.append((g, e))
        object.__setattr__(self, "letters", tuple(out))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if other.d != self.d:
            raise ParameterMismatch("words over different generator sets")
        return GroupWord(self.d, self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(self.d, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(self.d, base.letters * abs(k))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(f"x{g + 1}" if e == 1 else f"x{g + 1}^{e}" for g, e in self.letters)


def gen(d: int, i: int, e: int = 1) -> GroupWord:
    return GroupWord(d, ((i, e),))


def identity_word(d: int) -> GroupWord:
    return GroupWord(d, ())


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    """The word u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class ClassTwoWord:
    """Normal form of an element of F/F^(3).

    ``e`` holds the exponents mod p^2 and ``c`` the commutator coordinates
    mod p, indexed by the pairs ``i < j`` in lexicographic order.
    """

    d: int
    p: int
    e: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        q = self.p * self.p
        npairs = self.d * (self.d - 1) // 2
        if len(self.e) != self.d or len(self.c) != npairs:
            raise ValueError("coordinate lengths do not match d")
        object.__setattr__(self, "e", tuple(int(x) % q for x in self.e))
        object.__setattr__(self, "c", tuple(int(x) % self.p for x in self.c))

    def coeff(self, i: int, j: int) -> int:
        """Coordinate of [x_i, x_j]; antisymmetric in (i, j)."""
        if i == j:
            return 0
        if i < j:
            return self.c[pair_index(self.d, i, j)]
        return (-self.c[pair_index(self.d, j, i)]) % self.p

    def is_identity(self) -> bool:
        return not any(self.e) and not any(self.c)

    def in_frattini(self) -> bool:
        return all(x % self.p == 0 for x in self.e)

    def frattini_coordinates(self) -> np.ndarray:
        """Coordinates on the basis {x_i^p} then {[x_i, x_j]} of Phi(F)/F^(3)."""
        if not self.in_frattini():
            raise NotInFrattiniQuotient(f"exponents {self.e} are not all divisible by p={self.p}")
        return np.array([x // self.p for x in self.e] + list(self.c), dtype=np.int64) % self.p

    def __str__(self):
        parts = [f"x{i + 1}^{x}" for i, x in enumerate(self.e) if x]
        for (i, j), x in zip(itertools.combinations(range(self.d), 2), self.c):
            if x:
                parts.append(f"[x{i + 1},x{j + 1}]^{x}")
        return "*".join(parts) or "1"


def pair_index(d: int, i: int, j: int) -> int:
    """Position of the pair (i, j), i < j, in lexicographic order."""
    return i * d - i * (i + 1) // 2 + (j - i - 1)


def pairs(d: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(d), 2))


def nf_identity(d: int, p: int) -> ClassTwoWord:
    return ClassTwoWord(d, p, (0,) * d, (0,) * (d * (d - 1) // 2))


def nf_generator(d: int, p: int, i: int, k: int = 1) -> ClassTwoWord:
    e = [0] * d
    e[i] = k
    return ClassTwoWord(d, p, tuple(e), (0,) * (d * (d - 1) // 2))


def _check_same(a: ClassTwoWord, b: ClassTwoWord):
    if a.d != b.d or a.p != b.p:
        raise ParameterMismatch(f"(d={a.d}, p={a.p}) vs (d={b.d}, p={b.p})")


def nf_mul(a: ClassTwoWord, b: ClassTwoWord) -> ClassTwoWord:
    """Product by collection: moving x_i^f left past x_j^e (i < j) adds -e*f to c_ij."""
    _check_same(a, b)
    d = a.d
    c = list(a.c)
    for k, (i, j) in enumerate(pairs(d)):
        c[k] += b.c[k] - a.e[j] * b.e[i]
    e = tuple(x + y for x, y in zip(a.e, b.e))
    return ClassTwoWord(d, a.p, e, tuple(c))


def nf_inv(a: ClassTwoWord) -> ClassTwoWord:
    c = [-a.c[k] - a.e[i] * a.e[j] for k, (i, j) in enumerate(pairs(a.d))]
    return ClassTwoWord(a.d, a.p, tuple(-x for x in a.e), tuple(c))


def nf_pow(a: ClassTwoWord, k: int) -> ClassTwoWord:
    base = a if k >= 0 else nf_inv(a)
    out = nf_identity(a.d, a.p)
    for _ in range(abs(k)):
        out = nf_mul(out, base)
    return out


def nf_commutator(a: ClassTwoWord, b: ClassTwoWord) -> ClassTwoWord:
    return nf_mul(nf_mul(a, b), nf_mul(nf_inv(a), nf_inv(b)))


def nf_from_word(w: GroupWord, p: int) -> ClassTwoWord:
    """Collect a word into normal form."""
    p = check_prime(p)
    out = nf_identity(w.d, p)
    for g, e in w.letters:
        out = nf_mul(out, nf_generator(w.d, p, g, e))
    return out


def substitute_hom(images: Mapping[int, GroupWord], d_source: int, p: int):
    """Return ``w -> nf(phi(w))`` for the map sending x_i to ``images[i]``.

    All images must be words over the same target generator set.
    """
    p = check_prime(p)
    missing = [i for i in range(d_source) if i not in images]
    if missing:
        raise MissingImage(f"no image for generators {missing}")
    targets = {images[i].d for i in range(d_source)}
    if len(targets) != 1:
        raise ParameterMismatch("images use different generator counts")
    nfs = {i: nf_from_word(images[i], p) for i in range(d_source)}
    invs = {i: nf_inv(x) for i, x in nfs.items()}
    d_target = targets.pop()

    def apply(w: GroupWord) -> ClassTwoWord:
        if w.d != d_source:
            raise ParameterMismatch(f"word over {w.d} generators, map expects {d_source}")
        out = nf_identity(d_target, p)
        for g, e in w.letters:
            step = nfs[g] if e > 0 else invs[g]
            for _ in range(abs(e)):
                out = nf_mul(out, step)
        return out

    return apply


@dataclass(frozen=True, eq=False)
class IndependenceReport:
    independent: bool
    rank: int
    matrix: np.ndarray  # reduced row echelon form of the coordinate rows


def coordinate_matrix(rels: Sequence[ClassTwoWord]) -> np.ndarray:
    if not rels:
        return np.zeros((0, 0), dtype=np.int64)
    d, p = rels[0].d, rels[0].p
    for r in rels:
        if r.d != d or r.p != p:
            raise ParameterMismatch("relations over different free groups")
    return np.vstack([r.frattini_coordinates() for r in rels])


def relations_independent(rels: Sequence[ClassTwoWord]) -> IndependenceReport:
    """Check linear independence of relations in Phi(F)/F^(3)."""
    if not rels:
        return IndependenceReport(True, 0, np.zeros((0, 0), dtype=np.int64))
    m = coordinate_matrix(rels)
    p = rels[0].p
    rank = rank_kernel_image(FpMatrix(p, m)).rank
    rref, _ = row_reduce(m, p)
    return IndependenceReport(rank == len(rels), rank, rref[:rank])


def select_independent(rels: Iterable[ClassTwoWord]) -> list[int]:
    """Indices of a greedy maximal independent subfamily, in input order."""
    kept: list[int] = []
    rows: list[np.ndarray] = []
    p = None
    for k, r in enumerate(rels):
        p = r.p
        v = r.frattini_coordinates()
        trial = np.vstack(rows + [v])
        if rank_kernel_image(FpMatrix(p, trial)).rank == len(rows) + 1:
            rows.append(v)
            kept.append(k)
    return kept


def demushkin_relator(d: int, p: int, b: Sequence[int] | None = None) -> GroupWord:
    """The word [x1,x2][x3,x4]...[x_{d-1},x_d] * prod x_i^{p b_i}."""
    if d % 2:
        raise ValueError("d must be even")
    w = identity_word(d)
    for k in range(0, d, 2):
        w = w * commutator(gen(d, k), gen(d, k + 1))
    b = [0] * d if b is None else list(b)
    for i, bi in enumerate(b):
        w = w * gen(d, i, p * bi)
    return w


def cup_form_from_relator(r: ClassTwoWord) -> np.ndarray:
    """Alternating matrix read off the commutator coordinates of one relator."""
    m = np.zeros((r.d, r.d), dtype=np.int64)
    for i, j in pairs(r.d):
        x = r.coeff(i, j)
        m[i, j] = x
        m[j, i] = -x
    return m % r.p
