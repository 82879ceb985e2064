"""The Stanley-Reisner exterior algebra of a graph over F_p.

Degree ``n`` has one basis element per ``n``-clique (cliques in lexicographic
order); the product of two monomials is the signed union when it is a clique
and zero otherwise. This algebra is the mod-p cohomology ring of the pro-p
right-angled Artin group of the graph, so ``cup_matrix`` computes the
multiplication map ``beta -> beta * alpha`` from degree 1 to degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import AlgebraMismatch, EmptySupport
from .graph import SimplicialGraph, enumerate_cliques, num_components
from .linalg import FpMatrix, check_prime, inverse_table, rank_kernel_image


class SRAlgebra:
    """Graded algebra of a graph over F_p with lazily built clique bases."""

    def __init__(self, graph: SimplicialGraph, p: int):
        self.graph = graph
        self.p = check_prime(p)
        self._bases: dict[int, list[tuple[int, ...]]] = {}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}

    def basis(self, n: int) -> list[tuple[int, ...]]:
        if n not in self._bases:
            cl = enumerate_cliques(self.graph, n)
            self._bases[n] = cl
            self._index[n] = {c: k for k, c in enumerate(cl)}
        return self._bases[n]

    def index(self, n: int) -> dict[tuple[int, ...], int]:
        self.basis(n)
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def zero(self, n: int) -> "Cochain":
        return Cochain(self, n, np.zeros(self.dim(n), dtype=np.int64))

    def monomial(self, clique: Sequence[int]) -> "Cochain":
        """Basis element for a sorted clique."""
        key = tuple(clique)
        c = self.zero(len(key))
        c.coeffs[self.index(len(key))[key]] = 1
        return c

    def chi(self, i: int) -> "Cochain":
        """Dual character of vertex ``i``."""
        return self.monomial((i,))

    def character(self, coeffs: Sequence[int]) -> "Cochain":
        return Cochain(self, 1, np.array(coeffs, dtype=np.int64))

    def support_character(self, s: Iterable[int]) -> "Cochain":
        v = np.zeros(self.graph.d, dtype=np.int64)
        v[list(s)] = 1
        return Cochain(self, 1, v)

    def __repr__(self):
        return f"SRAlgebra(d={self.graph.d}, |E|={self.graph.num_edges}, p={self.p})"


@dataclass(eq=False)
class Cochain:
    """Element of degree ``degree``: coefficients over the clique basis."""

    algebra: SRAlgebra
    degree: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.int64).reshape(-1) % self.algebra.p
        if c.size != self.algebra.dim(self.degree):
            raise ValueError(
                f"degree {self.degree} has dimension {self.algebra.dim(self.degree)}, got {c.size} coefficients"
            )
        self.coeffs = c

    def _check(self, other: "Cochain"):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("cochains live in different algebras")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        if other.degree != self.degree:
            raise AlgebraMismatch("cannot add cochains of different degree")
        return Cochain(self.algebra, self.degree, self.coeffs + other.coeffs)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, a: int) -> "Cochain":
        return Cochain(self.algebra, self.degree, self.coeffs * a)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and other.algebra is self.algebra
            and other.degree == self.degree
            and bool(np.all(other.coeffs == self.coeffs))
        )

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __xor__(self, other: "Cochain") -> "Cochain":
        return wedge(self, other)

    def terms(self):
        basis = self.algebra.basis(self.degree)
        return [(basis[k], int(c)) for k, c in enumerate(self.coeffs) if c]


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of the permutation sorting the concatenation ``a + b``."""
    inversions = sum(1 for x in a for y in b if x > y)
    return -1 if inversions % 2 else 1


def wedge(a: Cochain, b: Cochain) -> Cochain:
    """Product in the algebra (graded-commutative, zero off cliques)."""
    a._check(b)
    alg = a.algebra
    n = a.degree + b.degree
    out = np.zeros(alg.dim(n), dtype=np.int64)
    idx = alg.index(n)
    for ma, ca in a.terms():
        for mb, cb in b.terms():
            if set(ma) & set(mb):
                continue
            key = tuple(sorted(ma + mb))
            k = idx.get(key)
            if k is None:
                continue
            out[k] += _merge_sign(ma, mb) * ca * cb
    return Cochain(alg, n, out)


CharacterLike = Union[Cochain, Sequence[int], np.ndarray]


def as_coeffs(alg: SRAlgebra, alpha: CharacterLike) -> np.ndarray:
    """Coefficient vector (mod p) of a degree-1 class."""
    if isinstance(alpha, Cochain):
        if alpha.algebra is not alg and (alpha.algebra.graph != alg.graph or alpha.algebra.p != alg.p):
            raise AlgebraMismatch("character from a different algebra")
        if alpha.degree != 1:
            raise ValueError("expected a degree-1 class")
        return alpha.coeffs.copy()
    v = np.array(alpha, dtype=np.int64).reshape(-1) % alg.p
    if v.size != alg.graph.d:
        raise ValueError(f"character needs {alg.graph.d} coefficients, got {v.size}")
    return v


def cup_matrix_entries(graph: SimplicialGraph, alphas: np.ndarray) -> np.ndarray:
    """Matrices of ``beta -> beta * alpha`` for a stack of coefficient vectors.

    ``alphas`` has shape ``(k, d)``; the result has shape ``(k, |E|, d)`` with
    rows indexed by the edge basis and columns by the vertex characters. For
    an edge ``(a, b)`` with ``a < b``, ``chi_a * chi_b`` is the basis element,
    so column ``a`` picks up ``alpha_b`` and column ``b`` picks up ``-alpha_a``.
    """
    alphas = np.atleast_2d(np.asarray(alphas, dtype=np.int64))
    k = alphas.shape[0]
    edges = graph.edge_list
    m = np.zeros((k, len(edges), graph.d), dtype=np.int64)
    for r, (a, b) in enumerate(edges):
        m[:, r, a] = alphas[:, b]
        m[:, r, b] = -alphas[:, a]
    return m


def cup_matrix(alg: SRAlgebra, alpha: CharacterLike) -> FpMatrix:
    """Matrix of ``beta -> beta * alpha`` from degree 1 to degree 2."""
    v = as_coeffs(alg, alpha)
    return FpMatrix(alg.p, cup_matrix_entries(alg.graph, v[None, :])[0])


def cup_rank(alg: SRAlgebra, alpha: CharacterLike) -> int:
    return rank_kernel_image(cup_matrix(alg, alpha)).rank


def cup_annihilator(alg: SRAlgebra, alpha: CharacterLike) -> np.ndarray:
    """Basis (rows) of ``{beta : beta * alpha = 0}``."""
    return rank_kernel_image(cup_matrix(alg, alpha)).kernel


def cup_is_zero(alg: SRAlgebra, a: CharacterLike, b: CharacterLike) -> bool:
    """True if ``a * b`` vanishes in degree 2."""
    va = as_coeffs(alg, a)
    vb = as_coeffs(alg, b)
    return not np.any(cup_matrix_entries(alg.graph, vb[None, :])[0] @ va % alg.p)


def normalize_character(alg: SRAlgebra, alpha: CharacterLike) -> tuple[int, ...]:
    """Support of a character: rescaling vertices turns it into a 0/1 vector."""
    v = as_coeffs(alg, alpha)
    return tuple(int(i) for i in np.nonzero(v)[0])


def rescaling(alg: SRAlgebra, alpha: CharacterLike) -> np.ndarray:
    """Diagonal of the vertex rescaling taking ``alpha`` to its support form."""
    v = as_coeffs(alg, alpha)
    inv = inverse_table(alg.p)
    return np.where(v != 0, inv[v], 1)


@dataclass(frozen=True)
class SupportData:
    """Combinatorics of a support set S relative to the graph.

    ``v0`` are the vertices outside S with at least one neighbour in S,
    ``e`` maps each of them to its number of S-neighbours, and ``e0`` are the
    edges with both ends outside S.
    """

    support: tuple[int, ...]
    v0: tuple[int, ...]
    e: dict
    e0: tuple[tuple[int, int], ...]
    support_components: int
    support_edges: int

    @property
    def m(self) -> int:
        return len(self.support)


def support_data(alg_or_graph: Union[SRAlgebra, SimplicialGraph], s: Iterable[int]) -> SupportData:
    g = alg_or_graph.graph if isinstance(alg_or_graph, SRAlgebra) else alg_or_graph
    sup = tuple(sorted(set(int(x) for x in s)))
    if not sup:
        raise EmptySupport("support must be nonempty")
    if sup[0] < 0 or sup[-1] >= g.d:
        raise ValueError("support vertex out of range")
    inside = set(sup)
    v0 = []
    e = {}
    for v in range(g.d):
        if v in inside:
            continue
        k = len(g.adjacency[v] & inside)
        if k:
            v0.append(v)
            e[v] = k
    e0 = tuple((i, j) for i, j in g.edge_list if i not in inside and j not in inside)
    sup_edges = sum(1 for i, j in g.edges if i in inside and j in inside)
    return SupportData(sup, tuple(v0), e, e0, num_components(g, inside), sup_edges)


def dim_im_c_alpha_formula(alg_or_graph, s: Iterable[int]) -> int:
    """Closed-form rank of cup-by-alpha for the support character of ``s``.

    Equals ``(|S| - r(S)) + |V0|`` where r(S) counts the components of the
    subgraph induced on S.
    """
    sd = support_data(alg_or_graph, s)
    return (sd.m - sd.support_components) + len(sd.v0)


def dim_im_c_alpha(alg: SRAlgebra, alpha: CharacterLike) -> int:
    """Formula value for an arbitrary nonzero character (via its support)."""
    return dim_im_c_alpha_formula(alg, normalize_character(alg, alpha))
