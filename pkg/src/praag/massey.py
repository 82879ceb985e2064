"""Unipotent representations and Massey product witnesses.

An n-fold Massey product <a_1, ..., a_n> of degree-1 classes of a pro-p
group G is defined exactly when there is a homomorphism from G to
U_{n+1}(F_p) modulo its centre whose (h, h+1) entries are a_h, and it
vanishes exactly when such a homomorphism exists into U_{n+1}(F_p) itself.
U_{n+1}(F_p) is finite, so for a finitely presented G both questions reduce
to checking relators on generator images; the profinite completion plays no
role at matrix level. The centre of U_{n+1} is I + F_p E_{1,n+1}, so a
mod-centre representation is stored as full matrices whose corner entry is
ignored when relators are checked.

For right-angled Artin groups the presentation consists of the commutators
[v, w] for each edge, and these are the only relators used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cohomology import SRAlgebra, as_coeffs, cup_is_zero
from .errors import BudgetExceeded, CupObstruction, NotAHomomorphism
from .graph import SimplicialGraph
from .linalg import check_prime
from .pcentral import GroupWord, commutator, gen

DEFAULT_BUDGET = 2 ** 26


# ------------------------------------------------------------ matrices

@dataclass(frozen=True, eq=False)
class UnipotentMatrix:
    """Upper unitriangular matrix over F_p of size ``size``."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64) % self.p
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("unipotent matrices are square")
        if np.any(np.tril(a, -1)) or np.any(np.diag(a) != 1):
            raise ValueError("not upper unitriangular")
        object.__setattr__(self, "entries", a)

    @classmethod
    def identity(cls, size: int, p: int) -> "UnipotentMatrix":
        return cls(p, np.eye(size, dtype=np.int64))

    @classmethod
    def from_upper(cls, size: int, p: int, upper: dict) -> "UnipotentMatrix":
        """Build from ``{(i, j): value}`` with 0-based ``i < j``."""
        a = np.eye(size, dtype=np.int64)
        for (i, j), v in upper.items():
            a[i, j] = v
        return cls(p, a)

    @classmethod
    def _trusted(cls, p: int, a: np.ndarray) -> "UnipotentMatrix":
        # products and inverses of unitriangular matrices need no re-check
        m = object.__new__(cls)
        object.__setattr__(m, "p", p)
        object.__setattr__(m, "entries", a)
        return m

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: "UnipotentMatrix") -> "UnipotentMatrix":
        return UnipotentMatrix._trusted(self.p, self.entries @ other.entries % self.p)

    def inverse(self) -> "UnipotentMatrix":
        return UnipotentMatrix._trusted(self.p, unipotent_inverse(self.entries, self.p))

    def __pow__(self, k: int) -> "UnipotentMatrix":
        base = self if k >= 0 else self.inverse()
        out = UnipotentMatrix.identity(self.size, self.p)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def __eq__(self, other):
        return isinstance(other, UnipotentMatrix) and self.p == other.p and np.array_equal(self.entries, other.entries)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.entries, np.eye(self.size, dtype=np.int64)))

    def is_central(self) -> bool:
        """True if the matrix lies in I + F_p E_{1,n+1}."""
        a = self.entries - np.eye(self.size, dtype=np.int64)
        a[0, -1] = 0
        return not np.any(a)

    def superdiagonal(self) -> tuple[int, ...]:
        return tuple(int(self.entries[h, h + 1]) for h in range(self.size - 1))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def unipotent_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of I + N by back-substitution (works on stacks too)."""
    a = np.asarray(a, dtype=np.int64)
    size = a.shape[-1]
    inv = np.zeros_like(a)
    idx = np.arange(size)
    inv[..., idx, idx] = 1
    # solve a @ inv = I column by column from the bottom row up
    for i in range(size - 2, -1, -1):
        for j in range(i + 1, size):
            s = a[..., i, j].copy()
            for k in range(i + 1, j):
                s = s + a[..., i, k] * inv[..., k, j]
            inv[..., i, j] = (-s) % p
    return inv


def jordan_block(size: int, p: int) -> UnipotentMatrix:
    a = np.eye(size, dtype=np.int64)
    for h in range(size - 1):
        a[h, h + 1] = 1
    return UnipotentMatrix(p, a)


# ---------------------------------------------------------- presentations

@dataclass(frozen=True)
class Presentation:
    num_generators: int
    relators: tuple[GroupWord, ...] = ()
    generator_names: tuple[str, ...] = ()

    def __post_init__(self):
        for r in self.relators:
            if r.d != self.num_generators:
                raise ValueError("relator over the wrong number of generators")
            if not r.letters:
                raise ValueError("relators must be nonempty words")
        if not self.generator_names:
            object.__setattr__(
                self, "generator_names", tuple(f"x{i + 1}" for i in range(self.num_generators))
            )


def raag_presentation(g: SimplicialGraph) -> Presentation:
    """Generators the vertices, one commutator relator per edge."""
    rels = tuple(commutator(gen(g.d, i), gen(g.d, j)) for i, j in g.edge_list)
    return Presentation(g.d, rels, g.vertices)


def direct_product_presentation(pres1: Presentation, d2: int, pres2: Presentation | None = None) -> Presentation:
    """Presentation of G1 x G2 with generators of G2 numbered after G1's."""
    d1 = pres1.num_generators
    d = d1 + d2

    def shift(w: GroupWord, off: int) -> GroupWord:
        return GroupWord(d, tuple((g + off, e) for g, e in w.letters))

    rels = [shift(r, 0) for r in pres1.relators]
    if pres2 is not None:
        if pres2.num_generators != d2:
            raise ValueError("second presentation has the wrong generator count")
        rels += [shift(r, d1) for r in pres2.relators]
    rels += [commutator(gen(d, i), gen(d, d1 + j)) for i in range(d1) for j in range(d2)]
    names = pres1.generator_names + (
        pres2.generator_names if pres2 is not None else tuple(f"y{j + 1}" for j in range(d2))
    )
    return Presentation(d, tuple(rels), names)


@dataclass(frozen=True, eq=False)
class UnipotentRep:
    presentation: Presentation
    images: tuple[UnipotentMatrix, ...]
    modulo_center: bool = False

    def __post_init__(self):
        if len(self.images) != self.presentation.num_generators:
            raise ValueError("one image per generator is required")
        sizes = {m.size for m in self.images}
        primes = {m.p for m in self.images}
        if len(sizes) > 1 or len(primes) > 1:
            raise ValueError("images must share size and prime")

    @property
    def n(self) -> int:
        return self.images[0].size - 1 if self.images else 0


def evaluate_word(w: GroupWord, images: Sequence[UnipotentMatrix]) -> UnipotentMatrix:
    size, p = images[0].size, images[0].p
    out = np.eye(size, dtype=np.int64)
    invs: dict[int, np.ndarray] = {}
    for g, e in w.letters:
        if e > 0:
            step = images[g].entries
        else:
            if g not in invs:
                invs[g] = unipotent_inverse(images[g].entries, p)
            step = invs[g]
        for _ in range(abs(e)):
            out = out @ step % p
    return UnipotentMatrix._trusted(p, out)


def verify_rep(rep: UnipotentRep) -> bool:
    """Every relator maps to I (or into the centre, for mod-centre reps)."""
    if not rep.images:
        return True
    for r in rep.presentation.relators:
        val = evaluate_word(r, rep.images)
        if rep.modulo_center:
            if not val.is_central():
                return False
        elif not val.is_identity():
            return False
    return True


def extract_superdiagonal(rep: UnipotentRep) -> list[tuple[int, ...]]:
    """Characters a_h(x_i) = rho(x_i)[h, h+1], for h = 1..n."""
    if not verify_rep(rep):
        raise NotAHomomorphism("representation does not respect the relators")
    return [tuple(int(m.entries[h, h + 1]) for m in rep.images) for h in range(rep.n)]


# ------------------------------------------------------ constructive witnesses

def build_raag_witness(g: SimplicialGraph, p: int, chars: Sequence) -> UnipotentRep:
    """Representation rho(v_i) = I + sum_h a_h(v_i) E_{h,h+1}.

    Two images commute exactly when a_{l,h} a_{l',h+1} - a_{l',h} a_{l,h+1}
    vanishes on every edge {l, l'} and every h, which is the vanishing of the
    cup products a_h * a_{h+1}. Raises CupObstruction at the first pair
    where that fails.
    """
    p = check_prime(p)
    n = len(chars)
    if n < 2:
        raise ValueError("need at least two characters")
    alg = SRAlgebra(g, p)
    vecs = [as_coeffs(alg, a) for a in chars]
    for h in range(n - 1):
        if not cup_is_zero(alg, vecs[h], vecs[h + 1]):
            raise CupObstruction(h + 1)
    images = []
    for i in range(g.d):
        a = np.eye(n + 1, dtype=np.int64)
        for h in range(n):
            a[h, h + 1] = vecs[h][i]
        images.append(UnipotentMatrix(p, a))
    return UnipotentRep(raag_presentation(g), tuple(images))


def power_witness(g: SimplicialGraph, p: int, alpha, n: int) -> UnipotentRep:
    """rho(v_i) = J^{alpha(v_i)} for the full Jordan block J of size n+1.

    Powers of J commute, so every edge relator holds, and the superdiagonal
    of J^a is constantly a: this realizes <alpha, ..., alpha>.
    """
    p = check_prime(p)
    if n < 2:
        raise ValueError("n must be at least 2")
    alg = SRAlgebra(g, p)
    v = as_coeffs(alg, alpha)
    j = jordan_block(n + 1, p)
    images = tuple(j ** int(v[i]) for i in range(g.d))
    return UnipotentRep(raag_presentation(g), images)


def product_extend_witness(rep1: UnipotentRep, d2: int, pres2: Presentation | None = None) -> UnipotentRep:
    """Extend a representation of G1 to G1 x G2 by sending G2 to I."""
    if not verify_rep(rep1):
        raise NotAHomomorphism("cannot extend a representation that does not verify")
    pres = direct_product_presentation(rep1.presentation, d2, pres2)
    size, p = rep1.images[0].size, rep1.images[0].p
    images = rep1.images + tuple(UnipotentMatrix.identity(size, p) for _ in range(d2))
    return UnipotentRep(pres, images, rep1.modulo_center)


# ------------------------------------------------------------ exhaustive oracle

VANISHES = "vanishes"
DEFINED_ONLY = "defined_only"
UNDEFINED = "undefined"


@dataclass(frozen=True, eq=False)
class SearchResult:
    status: str
    fillings: int
    witness: UnipotentRep | None = None


def free_positions(n: int) -> list[tuple[int, int]]:
    """Entries above the superdiagonal of an (n+1)x(n+1) matrix, row-major."""
    return [(i, j) for i in range(n + 1) for j in range(i + 2, n + 1)]


def _batch_eval(word: GroupWord, mats: list[np.ndarray], invs: list[np.ndarray], p: int) -> np.ndarray:
    out = None
    for g, e in word.letters:
        step = mats[g] if e > 0 else invs[g]
        for _ in range(abs(e)):
            out = step if out is None else np.matmul(out, step) % p
    return out


def exhaustive_witness_search(
    pres: Presentation,
    p: int,
    n: int,
    chars: Sequence[Sequence[int]],
    budget: int = DEFAULT_BUDGET,
    chunk: int = 1 << 15,
) -> SearchResult:
    """Enumerate every filling above the fixed superdiagonal.

    ``chars[h][i]`` is the (h+1, h+2) entry of the image of generator i.
    Fillings are enumerated with generators outermost and each generator's
    free entries in row-major order; the first generator's first entry is
    the most significant digit. Returns the first full witness found, or
    else the first mod-centre witness.
    """
    p = check_prime(p)
    if len(chars) != n:
        raise ValueError(f"expected {n} characters, got {len(chars)}")
    ngen = pres.num_generators
    sup = np.array([[int(x) % p for x in c] for c in chars], dtype=np.int64).reshape(n, ngen)
    pos = free_positions(n)
    ndig = len(pos) * ngen
    total = p ** ndig
    if total > budget:
        raise BudgetExceeded(f"search space {p}^{ndig} exceeds the budget {budget}")
    size = n + 1
    base = np.eye(size, dtype=np.int64)
    fixed = []
    for i in range(ngen):
        m = base.copy()
        for h in range(n):
            m[h, h + 1] = sup[h, i]
        fixed.append(m)

    first_defined = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.zeros((idx.size, ndig), dtype=np.int64)
        rem = idx.copy()
        for k in range(ndig - 1, -1, -1):
            digits[:, k] = rem % p
            rem //= p
        mats, invs = [], []
        for i in range(ngen):
            m = np.broadcast_to(fixed[i], (idx.size, size, size)).copy()
            for k, (a, b) in enumerate(pos):
                m[:, a, b] = digits[:, i * len(pos) + k]
            mats.append(m)
            invs.append(unipotent_inverse(m, p))
        full_ok = np.ones(idx.size, dtype=bool)
        central_ok = np.ones(idx.size, dtype=bool)
        eye = np.eye(size, dtype=np.int64)
        corner_mask = _not_corner(size)
        for r in pres.relators:
            val = (_batch_eval(r, mats, invs, p) - eye).reshape(idx.size, -1)
            central_ok &= ~np.any(val * corner_mask, axis=1)
            full_ok &= ~np.any(val, axis=1)
        if full_ok.any():
            k = int(np.argmax(full_ok))
            rep = _rep_from_batch(pres, mats, k, p, False)
            return SearchResult(VANISHES, start + k + 1, rep)
        if first_defined is None and central_ok.any():
            k = int(np.argmax(central_ok))
            first_defined = _rep_from_batch(pres, mats, k, p, True)
    if first_defined is not None:
        return SearchResult(DEFINED_ONLY, total, first_defined)
    return SearchResult(UNDEFINED, total, None)


def _not_corner(size: int) -> np.ndarray:
    mask = np.ones(size * size, dtype=np.int64)
    mask[size - 1] = 0  # flattened position of entry (0, size-1)
    return mask


def _rep_from_batch(pres, mats, k, p, modulo_center) -> UnipotentRep:
    images = tuple(UnipotentMatrix(p, m[k]) for m in mats)
    return UnipotentRep(pres, images, modulo_center)


def character_vectors(d: int, p: int, nonzero: bool = True) -> list[tuple[int, ...]]:
    """All coefficient vectors in F_p^d, in lexicographic order of (x_d, ..., x_1).

    With p = 2 this is the order of the bitmask sum_i x_i 2^i.
    """
    out = []
    for t in itertools.product(range(p), repeat=d):
        v = tuple(reversed(t))
        if nonzero and not any(v):
            continue
        out.append(v)
    return out


@dataclass(frozen=True, eq=False)
class TupleSearchHit:
    chars: tuple[tuple[int, ...], ...]
    result: SearchResult
    searched: int


def find_tuple_with_status(
    pres: Presentation,
    p: int,
    n: int,
    status: str,
    candidates: Iterable[Sequence[Sequence[int]]] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> TupleSearchHit | None:
    """Scan character tuples (all nonzero ones by default) for a given status."""
    if candidates is None:
        vecs = character_vectors(pres.num_generators, p)
        candidates = itertools.product(vecs, repeat=n)
    searched = 0
    for chars in candidates:
        searched += 1
        res = exhaustive_witness_search(pres, p, n, chars, budget=budget)
        if res.status == status:
            return TupleSearchHit(tuple(tuple(c) for c in chars), res, searched)
    return None
