"""Demushkin groups: symplectic bases, surjectivity of cup products, corestriction.

A Demushkin group G with d generators has a one-dimensional H^2 and its cup
product is a non-degenerate alternating form B on H^1 = F_p^d. In a
symplectic basis alpha_1..alpha_d (alpha_{2k-1} * alpha_{2k} = 1) the
subgroup N = Ker(alpha_1) of index p is generated by

    Y = {y_1^p, y_2} u {y_1^v y_i y_1^-v : 3 <= i <= d, 0 <= v < p},

so |Y| = 2 + p(d - 2), which is also what the Euler characteristic
chi(N) = p * chi(G) = p(2 - d) forces. The corestriction H^1(N) -> H^1(G) is

    cor(a)(x) = sum_{h=0}^{p-1} a(y_1^{-h'} x y_1^h),   x y_1^h N = y_1^{h'} N,

and its image is Ker(cup with alpha_1) = Span{alpha_1, alpha_3, ..., alpha_d}.
The corestriction table here assumes the relator
[y_1, y_2][y_3, y_4]...[y_{d-1}, y_d] (all b_i = 0), for which
[y_1, y_2] lies in [N, N] and so y_1^v y_2 y_1^-v = y_2 modulo Phi(N).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateForm, OddDimension
from .linalg import FpMatrix, check_prime, inverse_table, rank_kernel_image, rank_mod_p, same_span
from .pcentral import cup_form_from_relator, demushkin_relator, nf_from_word

EXHAUSTIVE_ALPHA_LIMIT = 1 << 16


def standard_form(d: int, p: int) -> np.ndarray:
    if d % 2:
        raise OddDimension(f"d={d} is odd")
    b = np.zeros((d, d), dtype=np.int64)
    for k in range(0, d, 2):
        b[k, k + 1] = 1
        b[k + 1, k] = p - 1
    return b


@dataclass(frozen=True, eq=False)
class DemushkinForm:
    p: int
    matrix: np.ndarray

    def __post_init__(self):
        check_prime(self.p)
        b = np.array(self.matrix, dtype=np.int64) % self.p
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValueError("form must be a square matrix")
        if np.any(np.diag(b)) or np.any((b + b.T) % self.p):
            raise ValueError("form must be alternating")
        object.__setattr__(self, "matrix", b)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def standard(cls, p: int, d: int) -> "DemushkinForm":
        return cls(p, standard_form(d, p))

    def pair(self, x, y) -> int:
        return int(np.asarray(x) @ self.matrix @ np.asarray(y) % self.p)


def demushkin_symplectic_basis(f: DemushkinForm) -> np.ndarray:
    """Invertible P with P^T B P in standard form.

    Column 2k is paired with column 2k+1. Vectors are taken greedily: the
    first remaining vector is matched with the first remaining vector it
    pairs non-trivially with, and the rest are made orthogonal to both.
    """
    p, d = f.p, f.d
    if d % 2:
        raise OddDimension(f"d={d} is odd")
    inv = inverse_table(p)
    rest = [np.eye(d, dtype=np.int64)[k] for k in range(d)]
    cols = []
    while rest:
        e = rest.pop(0)
        k = next((k for k, v in enumerate(rest) if f.pair(e, v)), None)
        if k is None:
            raise DegenerateForm("the form has a nonzero radical")
        fv = rest.pop(k)
        fv = fv * inv[f.pair(e, fv)] % p
        rest = [(v - f.pair(v, fv) * e + f.pair(v, e) * fv) % p for v in rest]
        cols += [e, fv]
    return np.array(cols, dtype=np.int64).T % p


@dataclass(frozen=True, eq=False)
class H2Exactness:
    exact: bool
    checked: int  # number of alphas examined (0 when decided by rank)
    witness: tuple[int, ...] | None = None


def demushkin_h2_exactness(f: DemushkinForm) -> H2Exactness:
    """Is beta -> beta * alpha onto H^2 for every nonzero alpha?"""
    p, d = f.p, f.d
    if d % 2:
        raise OddDimension(f"d={d} is odd")
    if p ** d <= EXHAUSTIVE_ALPHA_LIMIT:
        checked = 0
        for t in itertools.product(range(p), repeat=d):
            if not any(t):
                continue
            checked += 1
            if not np.any(f.matrix @ np.array(t) % p):
                return H2Exactness(False, checked, t)
        return H2Exactness(True, checked)
    rki = rank_kernel_image(FpMatrix(p, f.matrix))
    if rki.rank == d:
        return H2Exactness(True, 0)
    return H2Exactness(False, 0, tuple(int(x) for x in rki.kernel[0]))


def y_generators(p: int, d: int) -> list[str]:
    """Names of the generators of Ker(alpha_1), in table order."""
    names = ["y1^p", "y2"]
    for i in range(3, d + 1):
        for v in range(p):
            names.append(f"y1^{v} y{i} y1^-{v}")
    return names


def _y_index(p: int, i: int, v: int) -> int:
    """Index of y_1^v y_i y_1^-v (i is 1-based, i >= 3)."""
    return 2 + (i - 3) * p + v


@dataclass(frozen=True, eq=False)
class CorTable:
    p: int
    d: int
    y_names: tuple[str, ...]
    matrix: np.ndarray  # column k = cor of the k-th dual basis element, in alpha coordinates
    rank: int
    image_is_kernel: bool
    warning: str

    @property
    def y_count(self) -> int:
        return len(self.y_names)

    def column(self, name: str) -> tuple[int, ...]:
        return tuple(int(x) for x in self.matrix[:, self.y_names.index(name)])


def dimension_warning(p: int, d: int) -> str:
    return (
        f"dim H^1(N) is sometimes quoted as 2+p(d-1) = {2 + p * (d - 1)}, but the generating set Y "
        f"has 2+p(d-2) = {2 + p * (d - 2)} elements, matching the Euler characteristic; "
        f"using {2 + p * (d - 2)}"
    )


def demushkin_cor_table(p: int, d: int) -> CorTable:
    """Corestriction of each dual basis element of H^1(N), in the alpha basis."""
    p = check_prime(p)
    if d % 2 or d < 2:
        raise OddDimension(f"d={d} must be even and at least 2")
    names = y_generators(p, d)
    cmat = np.zeros((d, len(names)), dtype=np.int64)
    for k in range(d):  # generator y_{k+1}
        for h in range(p):
            if k == 0:
                # y_1 * y_1^h = y_1^{h+1}; the coset representative wraps at h = p-1
                hp = (h + 1) % p
                if h + 1 - hp == p:
                    cmat[k, 0] += 1
            elif k == 1:
                cmat[k, 1] += 1
            else:
                v = (-h) % p
                cmat[k, _y_index(p, k + 1, v)] += 1
    cmat %= p
    rank = rank_mod_p(cmat, p)
    b = standard_form(d, p)
    alpha1 = np.eye(d, dtype=np.int64)[0]
    # beta -> beta * alpha_1 = beta^T B alpha_1
    ker = rank_kernel_image(FpMatrix(p, (b @ alpha1)[None, :])).kernel
    img = rank_kernel_image(FpMatrix(p, cmat)).image
    return CorTable(p, d, tuple(names), cmat, rank, same_span(img, ker, p), dimension_warning(p, d))


def relator_form(p: int, d: int, b=None) -> np.ndarray:
    """Cup form read off the commutator part of the one-relator presentation."""
    return cup_form_from_relator(nf_from_word(demushkin_relator(d, p, b), p))


def demushkin_suite(p: int, d: int, form: DemushkinForm | None = None) -> dict:
    """All Demushkin checks for one (p, d), as a plain dict."""
    p = check_prime(p)
    f = DemushkinForm.standard(p, d) if form is None else form
    if f.p != p:
        raise ValueError("form prime differs from p")
    if f.d != d:
        raise ValueError("form dimension differs from d")
    pmat = demushkin_symplectic_basis(f)
    std = standard_form(d, p)
    symplectic_ok = bool(np.array_equal(pmat.T @ f.matrix @ pmat % p, std))
    h2 = demushkin_h2_exactness(f)
    cor = demushkin_cor_table(p, d)
    e = np.eye(d, dtype=np.int64)
    values_ok = (
        cor.column("y1^p") == tuple(e[0])
        and cor.column("y2") == (0,) * d
        and all(
            cor.column(f"y1^{v} y{i} y1^-{v}") == tuple(e[i - 1]) for i in range(3, d + 1) for v in range(p)
        )
    )
    return {
        "p": p,
        "d": d,
        "form": f.matrix.tolist(),
        "symplectic_basis": pmat.tolist(),
        "symplectic_ok": symplectic_ok,
        "h2_exact": h2.exact,
        "h2_checked": h2.checked,
        "h2_witness": None if h2.witness is None else list(h2.witness),
        "y_generators": list(cor.y_names),
        "y_count": cor.y_count,
        "cor_matrix": cor.matrix.tolist(),
        "cor_rank": cor.rank,
        "cor_values_ok": values_ok,
        "image_is_kernel": cor.image_is_kernel,
        "relator_form_matches": bool(np.array_equal(relator_form(p, d), std)),
        "warnings": [cor.warning],
    }
