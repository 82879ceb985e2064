"""Classification verdicts, exactness ledgers and restriction certificates.

For a character alpha with support S, the exactness argument compares
dim H^2 = |E| with two contributions: the rank of cup-by-alpha, given in
closed form by ``(|S| - r(S)) + |V0|``, and a lower bound for the image of
restriction to the subgroup generated by the w-generators. That lower bound
is a sum of three terms:

* for the subgraph induced on S, ``|E(S)| - |S| + r(S)`` when it is chordal
  or the number of its induced squares when it sits inside a ladder;
* ``|E_0|``, one relation per edge with both ends outside S;
* ``sum(e(v) - 1)`` over outside vertices v with ``e(v)`` neighbours in S.

A ledger row passes when the rank formula agrees with the rank computed
directly and the total equals |E|. Certificates materialize the relations
behind each term as commutator words in the w-generators, check that each
one is trivial in the Artin group by letter-wise commutation, and check
that they are independent modulo the third p-central term.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .cohomology import cup_matrix_entries, dim_im_c_alpha_formula, support_data
from .errors import (
    AdjacencyCertificateFailed,
    NoLadderEmbedding,
    NotChordalSupport,
    UnsupportedGraphClass,
)
from .graph import (
    ForbiddenWitness,
    PerfectEliminationOrder,
    SimplicialGraph,
    chordal_certificate,
    chordal_pasting_tree,
    complete_join_decomposition,
    connected_components,
    induced_four_shape,
    is_chordal,
    is_elementary_type,
    is_ladder,
    is_perfect_elimination_order,
    ladder_embedding,
    ladder_graph,
    ladder_squares,
    num_components,
    subsquare_census,
    tree_leaves,
)
from .linalg import batch_rank, check_prime
from .pcentral import GroupWord, commutator, nf_from_word, relations_independent, select_independent

EXHAUSTIVE_LIMIT = 12
SAMPLE_SIZE = 4096


# ------------------------------------------------------------- verdicts

ELEMENTARY = "ElementaryType"
CHORDAL = "ChordalPAGT"
LADDER = "LadderPAGT"
COMPOSED = "ComposedPAGT"
UNKNOWN = "Unknown"

DIRECT_PRODUCT_NOTE = (
    "a direct product of pro-p groups can occur as a maximal pro-p Galois group "
    "only if one of the two factors is free abelian"
)


@dataclass(frozen=True)
class Verdict:
    status: str
    realizable: bool
    rule: str
    certificate: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    children: tuple["Verdict", ...] = ()

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "realizable": self.realizable,
            "rule": self.rule,
            "certificate": self.certificate,
            "notes": list(self.notes),
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        return cls(
            data["status"],
            data["realizable"],
            data["rule"],
            data.get("certificate", {}),
            tuple(data.get("notes", ())),
            tuple(cls.from_dict(c) for c in data.get("children", ())),
        )


def classify(g: SimplicialGraph, p: int = 2) -> Verdict:
    """Decide which certified class (if any) g belongs to.

    Rules in order: elementary type, chordal, full ladder, disconnected
    (free product of the components), join (direct product of the parts).
    Realizability as a maximal pro-p Galois group holds exactly for graphs
    of elementary type.
    """
    check_prime(p)
    et = is_elementary_type(g)
    realizable = et is True
    obstruction = {} if et is True else {"forbidden": {"kind": et.kind, "vertices": list(et.vertices)}}

    cert = chordal_certificate(g)
    if isinstance(cert, PerfectEliminationOrder):
        status = ELEMENTARY if realizable else CHORDAL
        return Verdict(status, realizable, "chordal", {"peo": list(cert.order), **obstruction})

    lad = is_ladder(g)
    if lad is not None:
        n, emb = lad
        return Verdict(LADDER, False, "ladder", {"squares": n, "embedding": list(emb), **obstruction})

    comps = connected_components(g)
    if len(comps) > 1:
        kids = tuple(classify(g.induced(c), p) for c in comps)
        if all(k.status != UNKNOWN for k in kids):
            return Verdict(
                COMPOSED,
                realizable,
                "free_product",
                {"components": comps, **obstruction},
                children=kids,
            )
        return Verdict(UNKNOWN, realizable, "none", {"components": comps, **obstruction}, children=kids)

    split = complete_join_decomposition(g)
    if split is not None:
        a, b = split
        kids = (classify(g.induced(a), p), classify(g.induced(b), p))
        if all(k.status != UNKNOWN for k in kids):
            abelian = [g.is_clique(part) for part in (a, b)]
            note = DIRECT_PRODUCT_NOTE + (
                f"; free abelian factor present: {any(abelian)}"
            )
            return Verdict(
                COMPOSED,
                realizable,
                "direct_product",
                {"join": [list(a), list(b)], "free_abelian_factor": abelian, **obstruction},
                notes=(note,),
                children=kids,
            )
        return Verdict(UNKNOWN, realizable, "none", {"join": [list(a), list(b)], **obstruction}, children=kids)

    return Verdict(UNKNOWN, realizable, "none", obstruction)


def verify_verdict(g: SimplicialGraph, v: Verdict) -> bool:
    """Re-check the certificate attached to a verdict."""
    cert = v.certificate
    if "forbidden" in cert:
        w = cert["forbidden"]
        shape = induced_four_shape(g, sorted(w["vertices"]))
        if shape is None or shape[0] != w["kind"] or v.realizable:
            return False
    elif v.realizable != (is_elementary_type(g) is True):
        return False
    if v.status in (ELEMENTARY, CHORDAL):
        return is_perfect_elimination_order(g, cert["peo"])
    if v.status == LADDER:
        emb = cert["embedding"]
        q = ladder_graph(cert["squares"])
        if sorted(emb) != list(range(q.d)) or g.d != q.d:
            return False
        return all(
            g.has_edge(i, j) == q.has_edge(emb[i], emb[j]) for i in range(g.d) for j in range(i + 1, g.d)
        )
    if v.status == COMPOSED and v.rule == "free_product":
        comps = cert["components"]
        if comps != connected_components(g) or len(comps) < 2:
            return False
        return all(verify_verdict(g.induced(c), k) for c, k in zip(comps, v.children))
    if v.status == COMPOSED and v.rule == "direct_product":
        a, b = cert["join"]
        if sorted(a + b) != list(range(g.d)) or not a or not b:
            return False
        if not all(g.has_edge(x, y) for x in a for y in b):
            return False
        return verify_verdict(g.induced(a), v.children[0]) and verify_verdict(g.induced(b), v.children[1])
    return v.status == UNKNOWN


# ---------------------------------------------------------- w-generators

@dataclass(frozen=True)
class WGeneratorScheme:
    """Generators adapted to a support chain.

    ``chain`` lists the support vertices s_1, ..., s_m in the chosen order.
    For t < m, w_t = v_{s_t} v_{s_{t+1}}^-1; w_m = v_{s_m}; every vertex
    outside the support is its own w-generator. Each w except w_m is killed
    by the support character. The free generators ``Y`` are numbered: the
    chain generators w_1..w_{m-1} first, then the outside vertices in
    increasing order, so ``len(Y) = d - 1``.
    """

    graph: SimplicialGraph
    chain: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.chain)

    @property
    def outside(self) -> tuple[int, ...]:
        inside = set(self.chain)
        return tuple(v for v in range(self.graph.d) if v not in inside)

    @property
    def num_y(self) -> int:
        return self.graph.d - 1

    @property
    def num_y_alpha(self) -> int:
        return self.m - 1

    def position(self, v: int) -> int:
        return self.chain.index(v)

    def y_of_outside(self, v: int) -> int:
        return self.m - 1 + self.outside.index(v)

    def segment(self, a: int, b: int) -> GroupWord:
        """v_{s_a} v_{s_b}^-1 = w_a ... w_{b-1} for chain positions a < b."""
        if not a < b:
            raise ValueError("segment needs a < b")
        return GroupWord(self.num_y, tuple((t, 1) for t in range(a, b)))

    def outside_word(self, v: int) -> GroupWord:
        return GroupWord(self.num_y, ((self.y_of_outside(v), 1),))

    def expand(self, w: GroupWord) -> GroupWord:
        """Rewrite a word in Y as a freely reduced word in the vertices."""
        letters = []
        for y, e in w.letters:
            if y < self.m - 1:
                unit = ((self.chain[y], 1), (self.chain[y + 1], -1))
            else:
                unit = ((self.outside[y - self.m + 1], 1),)
            piece = GroupWord(self.graph.d, unit)
            piece = piece if e > 0 else piece.inverse()
            letters.extend(piece.letters * abs(e))
        return GroupWord(self.graph.d, tuple(letters))

    def y_label(self, y: int) -> str:
        if y < self.m - 1:
            return f"w{y + 1}"
        return self.graph.vertices[self.outside[y - self.m + 1]]

    def word_text(self, w: GroupWord) -> str:
        out = []
        for y, e in w.letters:
            out.append(self.y_label(y) + ("" if e == 1 else f"^{e}"))
        return "".join(out) or "1"


@dataclass(frozen=True)
class CertifiedRelation:
    kind: str  # "chain", "square", "E0" or "V0"
    left: GroupWord
    right: GroupWord

    def word(self) -> GroupWord:
        return commutator(self.left, self.right)

    def text(self, scheme: WGeneratorScheme) -> str:
        return f"[{scheme.word_text(self.left)},{scheme.word_text(self.right)}]"


def commutes_letterwise(g: SimplicialGraph, left: GroupWord, right: GroupWord) -> bool:
    """Every vertex of ``left`` equals or is adjacent to every vertex of ``right``."""
    return all(a == b or g.has_edge(a, b) for a in left.generators() for b in right.generators())


@dataclass(frozen=True, eq=False)
class RestrictionCertificate:
    scheme: WGeneratorScheme
    relations: tuple[CertifiedRelation, ...]
    terms: dict
    rank: int
    p: int

    @property
    def count(self) -> int:
        return len(self.relations)

    @property
    def expected(self) -> int:
        return sum(self.terms.values())

    @property
    def independent(self) -> bool:
        return self.rank == self.count

    @property
    def valid(self) -> bool:
        return self.independent and self.count == self.expected

    def texts(self) -> list[str]:
        return [r.text(self.scheme) for r in self.relations]

    def to_dict(self) -> dict:
        return {
            "support": list(self.scheme.chain),
            "relations": [{"kind": r.kind, "word": r.text(self.scheme)} for r in self.relations],
            "terms": dict(self.terms),
            "rank": self.rank,
            "independent": self.independent,
            "valid": self.valid,
        }


def _outer_relations(scheme: WGeneratorScheme) -> list[CertifiedRelation]:
    """Relations for edges outside the support and for outside neighbours of it."""
    g = scheme.graph
    sd = support_data(g, scheme.chain)
    rels = [CertifiedRelation("E0", scheme.outside_word(i), scheme.outside_word(j)) for i, j in sd.e0]
    for v in sd.v0:
        nbrs = sorted((scheme.position(u) for u in g.adjacency[v] if u in set(scheme.chain)))
        for a, b in zip(nbrs, nbrs[1:]):
            rels.append(CertifiedRelation("V0", scheme.segment(a, b), scheme.outside_word(v)))
    return rels


def _finish(scheme, inner, inner_kind, inner_term, p) -> RestrictionCertificate:
    g = scheme.graph
    sd = support_data(g, scheme.chain)
    outer = _outer_relations(scheme)
    nfs_inner = [nf_from_word(r.word(), p) for r in inner]
    keep = select_independent(nfs_inner)
    rels = [inner[k] for k in keep] + outer
    for r in rels:
        if not commutes_letterwise(g, scheme.expand(r.left), scheme.expand(r.right)):
            raise AdjacencyCertificateFailed(f"{r.text(scheme)} is not trivially a commutation in the graph")
    rank = relations_independent([nf_from_word(r.word(), p) for r in rels]).rank
    terms = {
        inner_kind: inner_term,
        "E0": len(sd.e0),
        "V0": sum(k - 1 for k in sd.e.values()),
    }
    return RestrictionCertificate(scheme, tuple(rels), terms, rank, p)


def res_certificate_chordal(g: SimplicialGraph, s: Iterable[int], p: int = 2) -> RestrictionCertificate:
    """Witness relations for a support whose induced subgraph is chordal.

    Each leaf clique of the pasting tree of each component contributes the
    commutators of consecutive differences of its vertices (the triangle
    v1, v2, v3 gives [v1 v2^-1, v2 v3^-1]); leaves are processed left to
    right and a relation is kept only if it is independent of the ones
    already kept.
    """
    p = check_prime(p)
    chain = tuple(sorted(set(s)))
    sub = g.induced(chain)
    if not is_chordal(sub):
        raise NotChordalSupport("the subgraph induced on the support is not chordal")
    scheme = WGeneratorScheme(g, chain)
    inner = []
    for comp in connected_components(sub):
        comp_graph = sub.induced(comp)
        for leaf in tree_leaves(chordal_pasting_tree(comp_graph)):
            pos = sorted(comp[k] for k in leaf)  # positions in chain == indices in sub
            segs = [scheme.segment(a, b) for a, b in zip(pos, pos[1:])]
            for x in range(len(segs)):
                for y in range(x + 1, len(segs)):
                    inner.append(CertifiedRelation("chain", segs[x], segs[y]))
    term = sub.num_edges - sub.d + num_components(sub)
    return _finish(scheme, inner, "chordal", term, p)


def res_certificate_ladder(
    g: SimplicialGraph,
    s: Iterable[int],
    p: int = 2,
    embedding: tuple[int, tuple[int, ...]] | None = None,
) -> RestrictionCertificate:
    """Witness relations for a support inside a ladder-embedded graph.

    The support is ordered along the ladder; each square a-b-d-c (top a, c;
    bottom b, d) lying in the support gives [v_a v_d^-1, v_b v_c^-1], which
    in w-generators is [w_t w_{t+1} w_{t+2}, w_{t+1}].
    """
    p = check_prime(p)
    if embedding is None:
        embedding = ladder_embedding(g)
    if embedding is None:
        raise NoLadderEmbedding("graph is not an induced subgraph of a ladder")
    n, emb = embedding
    inside = set(s)
    chain = tuple(sorted(inside, key=lambda v: emb[v]))
    scheme = WGeneratorScheme(g, chain)
    at = {emb[v]: scheme.position(v) for v in chain}
    inner = []
    for a, b, c, d in ladder_squares(n):
        if all(x in at for x in (a, b, c, d)):
            inner.append(CertifiedRelation("square", scheme.segment(at[a], at[d]), scheme.segment(at[b], at[c])))
    q = subsquare_census(g.induced(chain)).q
    return _finish(scheme, inner, "ladder", q, p)


# ---------------------------------------------------------------- ledger

@dataclass(frozen=True)
class LedgerRow:
    support: tuple[int, ...]
    dim_cup: int
    dim_cup_rank: int
    res_term: int
    e0_term: int
    v0_term: int
    target: int

    @property
    def total(self) -> int:
        return self.dim_cup + self.res_term + self.e0_term + self.v0_term

    @property
    def passed(self) -> bool:
        return self.dim_cup == self.dim_cup_rank and self.total == self.target

    def to_dict(self) -> dict:
        return {
            "support": list(self.support),
            "dim_cup": self.dim_cup,
            "dim_cup_rank": self.dim_cup_rank,
            "res_terms": [self.res_term, self.e0_term, self.v0_term],
            "total": self.total,
            "target": self.target,
            "pass": self.passed,
        }


@dataclass(frozen=True, eq=False)
class ExactnessLedger:
    graph: SimplicialGraph
    p: int
    kind: str  # "chordal" or "ladder"
    rows: tuple[LedgerRow, ...]
    sampled: bool
    embedding: tuple | None = None

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def all_passed(self) -> bool:
        return self.passed == len(self.rows)

    def summary(self) -> str:
        return f"rows={len(self.rows)} passed={self.passed} |E|={self.graph.num_edges}"


def _mask_to_subset(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def support_subsets(d: int, policy=None, seed: int = 0) -> tuple[list[tuple[int, ...]], bool]:
    """Nonempty subsets of range(d) under an enumeration policy.

    ``policy`` is None (exhaustive up to 12 vertices, otherwise a sample of
    4096), ``"all"``, an integer sample size, or an explicit iterable of
    subsets. Returns the subsets and whether they were sampled.
    """
    total = 2 ** d - 1
    if policy is None:
        policy = "all" if d <= EXHAUSTIVE_LIMIT else SAMPLE_SIZE
    if policy == "all":
        return [_mask_to_subset(m) for m in range(1, total + 1)], False
    if isinstance(policy, int):
        if policy >= total:
            return [_mask_to_subset(m) for m in range(1, total + 1)], False
        rng = random.Random(seed)
        masks = sorted(rng.sample(range(1, total + 1), policy))
        return [_mask_to_subset(m) for m in masks], True
    return [tuple(sorted(set(s))) for s in policy], False


def ledger_kind(g: SimplicialGraph):
    """("chordal", None) or ("ladder", embedding); raise if neither applies."""
    if is_chordal(g):
        return "chordal", None
    emb = ladder_embedding(g)
    if emb is not None:
        return "ladder", emb
    raise UnsupportedGraphClass("graph is neither chordal nor an induced subgraph of a ladder")


def exactness_ledger(g: SimplicialGraph, p: int = 2, subsets=None, seed: int = 0) -> ExactnessLedger:
    """One row per support subset comparing the dimension count with |E|."""
    p = check_prime(p)
    kind, emb = ledger_kind(g)
    subs, sampled = support_subsets(g.d, subsets, seed)
    target = g.num_edges
    ranks = np.zeros(len(subs), dtype=np.int64)
    chunk = 4096
    for start in range(0, len(subs), chunk):
        part = subs[start:start + chunk]
        alphas = np.zeros((len(part), g.d), dtype=np.int64)
        for k, s in enumerate(part):
            alphas[k, list(s)] = 1
        ranks[start:start + len(part)] = batch_rank(cup_matrix_entries(g, alphas), p)
    rows = []
    for s, rk in zip(subs, ranks):
        sd = support_data(g, s)
        if kind == "chordal":
            res = sd.support_edges - sd.m + sd.support_components
        else:
            res = subsquare_census(g.induced(s)).q
        rows.append(
            LedgerRow(
                s,
                dim_im_c_alpha_formula(g, s),
                int(rk),
                res,
                len(sd.e0),
                sum(k - 1 for k in sd.e.values()),
                target,
            )
        )
    return ExactnessLedger(g, p, kind, tuple(rows), sampled, emb)


def certify_row(g: SimplicialGraph, ledger: ExactnessLedger, row: LedgerRow) -> RestrictionCertificate:
    """Materialize the relations behind one ledger row."""
    if ledger.kind == "chordal":
        return res_certificate_chordal(g, row.support, ledger.p)
    return res_certificate_ladder(g, row.support, ledger.p, ledger.embedding)


# --------------------------------------------------------- direct products

@dataclass(frozen=True)
class DirectProductLedger:
    cup_bound: int
    res_bound: int
    h2_product: int

    @property
    def holds(self) -> bool:
        return self.cup_bound + self.res_bound == self.h2_product


def direct_product_ledger(d1: int, h2_1: int, d2: int, h2_2: int) -> DirectProductLedger:
    """Dimension count for a character nonzero on both factors of G1 x G2."""
    for x in (d1, h2_1, d2, h2_2):
        if x < 0:
            raise ValueError("dimensions are non-negative")
    cup = d1 + d2 - 1
    res = h2_1 + h2_2 + (d1 - 1) * (d2 - 1)
    return DirectProductLedger(cup, res, h2_1 + h2_2 + d1 * d2)
