import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import heisenberg_coordinates, sympy_rank
from praag.errors import InvalidPrime, MissingImage, NotInFrattiniQuotient, ParameterMismatch
from praag.pcentral import (
    ClassTwoWord,
    GroupWord,
    commutator,
    coordinate_matrix,
    cup_form_from_relator,
    demushkin_relator,
    gen,
    identity_word,
    nf_commutator,
    nf_from_word,
    nf_generator,
    nf_identity,
    nf_inv,
    nf_mul,
    nf_pow,
    pair_index,
    relations_independent,
    select_independent,
    substitute_hom,
)


def x(i, d=4, e=1):
    return gen(d, i - 1, e)


def coords(w, p):
    return nf_from_word(w, p).c


def words(d):
    return st.lists(st.tuples(st.integers(0, d - 1), st.sampled_from([-1, 1])), max_size=14).map(
        lambda ls: GroupWord(d, tuple(ls))
    )


def test_word_basics():
    w = x(1) * x(2) * x(2).inverse()
    assert w == x(1)
    assert str(commutator(x(1), x(2))) == "x1x2x1^-1x2^-1"
    assert len(identity_word(3)) == 0
    with pytest.raises(ValueError):
        gen(2, 2)


def test_nf_examples():
    for p in (2, 3, 5):
        n = nf_from_word(commutator(x(1, 2), x(2, 2)), p)
        assert n.e == (0, 0) and n.c == (1,)
        n = nf_from_word(x(1, 2, p), p)
        assert n.e == (p, 0) and n.c == (0,)
        n = nf_from_word((x(1, 2) * x(2, 2)) ** p, p)
        assert n.e == (p, p)
        assert n.c == ((1,) if p == 2 else (0,))


def test_nf_mul_examples():
    p, d = 3, 3
    a = nf_generator(d, p, 1)
    assert nf_mul(nf_identity(d, p), a) == a
    n = nf_mul(nf_generator(d, p, 1), nf_generator(d, p, 0))
    assert n.e == (1, 1, 0) and n.coeff(0, 1) == p - 1
    ab = nf_from_word(x(1, d) * x(2, d), p)
    assert nf_mul(ab, nf_inv(ab)).is_identity()
    assert nf_inv(ab).e == (8, 8, 0)
    with pytest.raises(ParameterMismatch):
        nf_mul(nf_identity(2, 3), nf_identity(3, 3))
    with pytest.raises(ParameterMismatch):
        nf_mul(nf_identity(2, 3), nf_identity(2, 5))
    with pytest.raises(InvalidPrime):
        nf_from_word(x(1), 4)


def test_nf_commutator_examples():
    p, d = 5, 3
    a = nf_from_word(x(1, d) * x(2, d).inverse(), p)
    b = nf_from_word(x(2, d) * x(3, d).inverse(), p)
    n = nf_commutator(a, b)
    assert n.e == (0, 0, 0)
    assert (n.coeff(0, 1), n.coeff(0, 2), n.coeff(1, 2)) == (1, p - 1, 1)
    assert nf_commutator(a, a).is_identity()
    # ladder shape [x1 x2 x3, x2]
    for d in (3, 5):
        w = commutator(gen(d, 0) * gen(d, 1) * gen(d, 2), gen(d, 1))
        n = nf_from_word(w, 3)
        support = {pr for pr, c in zip(itertools.combinations(range(d), 2), n.c) if c}
        assert support == {(0, 1), (1, 2)}


def test_substitute_examples():
    p = 3
    w3 = [gen(3, 0), gen(3, 1), gen(3, 2)]
    imgs = {i: gen(4, i) * gen(4, i + 1).inverse() for i in range(3)}
    phi = substitute_hom(imgs, 3, p)
    a = nf_from_word(gen(4, 0) * gen(4, 1).inverse(), p)
    b = nf_from_word(gen(4, 1) * gen(4, 2).inverse(), p)
    assert phi(commutator(w3[0], w3[1])) == nf_commutator(a, b)
    lhs = phi(commutator(w3[0] * w3[1], w3[2]))
    rhs = nf_from_word(commutator(gen(4, 0) * gen(4, 2).inverse(), gen(4, 2) * gen(4, 3).inverse()), p)
    assert lhs == rhs
    ident = substitute_hom({i: gen(3, i) for i in range(3)}, 3, p)
    w = commutator(w3[0], w3[2]) * w3[1]
    assert ident(w) == nf_from_word(w, p)
    with pytest.raises(MissingImage):
        substitute_hom({0: gen(3, 0)}, 2, p)


def test_independence_examples():
    p = 2
    imgs = {i: gen(5, i) * gen(5, i + 1).inverse() for i in range(4)}
    phi = substitute_hom(imgs, 4, p)
    w = [gen(4, i) for i in range(4)]
    rels = [
        nf_from_word(commutator(w[0], w[1]), p),
        nf_from_word(commutator(w[0] * w[1], w[2]), p),
        nf_from_word(commutator(w[0] * w[1] * w[2], w[3]), p),
    ]
    rep = relations_independent(rels)
    assert rep.independent and rep.rank == 3
    assert not relations_independent(rels + rels[:1]).independent
    assert select_independent(rels + rels[:1] + rels[1:2]) == [0, 1, 2]
    # the same three through the substitution stay independent in v-coordinates
    assert relations_independent([phi(commutator(w[0], w[1])), phi(commutator(w[0] * w[1], w[2]))]).rank == 2
    with pytest.raises(NotInFrattiniQuotient):
        relations_independent([nf_generator(3, 2, 0)])


def test_square_relations_rank_q():
    for q in range(1, 5):
        d = 2 * q + 1
        rels = [nf_from_word(commutator(gen(d, 2 * i) * gen(d, 2 * i + 1) * gen(d, 2 * i + 2), gen(d, 2 * i + 1)), 3)
                for i in range(q)]
        assert relations_independent(rels).rank == q


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 5), st.sampled_from([2, 3, 5]), st.data())
def test_nf_matches_heisenberg_oracle(d, p, data):
    w = data.draw(words(d))
    n = nf_from_word(w, p)
    assert (n.e, n.c) == heisenberg_coordinates(w.letters, d, p)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4), st.sampled_from([2, 3]), st.data())
def test_group_laws(d, p, data):
    u, v, w = (nf_from_word(data.draw(words(d)), p) for _ in range(3))
    assert nf_mul(nf_mul(u, v), w) == nf_mul(u, nf_mul(v, w))
    assert nf_mul(u, nf_identity(d, p)) == u == nf_mul(nf_identity(d, p), u)
    assert nf_mul(u, nf_inv(u)).is_identity() and nf_mul(nf_inv(u), u).is_identity()
    a, b = data.draw(words(d)), data.draw(words(d))
    assert nf_from_word(a * b, p) == nf_mul(nf_from_word(a, p), nf_from_word(b, p))
    # commutators are central and bilinear in the abelianization
    comm = nf_commutator(u, v)
    assert not any(comm.e)
    for i, j in itertools.combinations(range(d), 2):
        want = (u.e[i] * v.e[j] - u.e[j] * v.e[i]) % p
        assert comm.coeff(i, j) == want
    assert nf_mul(comm, w) == nf_mul(w, comm)
    assert nf_pow(u, p * p).in_frattini()


def test_commutator_identities_on_generators():
    for d in (2, 3, 4):
        for p in (2, 3):
            g = [gen(d, i) for i in range(d)]
            for a, b, c in itertools.product(range(d), repeat=3):
                lhs = nf_from_word(commutator(g[a].inverse(), g[b]), p)
                assert lhs == nf_inv(nf_from_word(commutator(g[a], g[b]), p))
                lhs = nf_from_word(commutator(g[a] * g[b], g[c]), p)
                rhs = nf_from_word(commutator(g[a], g[c]) * commutator(g[b], g[c]), p)
                assert lhs == rhs


def test_frattini_coordinates_and_rank_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        d, p = int(rng.integers(2, 6)), int(rng.choice([2, 3, 5]))
        rels = []
        for _ in range(int(rng.integers(1, 6))):
            i, j = sorted(rng.choice(d, 2, replace=False))
            w = commutator(gen(d, i) * gen(d, int(rng.integers(d))), gen(d, j)) * gen(d, int(rng.integers(d)), p)
            rels.append(nf_from_word(w, p))
        m = coordinate_matrix(rels)
        assert m.shape == (len(rels), d + d * (d - 1) // 2)
        assert relations_independent(rels).rank == sympy_rank(m.tolist(), p)


def test_pair_index_and_cup_form():
    for d in range(2, 7):
        assert [pair_index(d, i, j) for i, j in itertools.combinations(range(d), 2)] == list(range(d * (d - 1) // 2))
    r = nf_from_word(demushkin_relator(4, 3), 3)
    b = cup_form_from_relator(r)
    assert b.tolist() == [[0, 1, 0, 0], [2, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 0]]
    r = nf_from_word(demushkin_relator(2, 3, [1, 2]), 3)
    assert r.e == (3, 6) and r.in_frattini()
    with pytest.raises(ValueError):
        demushkin_relator(3, 3)
    with pytest.raises(ValueError):
        ClassTwoWord(2, 3, (0,), (0,))
