import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graphgen import graphs_up_to, labeled_graphs
from oracles import sympy_rank
from praag.cohomology import (
    SRAlgebra,
    cup_annihilator,
    cup_is_zero,
    cup_matrix,
    cup_rank,
    dim_im_c_alpha,
    dim_im_c_alpha_formula,
    normalize_character,
    rescaling,
    support_data,
    wedge,
)
from praag.errors import AlgebraMismatch, EmptySupport
from praag.graph import (
    complete_graph,
    disjoint_union,
    enumerate_cliques,
    fan_graph,
    join,
    num_components,
    path_graph,
    star_graph,
)

FAN = fan_graph(4)


def test_wedge_examples():
    alg = SRAlgebra(path_graph(2), 3)
    e = wedge(alg.chi(0), alg.chi(1))
    assert e == alg.monomial((0, 1))
    assert wedge(alg.chi(1), alg.chi(0)) == e.scale(-1)
    for p in (2, 3):
        a = SRAlgebra(path_graph(2), p)
        assert wedge(a.chi(0), a.chi(0)).is_zero()
    other = SRAlgebra(path_graph(2), 3)
    with pytest.raises(AlgebraMismatch):
        wedge(alg.chi(0), other.chi(1))


def test_non_adjacent_product_vanishes():
    alg = SRAlgebra(path_graph(3), 5)
    assert wedge(alg.chi(0), alg.chi(2)).is_zero()


def test_dimensions_are_clique_counts():
    for g in graphs_up_to(7):
        alg = SRAlgebra(g, 2)
        assert alg.dim(1) == g.d and alg.dim(2) == g.num_edges
        for n in range(g.d + 1):
            assert alg.dim(n) == len(enumerate_cliques(g, n))


def test_wedge_associative_and_graded_commutative():
    for d in range(1, 6):
        for g in labeled_graphs(d) if d <= 4 else [complete_graph(5), FAN]:
            alg = SRAlgebra(g, 3)
            monos = [alg.monomial(c) for n in range(0, 3) for c in alg.basis(n)]
            for a, b in itertools.product(monos, repeat=2):
                ab, ba = wedge(a, b), wedge(b, a)
                assert ab == ba.scale((-1) ** (a.degree * b.degree))
            for a, b, c in itertools.product(monos[:8], repeat=3):
                assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_cup_matrix_matches_wedge():
    for g in [FAN, complete_graph(4), star_graph(3)]:
        alg = SRAlgebra(g, 5)
        rng = np.random.default_rng(1)
        for _ in range(10):
            alpha = alg.character(rng.integers(0, 5, g.d))
            m = cup_matrix(alg, alpha).entries
            for i in range(g.d):
                assert np.array_equal(m[:, i], wedge(alg.chi(i), alpha).coeffs)
            assert not np.any(m @ alpha.coeffs % 5)


def test_cup_examples():
    alg = SRAlgebra(complete_graph(3), 3)
    assert not np.any(cup_matrix(alg, [0, 0, 0]).entries)
    assert cup_rank(alg, alg.chi(0)) == 2
    assert cup_is_zero(alg, alg.chi(0), alg.chi(0))
    assert not cup_is_zero(alg, alg.chi(0), alg.chi(1))
    ann = cup_annihilator(alg, alg.chi(0))
    assert ann.tolist() == [[1, 0, 0]]


def test_support_data_examples():
    sd = support_data(SRAlgebra(FAN, 3), range(5))
    assert sd.v0 == () and sd.e0 == ()
    sd = support_data(FAN, [0])
    assert sd.v0 == (1, 2, 3, 4)
    assert sd.e == {1: 1, 2: 1, 3: 1, 4: 1}
    assert sd.e0 == ((1, 2), (2, 3), (3, 4))
    sd = support_data(star_graph(3), [0])
    assert sd.v0 == (1, 2, 3) and sd.e0 == ()
    with pytest.raises(EmptySupport):
        support_data(FAN, [])


def test_formula_examples():
    assert dim_im_c_alpha_formula(FAN, range(5)) == 4
    assert dim_im_c_alpha_formula(FAN, [0]) == 4
    assert dim_im_c_alpha_formula(star_graph(3), [0]) == 3
    for s, want in [(range(5), 4), ([0], 4)]:
        assert cup_rank(SRAlgebra(FAN, 3), SRAlgebra(FAN, 3).support_character(s)) == want
    assert cup_rank(SRAlgebra(star_graph(3), 2), [1, 0, 0, 0]) == 3


def test_full_sum_rank_is_d_minus_r():
    for g in graphs_up_to(6):
        for p in (2, 3, 5):
            alg = SRAlgebra(g, p)
            assert cup_rank(alg, [1] * g.d) == g.d - num_components(g)


def test_formula_matches_rank_and_block_rank_up_to_6():
    for g in graphs_up_to(6):
        alg = SRAlgebra(g, 3)
        for k in range(1, g.d + 1):
            for s in itertools.combinations(range(g.d), k):
                m = cup_matrix(alg, alg.support_character(s)).entries
                assert dim_im_c_alpha_formula(alg, s) == cup_rank(alg, alg.support_character(s))
                if g.d <= 4:
                    assert cup_rank(alg, alg.support_character(s)) == sympy_rank(m.tolist(), 3)
                sd = support_data(alg, s)
                outside = [v for v in range(g.d) if v not in s]
                block = m[:, outside]
                assert (sympy_rank(block.tolist(), 3) if outside else 0) == len(sd.v0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5, 7]))
def test_raw_character_rank_equals_formula(seed, p):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 7))
    pairs = list(itertools.combinations(range(d), 2))
    g = type(FAN).from_edges(d, [e for e in pairs if rng.random() < 0.5])
    alg = SRAlgebra(g, p)
    alpha = rng.integers(0, p, d)
    if not alpha.any():
        return
    assert cup_rank(alg, alpha) == dim_im_c_alpha(alg, alpha)
    # rescaling the vertices turns alpha into its 0/1 support form
    scaled = alpha * rescaling(alg, alpha) % p
    assert set(scaled.tolist()) <= {0, 1}
    assert normalize_character(alg, alpha) == tuple(np.nonzero(scaled)[0])


def test_free_product_and_join_dimensions():
    for g1, g2 in itertools.product([FAN, path_graph(3), complete_graph(3), star_graph(2)], repeat=2):
        u = disjoint_union(g1, g2)
        assert SRAlgebra(u, 2).dim(2) == SRAlgebra(g1, 2).dim(2) + SRAlgebra(g2, 2).dim(2)
        j = join(g1, g2)
        assert SRAlgebra(j, 2).dim(2) == g1.num_edges + g2.num_edges + g1.d * g2.d
