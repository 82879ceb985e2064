import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import sympy_rank
from praag.demushkin import (
    DemushkinForm,
    demushkin_cor_table,
    demushkin_h2_exactness,
    demushkin_suite,
    demushkin_symplectic_basis,
    relator_form,
    standard_form,
    y_generators,
)
from praag.errors import DegenerateForm, OddDimension


def random_form(rng, p, d):
    """P^T S P for the standard S and a random invertible P."""
    while True:
        m = rng.integers(0, p, (d, d))
        if sympy_rank(m.tolist(), p) == d:
            return DemushkinForm(p, m.T @ standard_form(d, p) @ m % p)


def test_symplectic_examples():
    for p, d in [(2, 2), (3, 4), (5, 6)]:
        assert np.array_equal(demushkin_symplectic_basis(DemushkinForm.standard(p, d)), np.eye(d, dtype=int))
    f = DemushkinForm(5, [[0, 3], [2, 0]])
    pm = demushkin_symplectic_basis(f)
    assert pm.tolist() == [[1, 0], [0, 2]]  # 3^-1 = 2 mod 5
    with pytest.raises(DegenerateForm):
        demushkin_symplectic_basis(DemushkinForm(3, np.zeros((2, 2), dtype=int)))
    with pytest.raises(OddDimension):
        standard_form(3, 3)
    with pytest.raises(ValueError):
        DemushkinForm(3, [[1, 0], [0, 0]])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5]), st.sampled_from([2, 4, 6, 8]))
def test_symplectic_postcondition(seed, p, d):
    f = random_form(np.random.default_rng(seed), p, d)
    pm = demushkin_symplectic_basis(f)
    assert np.array_equal(pm.T @ f.matrix @ pm % p, standard_form(d, p))
    assert sympy_rank(pm.tolist(), p) == d


def test_h2_exactness():
    res = demushkin_h2_exactness(DemushkinForm.standard(3, 4))
    assert res.exact and res.checked == 80
    res = demushkin_h2_exactness(DemushkinForm.standard(2, 2))
    assert res.exact and res.checked == 3
    b = np.zeros((4, 4), dtype=int)
    b[0, 1], b[1, 0] = 1, 2
    res = demushkin_h2_exactness(DemushkinForm(3, b))
    assert not res.exact
    assert not np.any(b @ np.array(res.witness) % 3)
    # large instances are decided by rank
    big = demushkin_h2_exactness(DemushkinForm.standard(97, 4))
    assert big.exact and big.checked == 0


def test_h2_exactness_by_hand():
    # every nonzero alpha pairs non-trivially with some basis vector
    for p, d in [(2, 4), (3, 2), (5, 2)]:
        f = DemushkinForm.standard(p, d)
        for a in itertools.product(range(p), repeat=d):
            if any(a):
                assert any(f.pair(a, e) for e in np.eye(d, dtype=int))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("d", [2, 4, 6])
def test_cor_table(p, d):
    t = demushkin_cor_table(p, d)
    assert t.y_count == 2 + p * (d - 2) == len(y_generators(p, d))
    e = np.eye(d, dtype=int)
    assert t.column("y1^p") == tuple(e[0])
    assert t.column("y2") == (0,) * d
    for i in range(3, d + 1):
        for v in range(p):
            assert t.column(f"y1^{v} y{i} y1^-{v}") == tuple(e[i - 1])
    assert t.rank == d - 1 == sympy_rank(t.matrix.tolist(), p)
    assert t.image_is_kernel
    assert str(2 + p * (d - 1)) in t.warning and str(2 + p * (d - 2)) in t.warning


def test_suite():
    for p in (2, 3, 5):
        for d in (2, 4, 6):
            r = demushkin_suite(p, d)
            for key in ("symplectic_ok", "h2_exact", "cor_values_ok", "image_is_kernel", "relator_form_matches"):
                assert r[key] is True
            assert len(r["warnings"]) == 1
    assert demushkin_suite(2, 2)["y_generators"] == ["y1^p", "y2"]
    f = random_form(np.random.default_rng(3), 5, 6)
    assert demushkin_suite(5, 6, f)["symplectic_ok"]
    with pytest.raises(ValueError):
        demushkin_suite(3, 4, f)


def test_relator_form_with_powers():
    for b in ([0, 0, 0, 0], [1, 2, 0, 1]):
        assert np.array_equal(relator_form(3, 4, b), standard_form(4, 3))
