import pytest

from hfstrata.errors import DegenerateInputError
from hfstrata.field import PrimeField
from hfstrata.groebner import Ideal, maximal_ideal_power
from hfstrata.invariants import (
    HilbertSeries,
    betti_table,
    exactness_violations,
    hilbert_function,
    hilbert_series,
    krull_dim,
    minimal_free_resolution,
    regularity,
    regularity_quotient,
)
from hfstrata.ring import RingContext

from conftest import build_corpus, ring2, ring4, twisted_cubic


def test_hilbert_zero_ideal():
    zero = Ideal(ring2(), [])
    assert [hilbert_function(zero, d) for d in range(4)] == [1, 2, 3, 4]
    assert hilbert_series(zero).numerator == (1,)


def test_hilbert_twisted_cubic():
    tc = twisted_cubic()
    assert [hilbert_function(tc, d) for d in range(5)] == [1, 4, 7, 10, 13]


def test_hilbert_truncated_twisted_cubic():
    tc = twisted_cubic()
    gamma = tc + maximal_ideal_power(tc.ring, 4)
    values = [hilbert_function(gamma, d) for d in range(8)]
    assert values == [1, 4, 7, 10, 0, 0, 0, 0]


def test_hilbert_series_koszul():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    hs = hilbert_series(Ideal(r, [x * x, y * y]))
    assert hs.numerator == (1, 0, -2, 0, 1)  # (1 - t^2)^2


def test_hilbert_series_principal_quadric():
    r = ring4()
    x, y, z, w = (r.variable(i) for i in range(4))
    hs = hilbert_series(Ideal(r, [x * w - y * z]))
    assert hs.numerator == (1, 0, -1)


def test_hilbert_series_matches_function(corpus):
    for name, ideal in corpus.items():
        hs = hilbert_series(ideal)
        maxdeg = max((g.homogeneous_degree() for g in ideal.generators), default=1)
        for d in range(2 * maxdeg + 5):
            assert hs.coefficient(d) == hilbert_function(ideal, d), (name, d)


def test_krull_dim_examples():
    r4 = ring4()
    assert krull_dim(Ideal(r4, [])) == 4
    r2 = ring2()
    x, y = r2.variable(0), r2.variable(1)
    assert krull_dim(Ideal(r2, [x * x, y * y])) == 0
    assert krull_dim(twisted_cubic()) == 2
    with pytest.raises(DegenerateInputError):
        krull_dim(Ideal(r2, [r2.one()]))


def test_resolution_koszul_max_ideal_n2():
    res = minimal_free_resolution(maximal_ideal_power(ring2(), 1), 4)
    assert [m.shifts for m in res.modules] == [(1, 1), (2,)]


def test_resolution_twisted_cubic():
    bt = betti_table(twisted_cubic())
    assert bt.entries == {(0, 2): 3, (1, 3): 2}


def test_resolution_ci():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    res = minimal_free_resolution(Ideal(r, [x * x, y * y]), 3)
    assert [m.shifts for m in res.modules] == [(2, 2), (4,)]


def test_regularity_examples():
    r3 = RingContext(("x", "y", "z"), PrimeField(32003))
    assert regularity(maximal_ideal_power(r3, 1)) == 1
    assert regularity(twisted_cubic()) == 2
    r2 = ring2()
    x, y = r2.variable(0), r2.variable(1)
    assert regularity(Ideal(r2, [x * x, y * y])) == 3
    assert regularity(Ideal(r2, [])) == 0
    with pytest.raises(DegenerateInputError):
        regularity(Ideal(r2, [r2.one()]))


def test_reg_ideal_vs_quotient(corpus):
    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        assert regularity(ideal) == regularity_quotient(ideal) + 1, name


def test_resolution_composition_zero_and_exactness(corpus):
    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        res = minimal_free_resolution(ideal, ideal.ring.n + 2)
        assert res.composition_violations() == [], name
        bound = max(max(m.shifts) for m in res.modules) + 2
        assert exactness_violations(ideal, res, bound) == [], name


def test_resolution_minimality(corpus):
    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        res = minimal_free_resolution(ideal, ideal.ring.n + 2)
        assert res.minimal and not res.has_constant_entry(), name


def test_graded_map_degree_compatibility(corpus):
    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        res = minimal_free_resolution(ideal, ideal.ring.n + 2)
        for gmap in [res.augmentation()] + res.maps:
            assert gmap.violations() == [], name


def test_order_independence(corpus, corpus_lex):
    for name in corpus:
        a, b = corpus[name], corpus_lex[name]
        for d in range(13):
            assert hilbert_function(a, d) == hilbert_function(b, d), (name, d)
        if a.is_zero_ideal():
            continue
        assert krull_dim(a) == krull_dim(b), name
        assert betti_table(a).entries == betti_table(b).entries, name
        assert regularity(a) == regularity(b), name


def test_betti_render_and_json():
    bt = betti_table(twisted_cubic())
    assert bt.to_json() == [
        {"i": 0, "j": 2, "beta": 3},
        {"i": 1, "j": 3, "beta": 2},
    ]
    text = bt.render()
    assert "total:" in text and "2:" in text


def test_truncated_resolution_steps():
    tc = twisted_cubic()
    res2 = minimal_free_resolution(tc, 1)
    assert len(res2.modules) == 1 and len(res2.maps) == 0
    full = minimal_free_resolution(tc, 10)
    assert len(full.modules) == 2


def test_euler_characteristic_of_resolution(corpus):
    """Alternating sum of shift contributions reproduces the HS numerator."""
    for name, ideal in corpus.items():
        hs = hilbert_series(ideal)
        res = minimal_free_resolution(ideal, ideal.ring.n + 2)
        acc = {0: 1}
        for i, module in enumerate(res.modules):
            sign = -1 if i % 2 == 0 else 1
            for j in module.shifts:
                acc[j] = acc.get(j, 0) + sign
        numerator = [0] * (max(acc) + 1)
        for j, c in acc.items():
            numerator[j] = c
        assert HilbertSeries(numerator, ideal.ring.n) == hs, name
