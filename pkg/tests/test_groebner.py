import random

import pytest

from hfstrata import linalg
from hfstrata.errors import DegenerateInputError, ParameterError, StructureError
from hfstrata.field import PrimeField
from hfstrata.groebner import (
    Ideal,
    buchberger,
    buchberger_basis,
    divide,
    ideal_member,
    ideal_sum,
    maximal_ideal_power,
    syzygies,
)
from hfstrata.ring import RingContext, module_piece_basis, poly_coords
from hfstrata.strata import random_forms

from conftest import build_corpus, ring2, ring4, twisted_cubic


def f7_ring2():
    return RingContext(("x", "y"), PrimeField(7))


def test_divide_exact():
    r = ring2()
    x = r.variable(0)
    q, rem = divide(x * x, [x])
    assert q == (x,) and rem.is_zero()


def test_divide_partial():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    q, rem = divide(x * y + y * y, [x])
    assert q == (y,) and rem == y * y


def test_divide_no_lead_divisor():
    r = f7_ring2()
    x, y = r.variable(0), r.variable(1)
    q, rem = divide(y * y * y, [x * x + y * y, x * y])
    assert rem == y * y * y
    assert all(t.is_zero() for t in q)


def test_divide_rejects_zero_divisor():
    r = ring2()
    with pytest.raises(DegenerateInputError):
        divide(r.variable(0), [r.zero()])
    with pytest.raises(StructureError):
        divide(r.variable(0), [])


def test_monomial_ideal_is_its_own_gb():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    ideal = Ideal(r, [x * x, x * y])
    assert set(buchberger(ideal)) == {x * x, x * y}


def test_buchberger_single_spair_f7():
    r = f7_ring2()
    x, y = r.variable(0), r.variable(1)
    ideal = Ideal(r, [x * x + y * y, x * y])
    gb = buchberger(ideal)
    assert set(gb) == {x * x + y * y, x * y, y * y * y}


def test_membership():
    r = f7_ring2()
    x, y = r.variable(0), r.variable(1)
    ideal = Ideal(r, [x * x + y * y, x * y])
    assert ideal_member(y * y * y, ideal)
    assert ideal_member(r.zero(), ideal)
    only_sq = Ideal(r, [x * x])
    assert not ideal_member(x, only_sq)


def test_ideal_sum():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    a = Ideal(r, [x])
    zero = Ideal(r, [])
    assert ideal_sum(a, zero).generators == a.generators
    assert ideal_sum(a, Ideal(r, [y])).generators == (x, y)


def test_truncation_generator_count():
    tc = twisted_cubic()
    m4 = maximal_ideal_power(tc.ring, 4)
    assert len(m4.generators) == 35  # C(7,3)
    total = ideal_sum(tc, m4)
    assert len(total.generators) == 38


def test_maximal_ideal_power_examples():
    r2 = ring2()
    assert [str(g) for g in maximal_ideal_power(r2, 2).generators] == ["x^2", "x*y", "y^2"]
    r1 = RingContext(("x",), PrimeField(7))
    assert [str(g) for g in maximal_ideal_power(r1, 3).generators] == ["x^3"]
    with pytest.raises(ParameterError):
        maximal_ideal_power(r2, 0)


def test_koszul_syzygy():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    basis = syzygies(Ideal(r, [x * x, y * y]))
    assert len(basis) == 1
    a, b = basis.elements[0]
    # (y^2, -x^2) up to scalar
    assert (a * (x * x) + b * (y * y)).is_zero()
    c = r.field.inv(a.lead_coeff())
    assert a.scale(c) == y * y and b.scale(c) == -(x * x)


def test_principal_ideal_has_no_syzygies():
    r = ring2()
    x, y = r.variable(0), r.variable(1)
    assert len(syzygies(Ideal(r, [x * x + y * y]))) == 0


def test_twisted_cubic_syzygies_linear():
    tc = twisted_cubic()
    basis = syzygies(tc)
    assert len(basis) >= 2
    for vec in basis:
        total = tc.ring.zero()
        for a, f in zip(vec, tc.generators):
            total = total + a * f
        assert total.is_zero()
    degrees = sorted(
        {a.homogeneous_degree() + 2 for vec in basis for a in vec if not a.is_zero()}
    )
    assert degrees[0] == 3  # linear syzygies exist


def syzygy_span_rank(ideal, basis, degree):
    """Rank of the degree-`degree` span of a syzygy generating set."""
    ring = ideal.ring
    shifts = [f.homogeneous_degree() for f in ideal.generators]
    coords = module_piece_basis(ring, shifts, degree)
    index = {k: c for c, k in enumerate(coords)}
    rows = []
    from hfstrata.ring import monomials_of_degree
    from hfstrata.groebner import vector_degree

    for vec in basis:
        d = vector_degree(vec, shifts)
        if d > degree:
            continue
        for mult in monomials_of_degree(ring.n, degree - d, ring.order.kind):
            row = [0] * len(coords)
            for comp, f in enumerate(vec):
                if not f.is_zero():
                    poly_coords(f, index, row, ring.field.p, comp, mult)
            rows.append(row)
    if not rows:
        return 0
    return linalg.rank(linalg.as_matrix(rows, len(coords)), ring.field.p)


def test_syzygy_spans_match_oracle(corpus):
    from hfstrata.invariants import regularity
    from hfstrata.oracle import syzygies_bruteforce

    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        reg = regularity(ideal)
        bound = reg + 2
        basis = syzygies(ideal)
        oracle = syzygies_bruteforce(ideal, bound)
        for e in sorted(oracle):
            assert syzygy_span_rank(ideal, basis.elements, e) == len(oracle[e]), (name, e)


def test_division_contract_random(corpus):
    rng = random.Random(2024)
    checked = 0
    for ideal in corpus.values():
        if ideal.is_zero_ideal():
            continue
        ring = ideal.ring
        gb = buchberger(ideal)
        for k in range(60):
            deg = rng.randrange(1, 6)
            f = random_forms(ring, deg, 1, seed=1000 * deg + k)[0]
            if f.is_zero():
                continue
            qs, rem = divide(f, gb)
            total = rem
            for q, g in zip(qs, gb):
                total = total + q * g
            assert total == f
            checked += 1
    assert checked >= 450


def test_gb_confluence_under_shuffles(corpus):
    rng = random.Random(11)
    for name, ideal in corpus.items():
        if ideal.is_zero_ideal():
            continue
        reference = sorted(str(g) for g in buchberger(ideal))
        gens = list(ideal.generators)
        for _ in range(10):
            rng.shuffle(gens)
            got = sorted(str(g) for g in buchberger_basis(ideal.ring, gens))
            assert got == reference, name


def test_spolys_of_gb_reduce_to_zero(corpus):
    from hfstrata.ring import monomial_div, monomial_lcm

    for ideal in corpus.values():
        if ideal.is_zero_ideal():
            continue
        gb = list(buchberger(ideal))
        for i in range(len(gb)):
            for j in range(i):
                lcm = monomial_lcm(gb[i].lead_exps(), gb[j].lead_exps())
                s = gb[i].term_mul(monomial_div(lcm, gb[i].lead_exps())) - gb[j].term_mul(
                    monomial_div(lcm, gb[j].lead_exps())
                )
                if s.is_zero():
                    continue
                _, rem = divide(s, gb)
                assert rem.is_zero()


def test_reduced_gb_properties(corpus):
    from hfstrata.ring import monomial_divides

    for ideal in corpus.values():
        gb = buchberger(ideal)
        for g in gb:
            assert g.lead_coeff() == 1
        for i, g in enumerate(gb):
            for j, h in enumerate(gb):
                if i == j:
                    continue
                for exps, _ in g.terms:
                    assert not monomial_divides(h.lead_exps(), exps)
