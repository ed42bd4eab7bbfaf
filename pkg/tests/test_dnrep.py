import random
from fractions import Fraction

import pytest

from taftdouble.cyclotomic import make_context
from taftdouble.dnrep import (
    Monomial,
    SimpleLabel,
    all_labels,
    bckt_to_pbw,
    coproduct_trace_identity,
    double_rep,
    label_index,
)
from taftdouble.grring import groth_ring


def test_label_ordering():
    labs = all_labels(3)
    assert labs[0] == SimpleLabel(1, 0)
    assert labs[-1] == SimpleLabel(3, 2)
    assert [label_index(3, lab) for lab in labs] == list(range(9))


def test_trivial_module_acts_by_counit():
    rep = double_rep(5)
    acts = rep.action_set(SimpleLabel(1, 0))
    assert acts.mat_a.is_zero() and acts.mat_d.is_zero()
    assert acts.mat_b.rows[0][0] == rep.ctx.one()
    assert acts.mat_c.rows[0][0] == rep.ctx.one()


def test_two_dimensional_action_matrices():
    rep = double_rep(5)
    ctx = rep.ctx
    acts = rep.action_set(SimpleLabel(2, 0))
    assert acts.mat_b.rows[0][0] == ctx.one() and acts.mat_b.rows[1][1] == ctx.root_power(1)
    assert acts.mat_c.rows[0][0] == ctx.root_power(-1) and acts.mat_c.rows[1][1] == ctx.one()
    assert rep.alpha(1, 2) == ctx.one() - ctx.root_power(-1)


@pytest.mark.parametrize("n", [3, 5])
def test_relations_hold_everywhere(n):
    rep = double_rep(n)
    for lab in all_labels(n):
        assert rep.verify_relations(lab) == []


def test_label_validation():
    rep = double_rep(3)
    with pytest.raises(ValueError):
        rep.action_set(SimpleLabel(4, 0))


def test_pbw_products():
    rep = double_rep(5)
    ctx = rep.ctx
    q = ctx.root_power(1)
    a, b, c, d = (rep.pbw_generator(g) for g in "abcd")
    one = rep.pbw_monomial()
    assert b * a == a * b * q
    assert c * a == a * c * q
    assert d * b == b * d * q
    assert (d * a - a * d * q - one + b * c).is_zero()
    assert (rep.pbw_monomial(al=4) * a).is_zero()
    assert rep.pbw_monomial(al=5).is_zero()
    # associativity on a small sample
    rnd = random.Random(3)
    for _ in range(5):
        xs = [
            rep.pbw_monomial(
                rnd.randrange(3), rnd.randrange(5), rnd.randrange(5), rnd.randrange(3),
                coeff=ctx.root_power(rnd.randrange(5)),
            )
            for _ in range(3)
        ]
        assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])


def test_coproducts():
    rep = double_rep(5)
    ctx = rep.ctx
    b, d = rep.pbw_generator("b"), rep.pbw_generator("d")
    assert b.coproduct().terms == {((0, 1, 0, 0), (0, 1, 0, 0)): ctx.one()}
    assert d.coproduct().terms == {
        ((0, 0, 0, 1), (0, 0, 1, 0)): ctx.one(),
        ((0, 0, 0, 0), (0, 0, 0, 1)): ctx.one(),
    }
    a2 = rep.pbw_monomial(al=2)
    expected = {
        ((2, 0, 0, 0), (0, 2, 0, 0)): ctx.one(),
        ((1, 0, 0, 0), (1, 1, 0, 0)): ctx.one() + ctx.root_power(1),
        ((0, 0, 0, 0), (2, 0, 0, 0)): ctx.one(),
    }
    assert a2.coproduct().terms == expected


def test_coproduct_is_algebra_map():
    rep = double_rep(5)
    rnd = random.Random(9)
    for _ in range(4):
        x = rep.pbw_monomial(rnd.randrange(3), rnd.randrange(5), rnd.randrange(5), rnd.randrange(3))
        y = rep.pbw_monomial(rnd.randrange(3), rnd.randrange(5), rnd.randrange(5), rnd.randrange(3))
        assert ((x * y).coproduct() - x.coproduct() * y.coproduct()).is_zero()


def test_counit():
    rep = double_rep(3)
    assert rep.pbw_generator("a").counit().is_zero()
    assert rep.pbw_generator("d").counit().is_zero()
    assert rep.pbw_generator("b").counit() == rep.ctx.one()
    assert rep.pbw_monomial(be=2, ga=1).counit() == rep.ctx.one()


def test_quantum_binomials():
    rep = double_rep(5)
    ctx = rep.ctx
    q = ctx.root_power(1)
    assert rep.quantum_binomial(2, 1) == ctx.one() + q
    for ell in range(5):
        assert rep.quantum_binomial(ell, 0) == ctx.one()
    assert rep.quantum_binomial(4, 2) == (1 + ctx.root_power(2)) * (
        1 + q + ctx.root_power(2)
    )
    with pytest.raises(ValueError):
        rep.quantum_binomial(2, 3)


def test_character_examples():
    n = 5
    rep = double_rep(n)
    ctx = rep.ctx
    for s in range(n):
        for i in range(n):
            for k in range(n):
                assert rep.grouplike_character_closed(
                    SimpleLabel(1, s), i, k
                ) == ctx.root_power(s * (i - k))
    for i in range(n):
        for k in range(n):
            assert rep.grouplike_character_closed(SimpleLabel(2, 0), i, k) == ctx.root_power(
                i
            ) + ctx.root_power(-k)
    # identity trace is the dimension
    for lab in all_labels(n):
        assert rep.grouplike_character_closed(lab, 0, 0) == lab.ell
    # nilpotency kills the trace once t reaches the dimension
    assert rep.character(SimpleLabel(2, 1), Monomial(1, 1, 3)).is_zero()
    assert rep.character(SimpleLabel(2, 1), Monomial(1, 1, 2)).is_zero()


def test_character_matches_matrix_route():
    rep = double_rep(5)
    rnd = random.Random(1)
    for _ in range(12):
        lab = SimpleLabel(rnd.randint(1, 5), rnd.randrange(5))
        mono = Monomial(rnd.randrange(5), rnd.randrange(5), rnd.randrange(5))
        assert rep.character(lab, mono) == rep.character_matrix_route(lab, mono)


def test_dual_labels():
    rep = double_rep(5)
    assert rep.dual_label(SimpleLabel(2, 0)) == SimpleLabel(2, 4)
    assert rep.dual_label(SimpleLabel(1, 0)) == SimpleLabel(1, 0)
    for lab in all_labels(5):
        assert rep.dual_label(rep.dual_label(lab)) == lab
    for r in range(5):
        assert rep.dual_label(SimpleLabel(5, r)) == SimpleLabel(5, (1 - r) % 5)


def test_projective_composition():
    rep = double_rep(3)
    assert rep.projective_composition(SimpleLabel(1, 0)) == {
        SimpleLabel(1, 0): 2,
        SimpleLabel(2, 1): 2,
    }
    assert rep.projective_composition(SimpleLabel(3, 1)) == {SimpleLabel(3, 1): 1}
    for lab in all_labels(3):
        comp = rep.projective_composition(lab)
        dim = sum(mult * l.ell for l, mult in comp.items())
        assert dim == (2 * 3 if lab.ell < 3 else 3)


def test_trace_vectors():
    rep = double_rep(3)
    ctx = rep.ctx
    assert rep.trace_vector_S(Monomial(0, 0, 0)) == [
        ctx.from_rational(lab.ell) for lab in all_labels(3)
    ]
    tv = rep.trace_vector_S(Monomial(1, 1, 0))
    assert tv[label_index(3, SimpleLabel(1, 0))] == ctx.one()
    # symmetry under (i, k) -> (-k, -i)
    for i in range(3):
        for k in range(3):
            assert rep.trace_vector_S(Monomial(i, k, 0)) == rep.trace_vector_S(
                Monomial((-k) % 3, (-i) % 3, 0)
            )


def test_projective_trace_vectors():
    rep3 = double_rep(3)
    ctx = rep3.ctx
    q = ctx.root_power
    assert rep3.trace_vector_P(0, 0) == [ctx.from_rational(x) for x in (6, 6, 6, 6, 6, 6, 3, 3, 3)]
    rows = {i: rep3.trace_vector_P(i, -i) for i in range(3)}
    table = [
        [q(0) * 6, q(0) * 6, q(0) * 6, q(0) * 6, q(0) * 6, q(0) * 6, q(0) * 3, q(0) * 3, q(0) * 3],
        [q(0) * 6, q(1) * 6, q(2) * 6, q(2) * 6, q(0) * 6, q(1) * 6, q(1) * 3, q(2) * 3, q(0) * 3],
        [q(0) * 6, q(2) * 6, q(1) * 6, q(1) * 6, q(0) * 6, q(2) * 6, q(2) * 3, q(1) * 3, q(0) * 3],
    ]
    assert set(map(tuple, rows.values())) == set(map(tuple, table))
    assert all(x.is_zero() for x in double_rep(5).trace_vector_P(1, 1))


def test_coproduct_trace_identity_cases():
    n = 3
    rep = double_rep(n)
    ring = groth_ring(n)
    M = ring.mckay_v20()
    v20 = SimpleLabel(2, 0)
    # grouplike: reduces to the eigen equation
    lhs, rhs = coproduct_trace_identity(rep, M, (0, 1, 1, 0), v20)
    assert lhs == rhs
    # x = a: both sides vanish outright
    lhs, rhs = coproduct_trace_identity(rep, M, (1, 0, 0, 0), v20)
    assert all(x.is_zero() for x in lhs) and all(x.is_zero() for x in rhs)
    # x = b c d a, fully expanded
    lhs, rhs = coproduct_trace_identity(rep, M, Monomial(1, 1, 1), v20)
    assert lhs == rhs
    rnd = random.Random(5)
    for _ in range(5):
        mono = (rnd.randrange(n), rnd.randrange(n), rnd.randrange(n), rnd.randrange(n))
        lhs, rhs = coproduct_trace_identity(rep, M, mono, v20)
        assert lhs == rhs


def test_bckt_conversion_round_trip():
    rep = double_rep(5)
    mono = Monomial(2, 3, 1)
    elem = bckt_to_pbw(rep, mono)
    # traces agree label by label with the direct evaluation
    for lab in all_labels(5):
        direct = rep.character(lab, mono)
        via_pbw = rep.ctx.zero()
        for m, coeff in elem.terms.items():
            via_pbw = via_pbw + coeff * rep.character_pbw(lab, m)
        assert direct == via_pbw
