import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taftdouble.cyclotomic import CycNum, complex_embed, cyclotomic_polynomial, make_context


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_context_degrees():
    assert make_context(3).degree == 2
    assert make_context(9).degree == 6
    assert make_context(13).degree == 12


@pytest.mark.parametrize("bad", [4, 2, 1, 0, -3, 6])
def test_context_rejects_even_or_small(bad):
    with pytest.raises(ValueError, match="odd"):
        make_context(bad)


def test_root_powers():
    ctx5 = make_context(5)
    assert ctx5.root_power(5) == ctx5.one()
    assert ctx5.root_power(-1) == ctx5.root_power(4)
    ctx3 = make_context(3)
    # q^2 reduces to -1 - q
    assert ctx3.root_power(2).coeffs == (Fraction(-1), Fraction(-1))
    ctx7 = make_context(7)
    assert ctx7.root_power(-1) == ctx7.root_power(6)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_phi_vanishes_at_q(n):
    ctx = make_context(n)
    q = ctx.root_power(1)
    acc = ctx.zero()
    for e, c in enumerate(ctx.phi_n):
        acc = acc + q**e * c
    assert acc.is_zero()


def test_basic_identities():
    ctx = make_context(3)
    q = ctx.root_power(1)
    assert q + ctx.root_power(2) == ctx.from_rational(-1)
    assert q.inverse() * q == ctx.one()
    ctx5 = make_context(5)
    q5 = ctx5.root_power(1)
    geom = ctx5.from_qpowers((1, e) for e in range(5))
    assert ((q5 - 1) * geom).is_zero()


def test_invert_zero_raises():
    ctx = make_context(5)
    with pytest.raises(ZeroDivisionError):
        ctx.zero().inverse()


def test_division_and_pow():
    ctx = make_context(7)
    x = ctx.from_coeffs([Fraction(1, 2), 3, Fraction(-2, 5), 0, 1, 0])
    assert x / x == ctx.one()
    assert x**0 == ctx.one()
    assert x**3 == x * x * x
    assert x**-2 == (x * x).inverse()


def test_mul_qpow_matches_generic():
    ctx = make_context(9)
    x = ctx.from_coeffs([1, Fraction(2, 3), 0, -4, 0, Fraction(1, 7)])
    for e in range(-9, 19):
        assert x.mul_qpow(e) == x * ctx.root_power(e)


def test_embed_examples():
    ctx3 = make_context(3)
    assert abs(ctx3.one().embed() - 1.0) < 1e-14
    v = ctx3.root_power(1) + ctx3.root_power(2)
    assert abs(v.embed() + 1.0) < 1e-12
    ctx5 = make_context(5)
    golden = ctx5.root_power(1) + ctx5.root_power(4)
    assert abs(golden.embed() - 2 * cmath.cos(2 * cmath.pi / 5).real) < 1e-9


def test_complex_embed_high_precision():
    ctx5 = make_context(5)
    golden = ctx5.root_power(1) + ctx5.root_power(4)
    val = complex_embed(golden, 40)
    import mpmath

    with mpmath.workdps(50):
        expected = 2 * mpmath.cos(2 * mpmath.pi / 5)
        assert abs(val.real - expected) < mpmath.mpf(10) ** -38
        assert abs(val.imag) < mpmath.mpf(10) ** -38


def test_json_round_trip():
    ctx = make_context(7)
    x = ctx.from_coeffs([Fraction(3, 7), -2, 0, Fraction(1, 2), 0, 5])
    assert CycNum.from_json(x.to_json()) == x
    obj = x.to_json()
    assert obj["n"] == 7 and len(obj["coeffs"]) == 6
    with pytest.raises(ValueError):
        CycNum.from_json({"n": 7, "coeffs": ["1", "2"]})


_coeff = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(
    n=st.sampled_from([3, 5, 9]),
    data=st.data(),
)
def test_field_axioms(n, data):
    ctx = make_context(n)
    vec = lambda: ctx.from_coeffs(
        data.draw(st.lists(_coeff, min_size=ctx.degree, max_size=ctx.degree))
    )
    x, y, z = vec(), vec(), vec()
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x + (-x) == ctx.zero()
    if x:
        assert x * x.inverse() == ctx.one()


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([3, 5, 9]), data=st.data())
def test_embedding_is_ring_hom(n, data):
    ctx = make_context(n)
    vec = lambda: ctx.from_coeffs(
        data.draw(st.lists(_coeff, min_size=ctx.degree, max_size=ctx.degree))
    )
    x, y = vec(), vec()
    assert abs((x + y).embed() - (x.embed() + y.embed())) < 1e-12
    assert abs((x * y).embed() - x.embed() * y.embed()) < 1e-10
