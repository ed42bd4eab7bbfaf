from fractions import Fraction

import pytest

from taftdouble.chebyshev import bivariate_to_poly, p_n_bivariate
from taftdouble.cyclotomic import make_context
from taftdouble.dnrep import Monomial, SimpleLabel, double_rep
from taftdouble.grring import groth_ring
from taftdouble.polymat import RingMatrix, RingPoly
from taftdouble.spectral import (
    EigIndex,
    block_matrix,
    build_fusion_blockform,
    build_fusion_from_rules,
    certificates,
    eig_indices,
    fusion_left_eigvec,
    fusion_right_eigvec,
    gen_trace_combination,
    groth_decomposition,
    in_span_of,
    spectral_tables,
)


def test_eigenvalue_examples():
    tab = spectral_tables(5)
    assert tab.lam(EigIndex(0, 0)) == 2
    idx = tab.index_from_grouplike(1, 0)
    assert tab.lam(idx) == tab.ctx.root_power(1) + tab.ctx.one()
    # the index maps invert each other
    for idx in eig_indices(5):
        i, k = tab.grouplike_from_index(idx)
        assert tab.index_from_grouplike(i, k) == idx
    lams = [tab.lam(idx) for idx in eig_indices(5)]
    assert len(set(lams)) == len(lams) == 15


def test_right_eigvec_is_dimension_vector_at_origin():
    tab = spectral_tables(5)
    v = tab.right_eigvec(EigIndex(0, 0))
    assert v == [make_context(5).from_rational(d) for d in groth_ring(5).dim_simple_vector()]


def test_last_block_vanishes_for_nonzero_j():
    n = 7
    tab = spectral_tables(n)
    for j in range(1, 4):
        for r in (0, 2):
            v = tab.right_eigvec(EigIndex(j, r))
            assert all(x.is_zero() for x in v[-n:])


def test_left_eigvec_is_projective_dimension_vector():
    n = 5
    tab = spectral_tables(n)
    w = tab.left_eigvec(EigIndex(0, 0))
    p = groth_ring(n).dim_projective_vector()
    assert w == [make_context(n).from_rational(Fraction(x, n)) for x in p]


def test_left_coefficients_are_power_sums():
    n = 7
    tab = spectral_tables(n)
    ctx = tab.ctx
    for j in range(1, 4):
        coeffs = tab.left_coeffs(EigIndex(j, 0))
        for k in range(1, n):
            assert coeffs[k] == ctx.root_power(j * k) + ctx.root_power(-j * k)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_certificates_verify(n):
    M = groth_ring(n).mckay_v20()
    certs = certificates(n)
    assert len(certs) == n * (n + 1) // 2
    for c in certs:
        assert c.verify(M)
        if c.index.j:
            # one more application of (M - lam) annihilates the completion
            resid = [a - c.lam * b for a, b in zip(M.mat_vec(c.gen_right), c.gen_right)]
            second = [a - c.lam * b for a, b in zip(M.mat_vec(resid), resid)]
            assert all(x.is_zero() for x in second)


def test_gen_eigvec_rejects_simple_eigenvalues():
    tab = spectral_tables(5)
    with pytest.raises(ValueError):
        tab.gen_right_eigvec(EigIndex(0, 3))
    with pytest.raises(ValueError):
        tab.gen_left_eigvec(EigIndex(0, 0))


def test_gen_right_seed_coefficients():
    tab = spectral_tables(7)
    idx = EigIndex(2, 3)
    coeffs = tab.gen_right_coeffs(idx)
    u = tab.u_vals[2]
    assert coeffs[0] == tab.ctx.one()
    assert coeffs[1] == u[1].mul_qpow(idx.r) + 1


def test_trace_vectors_are_the_right_eigenvectors():
    n = 5
    tab = spectral_tables(n)
    rep = double_rep(n)
    for i in range(n):
        for k in range(n):
            idx = tab.index_from_grouplike(i, k)
            assert rep.trace_vector_S(Monomial(i, k, 0)) == tab.right_eigvec(idx)


def test_block_charpoly():
    n = 7
    tab = spectral_tables(n)
    ctx = tab.ctx
    for k in range(n):
        bp = tab.block_charpoly(k)
        # frozen shape: t^7 - 7 q^k t^5 + 14 q^{2k} t^3 - 7 q^{3k} t - 2
        assert bp[7] == ctx.one()
        assert bp[5] == ctx.root_power(k) * (-7)
        assert bp[3] == ctx.root_power(2 * k) * 14
        assert bp[1] == ctx.root_power(3 * k) * (-7)
        assert bp[0] == ctx.from_rational(-2)
        assert bp == bivariate_to_poly(p_n_bivariate(n), ctx.root_power(k), ctx.zero())
        assert block_matrix(n, k).char_poly_small() == bp
    # n=3, block 0 factors as (t - 2)(t + 1)^2
    tab3 = spectral_tables(3)
    ctx3 = tab3.ctx
    lin = RingPoly([ctx3.one(), ctx3.one()], ctx3.zero())
    expect = RingPoly([ctx3.from_rational(-2), ctx3.one()], ctx3.zero()) * lin * lin
    assert tab3.block_charpoly(0) == expect
    # the blocks jointly account for the full characteristic degree
    assert sum(tab.block_charpoly(k).degree() for k in range(n)) == n * n


def test_general_eigenvalue_formulas():
    n = 5
    tab = spectral_tables(n)
    ring = groth_ring(n)
    for idx in eig_indices(n):
        assert tab.general_eigenvalue(idx, 2, 0) == tab.lam(idx)
    # j = 0 gives the scaled dimension
    for ell in range(1, n + 1):
        for s in range(n):
            val = tab.general_eigenvalue(EigIndex(0, 1), ell, s)
            assert val == tab.ctx.root_power((ell - 1 + 2 * s) * 1) * ell
    Mv = ring.mckay_matrix(3, 2)
    for idx in eig_indices(n):
        val = tab.general_eigenvalue(idx, 3, 2)
        v = tab.right_eigvec(idx)
        assert Mv.mat_vec(v) == [val * x for x in v]
    Qv = ring.projective_mckay(3, 2)
    for idx in eig_indices(n):
        pval = tab.projective_eigenvalue(idx, 3, 2)
        v = tab.right_eigvec(idx)
        assert Qv.vec_mat(v) == [pval * x for x in v]


def test_gen_trace_combination():
    n = 3
    ring = groth_ring(n)
    rep = double_rep(n)
    M = ring.mckay_v20()
    with pytest.raises(ValueError):
        gen_trace_combination(n, 1, 2)
    vec, gammas, lam = gen_trace_combination(n, 1, 0)
    assert len(gammas) == 2 and gammas[-1] == rep.ctx.one()
    resid = [a - lam * b for a, b in zip(M.mat_vec(vec), vec)]
    t = rep.trace_vector_S(Monomial(1, 0, 0))
    assert in_span_of(resid, t) is not None
    # membership in the two-dimensional generalized eigenspace
    second = [a - lam * b for a, b in zip(M.mat_vec(resid), resid)]
    assert all(x.is_zero() for x in second)


def test_idempotent_scalars_n3():
    dec = groth_decomposition(3)
    ctx = dec.ctx
    for r in range(3):
        comp = dec.components[r]
        assert comp.xi == ctx.root_power(2 * r) * 9
        assert comp.thetas[1] == ctx.root_power(r) * (-3)
        assert comp.nus[1] == ctx.one()
        # xi^{-1} F_0 = (1/9)(q^r x^2 + 2 q^{2r} x + 1) in the component
        poly = comp.f_polys[0] * comp.xi.inverse()
        ninth = Fraction(1, 9)
        expect = RingPoly(
            [
                ctx.from_rational(ninth),
                ctx.root_power(2 * r) * 2 * ninth,
                ctx.root_power(r) * ninth,
            ],
            ctx.zero(),
        )
        assert poly == expect


def test_groth_coordinates_n3():
    dec = groth_decomposition(3)
    ctx = dec.ctx
    third = Fraction(1, 3)
    for r in range(3):
        qr = lambda e: ctx.root_power(e)
        f = dec.f_coords(EigIndex(1, r))
        expect_f = [
            qr(2 * r) * -third, ctx.from_rational(-third), qr(r) * -third,
            qr(r) * -third, qr(2 * r) * -third, ctx.from_rational(-third),
            ctx.from_rational(third), qr(r) * third, qr(2 * r) * third,
        ]
        assert f == expect_f
        g = dec.g_coords(EigIndex(1, r))
        expect_g = [
            qr(r) * (-2 * third), qr(2 * r) * (-2 * third), ctx.from_rational(-2 * third),
            ctx.from_rational(third), qr(r) * third, qr(2 * r) * third,
        ] + [ctx.zero()] * 3
        assert g == expect_g


def test_eigenidem_certificates():
    dec = groth_decomposition(3)
    ctx = dec.ctx
    for r in range(3):
        comp = dec.components[r]
        c_u, ok = dec.eigenidem_certificate(
            EigIndex(0, r), comp.to_groth(comp.f_polys[0] * comp.xi.inverse())
        )
        assert ok and c_u == ctx.one()
        c_u, ok = dec.eigenidem_certificate(EigIndex(1, r), dec.f_coords(EigIndex(1, r)))
        assert ok and c_u.is_zero()
        c_u, ok = dec.eigenidem_certificate(EigIndex(1, r), comp.to_groth(comp.g_prime(1)))
        assert ok and c_u == ctx.one()


def test_division_by_wrong_root_is_fatal():
    dec = groth_decomposition(3)
    comp = dec.components[0]
    bad = RingPoly([dec.ctx.from_rational(7), dec.ctx.one()], dec.ctx.zero())
    _q, rem = comp.modulus.divmod(bad)
    assert not rem.is_zero()  # a wrong eigenvalue leaves a remainder


@pytest.mark.parametrize("n", [3, 5, 7])
def test_fusion_matrix(n):
    tab = spectral_tables(n)
    Nr = build_fusion_from_rules(n)
    assert Nr == build_fusion_blockform(n)
    assert Nr.nrows == n * (n + 1) // 2
    lams = set()
    for idx in eig_indices(n):
        lam = tab.lam(idx)
        lams.add(lam)
        rv = fusion_right_eigvec(n, idx)
        lv = fusion_left_eigvec(n, idx)
        assert Nr.mat_vec(rv) == [lam * x for x in rv]
        assert Nr.vec_mat(lv) == [lam * x for x in lv]
    assert len(lams) == n * (n + 1) // 2
    h = (n - 1) // 2
    for j in range(h + 1):
        assert tab.l_vals[j][h] == tab.l_vals[j][h + 1]
