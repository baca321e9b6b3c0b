import numpy as np
import pytest

from gorkit import frobext as fx
from gorkit import modcat as mc
from gorkit import resolve as rs
from gorkit.algebra import path_algebra
from gorkit.gorenstein import certify_ig
from gorkit.modcat import is_isomorphic, simple, vertex_projective


def test_field_into_e1_is_frobenius(e1_ext):
    assert e1_ext is not None
    # tau picks the x-coefficient up to a scalar
    assert e1_ext.tau[0, 0] == 0 and e1_ext.tau[0, 1] != 0


def test_e4_over_e2(e4_ext, E2, E4):
    assert e4_ext is not None
    R, p = E4, E4.prime
    t = (R.element_from_label("t1") + R.element_from_label("t2")) % p
    # sigma(a + b t, c + d t) = lam (a d + b c) for a nonzero scalar lam
    c = e4_ext.sigma(t, R.one)
    lam = int(c[E2.idempotents[0]])
    assert lam and np.array_equal(c, lam * E2.one % p)
    basis = np.eye(E2.dimension, dtype=np.int64)
    for s1 in basis:
        for s2 in basis:
            a, b = e4_ext.embedding(s1), e4_ext.embedding(s2)
            prod = lam * E2.multiply(s1, s2) % p
            assert not e4_ext.sigma(a, b).any()
            assert np.array_equal(e4_ext.sigma(R.multiply(t, a), b), prod)
            assert np.array_equal(e4_ext.sigma(a, R.multiply(t, b)), prod)
            assert not e4_ext.sigma(R.multiply(t, a), R.multiply(t, b)).any()


def test_sigma_twisted_linearity(e4_ext, E2, E4):
    p = E4.prime
    for i in range(E2.dimension):
        s = np.eye(E2.dimension, dtype=np.int64)[i]
        x = e4_ext.embedding(s)
        for a in np.eye(E4.dimension, dtype=np.int64):
            for b in np.eye(E4.dimension, dtype=np.int64):
                lhs = e4_ext.sigma(E4.multiply(x, a), b)
                rhs = E2.multiply(e4_ext.alpha @ s % p, e4_ext.sigma(a, b))
                assert np.array_equal(lhs, rhs)
                lhs = e4_ext.sigma(a, E4.multiply(b, x))
                assert np.array_equal(lhs, E2.multiply(e4_ext.sigma(a, b), s))


def test_sigma_nondegenerate(e4_ext, E4):
    # a -> sigma(a, -) is injective
    for a in np.eye(E4.dimension, dtype=np.int64):
        assert any(e4_ext.sigma(a, b).any() for b in np.eye(E4.dimension, dtype=np.int64))


def test_negative_controls(K, E1, E3):
    assert fx.verify_frobenius(fx.AlgebraEmbedding.by_labels(K, E3)) is None
    Rb = path_algebra(["1", "2"], [("x", "1", "1")], [["x", "x"]], 2)
    m = np.zeros((Rb.dimension, E1.dimension), dtype=np.int64)
    m[:, 0] = Rb.one
    m[:, 1] = Rb.element_from_label("x")
    with pytest.raises(fx.NotProjectiveError):
        fx.verify_frobenius(fx.AlgebraEmbedding(E1, Rb, m))
    with pytest.raises(fx.NotAutomorphismError):
        fx.verify_frobenius(fx.AlgebraEmbedding.by_labels(K, E1), alpha=[[0]])
    with pytest.raises(fx.NotAutomorphismError):
        fx.check_automorphism(E1, [[1, 0], [1, 1]])  # not multiplicative: x -> x + e


def test_embedding_checks(K, E1, E2):
    with pytest.raises(ValueError):
        fx.AlgebraEmbedding(E1, E2, np.zeros((3, 2), np.int64))


def test_functors_on_fixtures(e1_ext, e4_ext, K, E1, E2, E4):
    assert fx.restrict(e4_ext, simple(E4, 0)) == simple(E2, 0)
    k = simple(K, 0)
    A = mc.regular_module(E1)
    assert is_isomorphic(fx.induce(e1_ext, k), A).answer == "yes"
    assert is_isomorphic(fx.coinduce(e1_ext, k), A).answer == "yes"
    u = fx.induction_unit(e1_ext, k)
    assert u.is_mono() and u.target.dim == 2


def test_functor_inputs_checked(e4_ext, E4):
    with pytest.raises(mc.AlgebraMismatch):
        fx.induce(e4_ext, simple(E4, 0))


def test_reports(e1_ext, e4_ext):
    for ext in (e1_ext, e4_ext):
        for rep in (fx.check_adjunctions(ext, 3, 0), fx.check_projective_correspondence(ext),
                    fx.check_ind_coind_twist(ext, 3)):
            assert rep.ok, rep.failures
    zero = fx.check_adjunctions(e4_ext, modules_S=[mc.zero_module(e4_ext.sub)], modules_R=[])
    assert zero.ok


def test_induced_projectives(e4_ext, E2, E4):
    I = fx.induce(e4_ext, vertex_projective(E2, 0))
    assert is_isomorphic(I, vertex_projective(E4, 0)).answer == "yes"
    res = fx.restrict(e4_ext, vertex_projective(E4, 1))
    assert mc.is_projective(res) and res.dim == 2 * vertex_projective(E2, 1).dim


@pytest.mark.parametrize("seed", range(3))
def test_exactness_of_functors(e4_ext, E2, E4, seed):
    rng = np.random.default_rng(seed)
    for A in (E2, E4):
        M = mc.random_module(A, rng)
        P, epi = mc.projective_cover(M)
        _, inc = mc.kernel(epi)
        rep = fx.check_exactness(e4_ext, mc.ShortExactSequence(inc, epi))
        assert rep.ok, rep.failures


def test_functors_are_functorial(e4_ext, E2):
    rng = np.random.default_rng(4)
    M = mc.random_module(E2, rng)
    P, epi = mc.projective_cover(M)
    _, inc = mc.kernel(epi)
    for F in (fx.induce_hom, fx.coinduce_hom):
        assert F(e4_ext, epi @ inc).is_zero()
        assert F(e4_ext, mc.identity_hom(M)).is_iso()


def test_pd_transfer_inequalities(e4_ext, E2, E4):
    rng = np.random.default_rng(12)
    for _ in range(5):
        M = mc.random_module(E2, rng)
        a, b = rs.pd(fx.induce(e4_ext, M)), rs.pd(M)
        if a.is_exact and b.is_exact:
            assert a.value <= b.value
        X = mc.random_module(E4, rng)
        a, b = rs.pd(fx.restrict(e4_ext, X)), rs.pd(X)
        if a.is_exact and b.is_exact:
            assert a.value <= b.value


def test_transfer_e1_over_field(e1_ext, K, E1):
    rep = fx.transfer_checks(e1_ext, certify_ig(K), certify_ig(E1), samples=4, seed=0)
    assert rep.ok, rep.failures


def test_transfer_e4_over_e2(e4_ext, E2, E4):
    rep = fx.transfer_checks(e4_ext, certify_ig(E2), certify_ig(E4), samples=6, seed=3)
    assert rep.ok, rep.failures
    S1 = simple(E4, 0)
    rep = fx.transfer_checks(e4_ext, certify_ig(E2), certify_ig(E4), modules=[S1])
    assert ("Gd_R X = pd_S(res X) (sample 0)", True, "1 vs pd = 1") in rep.checks
