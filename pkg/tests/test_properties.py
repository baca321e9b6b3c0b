"""Seeded property suites over the certified fixtures.

Each ``check_*`` function takes a seed and returns ``(ok, detail)``; the
tests below run each check on ``CASES`` seeds and the acceptance suite
reuses the same functions.
"""

import numpy as np
import pytest

from gorkit import fixtures
from gorkit import frobext as fx
from gorkit import gorenstein as gr
from gorkit import linalg
from gorkit import modcat as mc
from gorkit import resolve as rs

CASES = 50
CERTIFIED = ("e1", "e2", "e4", "e5")


def _setup(seed: int):
    A = fixtures.by_name(CERTIFIED[seed % len(CERTIFIED)])
    return A, gr.certify_ig(A), np.random.default_rng(seed)


def random_gp(A, cert, rng):
    """``Omega^d`` of a random module, plus a random projective summand."""
    G = rs.nth_syzygy(mc.random_module(A, rng), cert.d)
    v = int(rng.integers(0, A.num_vertices))
    return mc.direct_sum_module(G, mc.vertex_projective(A, v)) if rng.random() < 0.5 else G


def random_extension(N, M, rng):
    """Middle term of a random class in ``Ext^1(N, M)`` (``M + N`` if it vanishes)."""
    e = rs.ext(N, M, 1)
    if not e.dimension:
        return mc.direct_sum_module(M, N)
    res = rs.min_projective_resolution(N, 2)
    coeffs = linalg.random_matrix(1, e.dimension, rng, M.p)[0]
    c = e.cocycle_basis[0].scale(int(coeffs[0]))
    for cc, b in zip(coeffs[1:], e.cocycle_basis[1:]):
        c = c + b.scale(int(cc))
    E, _, _ = mc.pushout(res.inclusions[1], mc.descend(c, res.covers[1]))
    return E


def check_resolving(seed: int):
    """Projectives are GP; GP is closed under extensions and kernels of epis."""
    A, cert, rng = _setup(seed)
    v = int(rng.integers(0, A.num_vertices))
    if not gr.is_gp(mc.vertex_projective(A, v), cert):
        return False, "projective not GP"
    G1, G2 = random_gp(A, cert, rng), random_gp(A, cert, rng)
    E = random_extension(G2, G1, rng)
    if not gr.is_gp(E, cert):
        return False, f"extension of GP modules not GP (dims {E.dims})"
    # an epimorphism G1 + P -> G2 built from a random map and a projective cover
    P, cover = mc.projective_cover(G2)
    f = mc.hom_space(G1, G2).random(rng)
    epi = mc.hom_copair(f, cover)
    K, _ = mc.kernel(epi)
    if not gr.is_gp(K, cert):
        return False, f"kernel of GP epi not GP (dims {K.dims})"
    return True, ""


def check_gdim_sum(seed: int):
    A, cert, rng = _setup(seed)
    M, N = mc.random_module(A, rng), mc.random_module(A, rng)
    a, b = gr.gdim(M, cert), gr.gdim(N, cert)
    s = gr.gdim(mc.direct_sum_module(M, N), cert)
    return s == max(a, b), f"Gd(M+N) = {s}, Gd M = {a}, Gd N = {b}"


def check_gdim_pd(seed: int, draws: int = 25):
    """Draw until a module of finite pd turns up, then compare Gd with pd."""
    A, cert, rng = _setup(seed)
    for _ in range(draws):
        M = mc.random_module(A, rng)
        h = rs.pd(M)
        if h.is_exact:
            g = gr.gdim(M, cert)
            return g == h.value, f"Gd = {g}, pd = {h.value}"
        if gr.gdim(M, cert) > cert.d:
            return False, f"Gd > d = {cert.d} (dims {M.dims})"
    return False, f"no module of finite pd in {draws} draws"


def check_findim(seed: int):
    A, cert, rng = _setup(seed)
    M = mc.random_module(A, rng)
    h, i = rs.pd(M), rs.injective_dimension(M)
    ok = (not h.is_exact or h.value <= cert.d) and (not i.is_exact or i.value <= cert.d)
    return ok, f"pd {h}, id {i}, d = {cert.d}"


def _extension_for(seed: int):
    if seed % 2:
        return fx.verify_frobenius(fixtures.e4_extension())
    K, E1 = fixtures.field(), fixtures.e1()
    return fx.verify_frobenius(fx.AlgebraEmbedding.by_labels(K, E1))


def check_unit_counit(seed: int):
    ext = _extension_for(seed)
    M = mc.random_module(ext.sub, np.random.default_rng(seed))
    u, c = fx.induction_unit(ext, M), fx.coinduction_counit(ext, M)
    return u.is_mono() and c.is_epi(), f"unit mono {u.is_mono()}, counit epi {c.is_epi()}"


def check_adjunction_dims(seed: int):
    ext = _extension_for(seed)
    rng = np.random.default_rng(seed)
    M, X = mc.random_module(ext.sub, rng), mc.random_module(ext.big, rng)
    RX = fx.restrict(ext, X)
    a, b = mc.hom_dim(fx.induce(ext, M), X), mc.hom_dim(M, RX)
    c, d = mc.hom_dim(X, fx.coinduce(ext, M)), mc.hom_dim(RX, M)
    return a == b and c == d, f"{a} vs {b}, {c} vs {d}"


def check_duality_on_gp(seed: int):
    A, cert, rng = _setup(seed)
    G = random_gp(A, cert, rng)
    return gr.check_unit_iso(G), f"dims {G.dims}"


SUITES = {
    "resolving closure": check_resolving,
    "Gd of a direct sum is the max": check_gdim_sum,
    "Gd = pd when pd is finite": check_gdim_pd,
    "finite pd and id are at most d": check_findim,
    "unit mono and counit epi": check_unit_counit,
    "adjunction dimensions": check_adjunction_dims,
    "F F G = G on GP modules": check_duality_on_gp,
}


def run_suite(check, cases: int = CASES) -> list:
    """Seeds on which ``check`` fails, with details."""
    out = []
    for seed in range(cases):
        ok, detail = check(seed)
        if not ok:
            out.append((seed, detail))
    return out


@pytest.mark.parametrize("name", list(SUITES))
def test_property_suite(name):
    assert run_suite(SUITES[name]) == []
