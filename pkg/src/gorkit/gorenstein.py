"""Gorenstein homological algebra over an Iwanaga-Gorenstein algebra.

Everything here starts from a :class:`GorensteinCertificate`.  When the
injective dimensions of the projectives could not all be pinned down the
certificate is not ``certified`` and every operation raises
:class:`NotCertifiedError` instead of guessing.

Conventions
-----------
* ``gdim`` is read off from the vanishing of ``Ext^j(M, A)`` for
  ``gdim < j <= d``.
* GP coresolutions come from resolving ``F(G) = Hom_A(G, A)`` over the
  opposite algebra and applying ``F`` again.
* Complete resolutions ``T`` are indexed so that ``T_i = P_i`` for
  ``i >= g`` and ``T_{g-1-j} = Q^j`` for the coresolution terms ``Q^j`` of
  ``G = Omega^g M``.
* Gorenstein Ext uses a special approximation ``0 -> K -> G -> X -> 0``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import Algebra
from .diagrams import baby_comparison, is_exact_at
from .modcat import (
    Module,
    ModuleHom,
    ShortExactSequence,
    cokernel,
    corestrict,
    descend,
    direct_sum,
    factors_through,
    generator_images,
    hom_copair,
    hom_dim,
    hom_from_generator_images,
    hom_space,
    hom_to_regular,
    hom_to_regular_map,
    identity_hom,
    injective_envelope,
    is_isomorphic,
    is_projective,
    kernel,
    nakayama,
    projective_cover,
    pushout,
    regular_dual_unit,
    simple,
    vertex_projective,
    zero_hom,
    zero_module,
)
from .resolve import (
    DEFAULT_CAP,
    HomologicalDimension,
    Resolution,
    cochain_dim,
    cochain_matrix,
    cohomology,
    ext,
    hom_coordinates,
    injective_dimension,
    min_projective_resolution,
    nth_syzygy,
    pd,
)

DEFAULT_WINDOW = 16


class NotCertifiedError(RuntimeError):
    """Raised by every Gorenstein operation on an algebra without an IG certificate."""


class GorensteinConsistencyError(RuntimeError):
    """An internal identity that must hold for certified algebras failed."""


class CoboundaryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GorensteinCertificate:
    algebra: Algebra
    cap: int
    left: tuple  # id_A(A e_v) per vertex
    right: tuple  # id_{A^op}(e_v A) per vertex
    status: str  # "certified" | "unknown"
    flags: tuple = ()

    @property
    def d_left(self) -> int | None:
        return max(h.value for h in self.left) if all(h.is_exact for h in self.left) else None

    @property
    def d_right(self) -> int | None:
        return max(h.value for h in self.right) if all(h.is_exact for h in self.right) else None

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def d(self) -> int:
        if not self.certified:
            raise NotCertifiedError("unavailable: algebra not certified IG within cap")
        return max(self.d_left, self.d_right)

    def regular_id(self, side: str = "left") -> HomologicalDimension:
        """The injective dimension of the regular module on one side (max over vertices)."""
        vals = self.left if side == "left" else self.right
        if any(h.kind == "infinite" for h in vals):
            return next(h for h in vals if h.kind == "infinite")
        lower = [h for h in vals if h.kind == "lower_bound"]
        if lower:
            return max(lower, key=lambda h: h.value)
        return max(vals, key=lambda h: h.value)

    def summary(self) -> str:
        if self.certified:
            return f"certified d={self.d}"
        return f"unknown: id(A) {_rel(self.regular_id('left'))}, id(A_A) {_rel(self.regular_id('right'))} (cap {self.cap})"

    def as_json(self) -> dict:
        return {
            "status": self.status,
            "d": self.d if self.certified else None,
            "d_left": self.d_left,
            "d_right": self.d_right,
            "cap": self.cap,
            "left": [h.as_json() for h in self.left],
            "right": [h.as_json() for h in self.right],
            "flags": list(self.flags),
        }


def _rel(h: HomologicalDimension) -> str:
    s = str(h)
    return s[len(h.label) + 1:]


@functools.lru_cache(maxsize=64)
def certify_ig(A: Algebra, cap: int = DEFAULT_CAP, trials: int = 8, seed: int = 0) -> GorensteinCertificate:
    """Compute ``id`` of every indecomposable projective on both sides."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    Aop = A.opposite()
    left = tuple(injective_dimension(vertex_projective(A, v), cap, trials, seed)
                 for v in range(A.num_vertices))
    right = tuple(injective_dimension(vertex_projective(Aop, v), cap, trials, seed)
                  for v in range(A.num_vertices))
    flags = []
    status = "unknown"
    if all(h.is_exact for h in left + right):
        dl = max(h.value for h in left)
        dr = max(h.value for h in right)
        if dl == dr:
            status = "certified"
        else:
            flags.append(f"asymmetric: d_left={dl} d_right={dr}")
    return GorensteinCertificate(A, cap, left, right, status, tuple(flags))


def require_certified(cert: GorensteinCertificate | None) -> int:
    if cert is None or not cert.certified:
        raise NotCertifiedError("unavailable: algebra not certified IG within cap")
    return cert.d


def _check_algebra(M: Module, cert: GorensteinCertificate):
    d = require_certified(cert)
    if M.algebra is not cert.algebra:
        raise ValueError("module and certificate refer to different algebras")
    return d


# ---------------------------------------------------------------------------
# Gorenstein projectives and G-dimension
# ---------------------------------------------------------------------------


def _ext_against_projectives(M: Module, j: int) -> int:
    A = M.algebra
    return sum(ext(M, vertex_projective(A, v), j).dimension for v in range(A.num_vertices))


def gdim(M: Module, cert: GorensteinCertificate) -> int:
    d = _check_algebra(M, cert)
    g = 0
    for j in range(d, 0, -1):
        if _ext_against_projectives(M, j):
            g = j
            break
    res = min_projective_resolution(M, d + 1)
    if not res.truncated:
        p = len(res.terms) - 1 if not M.is_zero() else 0
        if p != g:
            raise GorensteinConsistencyError(f"Gd = {g} but pd = {p} for a module of finite pd")
    return g


def is_gp(M: Module, cert: GorensteinCertificate) -> bool:
    return gdim(M, cert) == 0


def gp_test_objects(cert: GorensteinCertificate) -> list[Module]:
    """Vertex projectives and the d-th syzygies of simples, all GP."""
    d = require_certified(cert)
    A = cert.algebra
    out = [vertex_projective(A, v) for v in range(A.num_vertices)]
    for v in range(A.num_vertices):
        G = nth_syzygy(simple(A, v), d)
        if not G.is_zero() and not is_projective(G):
            out.append(G)
    return out


# ---------------------------------------------------------------------------
# GP coresolutions through the functor F = Hom_A(-, A)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GpCoresolution:
    """``0 -> G -> Q^0 -> Q^1 -> ...`` with free ``Q^j``."""

    module: Module
    coaugmentation: ModuleHom
    terms: tuple
    differentials: tuple  # Q^j -> Q^{j+1}
    unit: ModuleHom  # G -> F F G, an isomorphism

    def cosyzygy(self, j: int) -> tuple[Module, ModuleHom]:
        """``(G^{j+1}, Q^j ->> G^{j+1})`` as the cokernel of the map into Q^j."""
        into = self.coaugmentation if j == 0 else self.differentials[j - 1]
        return cokernel(into)


def _normalize_free(Q: Module) -> ModuleHom:
    """An isomorphism from a module in free layout onto the projective ``Q``."""
    P, epi = projective_cover(Q)
    if not epi.is_iso():
        raise GorensteinConsistencyError("term of F(resolution) is not projective")
    return epi


def gp_coresolution(G: Module, depth: int, cert: GorensteinCertificate | None = None,
                    check_gp: bool = True) -> GpCoresolution:
    if cert is not None and check_gp:
        _check_algebra(G, cert)
        if not is_gp(G, cert):
            raise ValueError("module is not Gorenstein projective")
    FG = hom_to_regular(G)
    res = min_projective_resolution(FG, depth)
    eta = regular_dual_unit(G)
    if not eta.is_iso():
        raise GorensteinConsistencyError("G -> F F G is not an isomorphism")
    n = len(res.terms)
    raw = [hom_to_regular(res.term(j)) for j in range(n)]
    us = [_normalize_free(Q) for Q in raw]
    uinv = [u.inverse() for u in us]
    coaug = uinv[0] @ hom_to_regular_map(res.augmentation) @ eta if n else zero_hom(G, zero_module(G.algebra))
    diffs = []
    for j in range(n - 1):
        Fd = hom_to_regular_map(res.differential(j + 1))  # F(P'_j) -> F(P'_{j+1})
        diffs.append(uinv[j + 1] @ Fd @ us[j])
    terms = tuple(u.source for u in us)
    if n and not coaug.is_mono():
        raise GorensteinConsistencyError("coaugmentation is not injective")
    chain = [coaug] + diffs
    for a, b in zip(chain, chain[1:]):
        if not is_exact_at(a, b):
            raise GorensteinConsistencyError("GP coresolution is not exact")
    if not res.truncated and n and not chain[-1].is_epi():
        raise GorensteinConsistencyError("GP coresolution does not end surjectively")
    return GpCoresolution(G, coaug, terms, tuple(diffs), eta)


def check_unit_iso(G: Module) -> bool:
    """``F F G ~ G`` through the evaluation map."""
    return regular_dual_unit(G).is_iso()


# ---------------------------------------------------------------------------
# complete resolutions and Tate cohomology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompleteResolution:
    module: Module
    base: int  # g: T_i = P_i for i >= g
    window: int
    terms: dict = field(repr=False)  # i -> free Module
    differentials: dict = field(repr=False)  # i -> T_i -> T_{i-1}
    G: Module | None = None
    witness: tuple | None = field(default=None, repr=False)  # (P_g ->> G, G >-> T_{g-1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lo(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def hi(self) -> int:
        return max(self.terms) if self.terms else 0

    def term(self, i: int) -> Module:
        if self.is_zero:
            return zero_module(self.module.algebra)
        return self.terms[i]

    def differential(self, i: int) -> ModuleHom:
        return self.differentials[i]


def complete_resolution(M: Module, cert: GorensteinCertificate, window: int = DEFAULT_WINDOW,
                        base: int | None = None, verify: bool = True) -> CompleteResolution:
    d = _check_algebra(M, cert)
    if window < max(d, 2):
        raise ValueError(f"window {window} too small to verify (need >= {max(d, 2)})")
    g = gdim(M, cert)
    base = g if base is None else base
    if base < g:
        raise ValueError("base index must be at least the G-dimension")
    res = min_projective_resolution(M, max(base, window + 1) + 1)
    G = res.syzygy(base)
    if G.is_zero() or is_projective(G):
        return CompleteResolution(M, base, window, {}, {}, G)
    co = gp_coresolution(G, base + window + 1, check_gp=False)
    terms, diffs = {}, {}
    for i in range(base, window + 2):
        terms[i] = res.term(i)
    for j, Q in enumerate(co.terms):
        i = base - 1 - j
        if i < -window - 1:
            break
        terms[i] = Q
    lo, hi = min(terms), max(terms)
    for i in range(lo + 1, hi + 1):
        if i > base:
            diffs[i] = res.differential(i)
        elif i == base:
            diffs[i] = co.coaugmentation @ res.covers[base]
        else:
            diffs[i] = co.differentials[base - 1 - i]
    cr = CompleteResolution(M, base, window, terms, diffs, G, (res.covers[base], co.coaugmentation))
    if verify:
        _verify_total_acyclicity(cr, window)
    return cr


def _verify_total_acyclicity(cr: CompleteResolution, window: int):
    A = cr.module.algebra
    p = A.prime
    projectives = [vertex_projective(A, v) for v in range(A.num_vertices)]
    for i in range(-window, window + 1):
        if not (cr.lo < i < cr.hi):
            continue
        din, dout = cr.differentials[i + 1], cr.differentials[i]
        if not is_exact_at(din, dout):
            raise GorensteinConsistencyError(f"complete resolution not exact at index {i}")
        for P in projectives:
            prev = cochain_matrix(dout, P)
            cur = cochain_matrix(din, P)
            h, _ = cohomology(prev, cur, cochain_dim(cr.terms[i], P), p)
            if h:
                raise GorensteinConsistencyError(f"Hom(T, P) not exact at index {i}")


def tate_ext(M: Module, N: Module, i: int, cert: GorensteinCertificate,
             window: int = DEFAULT_WINDOW, base: int | None = None) -> int:
    _check_algebra(M, cert)
    if abs(i) > window - 2:
        raise ValueError(f"degree {i} outside the verified window (|i| <= {window - 2})")
    cr = _complete_resolution_cached(M, cert, window, base)
    if cr.is_zero:
        return 0
    dim, _ = cohomology(cochain_matrix(cr.differentials[i], N), cochain_matrix(cr.differentials[i + 1], N),
                        cochain_dim(cr.terms[i], N), M.p)
    if i > cr.base:
        e = ext(M, N, i).dimension
        if e != dim:
            raise GorensteinConsistencyError(f"Tate Ext^{i} = {dim} differs from Ext^{i} = {e} above Gd")
    return dim


@functools.lru_cache(maxsize=256)
def _complete_resolution_cached(M, cert, window, base):
    return complete_resolution(M, cert, window, base)


# ---------------------------------------------------------------------------
# special approximations and Gorenstein Ext
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GpApproximation:
    """``0 -> K -> G -> X -> 0`` with ``G`` GP and ``pd K = Gd X - 1``."""

    X: Module
    K: Module
    G: Module
    inclusion: ModuleHom
    projection: ModuleHom
    pd_K: int  # -1 for K = 0
    gdim: int

    @property
    def sequence(self) -> ShortExactSequence:
        return ShortExactSequence(self.inclusion, self.projection)


def _approximation(X: Module, cert: GorensteinCertificate) -> GpApproximation:
    g = gdim(X, cert)
    res = min_projective_resolution(X, max(g, 1))
    G = res.syzygy(g)
    A = X.algebra
    K = zero_module(A)
    iota, pi = zero_hom(K, G), identity_hom(G)
    for j in range(g, 0, -1):
        co = gp_coresolution(G, 1, check_gp=False)
        G1, q = co.cosyzygy(0)
        ses_Y = ShortExactSequence(co.coaugmentation, q)
        ses_Z = ShortExactSequence(res.inclusions[j], res.covers[j - 1])
        comp = baby_comparison(ses_Y, ses_Z, pi)
        k, m, e = comp.four_term
        K, qk = cokernel(k)
        iota = descend(m, qk)
        G, pi = m.target, e
    if g >= 1:
        r = pd(K, g + 1)
        if not (r.is_exact and r.value == g - 1):
            raise GorensteinConsistencyError(f"approximation kernel has {r}, expected pd = {g - 1}")
    return GpApproximation(X, K, G, iota, pi, g - 1 if g >= 1 else -1, g)


@functools.lru_cache(maxsize=512)
def _approximation_cached(X, cert):
    return _approximation(X, cert)


def special_approximation(X: Module, cert: GorensteinCertificate) -> GpApproximation:
    _check_algebra(X, cert)
    return _approximation_cached(X, cert)


def _restriction_matrix(approx: GpApproximation, Y: Module) -> tuple[np.ndarray, object]:
    """``Hom(G, Y) -> Hom(K, Y)`` in the HomSpace bases."""
    HG, HK = hom_space(approx.G, Y), hom_space(approx.K, Y)
    cols = [HK.coordinates(h @ approx.inclusion) for h in HG.basis]
    return (np.stack(cols, axis=1) if cols else linalg.zeros(HK.dim, 0)), HK


def gorenstein_ext(X: Module, Y: Module, k: int, cert: GorensteinCertificate) -> int:
    _check_algebra(X, cert)
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k == 0:
        return hom_dim(X, Y)
    approx = special_approximation(X, cert)
    if k == 1:
        R, HK = _restriction_matrix(approx, Y)
        val = HK.dim - linalg.rank(R, X.p)
    else:
        val = ext(approx.K, Y, k - 1).dimension
    if k > approx.gdim and val:
        raise GorensteinConsistencyError(f"GE^{k} nonzero above Gd = {approx.gdim}")
    return val


def strict_gp_resolution(X: Module, cert: GorensteinCertificate, length: int):
    """``... -> P^K_1 -> P^K_0 -> G -> X`` from the special approximation.

    Returns ``(approx, terms, differentials)`` with ``terms[0] = G`` and
    ``differentials[j]: terms[j] -> terms[j-1]`` for ``j >= 1``.
    """
    approx = special_approximation(X, cert)
    resK = min_projective_resolution(approx.K, length)
    terms = [approx.G] + [resK.term(j) for j in range(length)]
    diffs = {1: approx.inclusion @ resK.augmentation}
    for j in range(2, length + 1):
        diffs[j] = resK.differential(j - 1)
    return approx, terms, diffs


def gorenstein_ext_direct(X: Module, Y: Module, k: int, cert: GorensteinCertificate) -> int:
    """Cohomology of ``Hom(G_*, Y)`` over the strict GP resolution."""
    _check_algebra(X, cert)
    if k < 0:
        raise ValueError("degree must be >= 0")
    approx, terms, diffs = strict_gp_resolution(X, cert, k + 1)
    p = X.p
    HG = hom_space(approx.G, Y)

    def coboundary(j):  # Hom(G_j, Y) -> Hom(G_{j+1}, Y)
        if j == 0:
            cols = [hom_coordinates(h @ diffs[1]) for h in HG.basis]
            return np.stack(cols, axis=1) if cols else linalg.zeros(cochain_dim(terms[1], Y), 0)
        return cochain_matrix(diffs[j + 1], Y)

    n = HG.dim if k == 0 else cochain_dim(terms[k], Y)
    prev = coboundary(k - 1) if k >= 1 else linalg.zeros(n, 0)
    return cohomology(prev, coboundary(k), n, p)[0]


# ---------------------------------------------------------------------------
# GE^1 classes as extensions
# ---------------------------------------------------------------------------


def ge1_classes(X: Module, Y: Module, cert: GorensteinCertificate) -> list[ModuleHom]:
    """Representatives ``K -> Y`` of a basis of ``GE^1(X, Y)``."""
    _check_algebra(X, cert)
    approx = special_approximation(X, cert)
    R, HK = _restriction_matrix(approx, Y)
    _, reps = cohomology(R, linalg.zeros(0, HK.dim), HK.dim, X.p)
    return [HK.combine(reps[:, c]) for c in range(reps.shape[1])]


@dataclass(frozen=True)
class RealizedExtension:
    sequence: ShortExactSequence
    split: bool
    gp_acyclic: bool
    test_objects: int


def realize_ge1(X: Module, Y: Module, cocycle: ModuleHom, cert: GorensteinCertificate) -> RealizedExtension:
    """Push the approximation sequence out along ``cocycle: K -> Y``."""
    _check_algebra(X, cert)
    approx = special_approximation(X, cert)
    if cocycle.source != approx.K or cocycle.target != Y:
        raise ValueError("cocycle must be a morphism K -> Y for the special approximation of X")
    if factors_through(cocycle, approx.inclusion, side="pre") is not None:
        raise CoboundaryError("coboundary: the cocycle factors through G")
    M, g_to_M, y_to_M = pushout(approx.inclusion, cocycle)
    S, _, projs = direct_sum([approx.G, Y])
    # M is the cokernel of K -> G + Y; the projection to X kills Y
    q = hom_copair(g_to_M, y_to_M)
    to_X = descend(approx.projection @ projs[0], q)
    seq = ShortExactSequence(y_to_M, to_X)
    split = factors_through(identity_hom(Y), y_to_M, side="pre") is not None
    objs = gp_test_objects(cert)
    acyclic = all(hom_dim(T, M) == hom_dim(T, Y) + hom_dim(T, X) for T in objs)
    return RealizedExtension(seq, split, acyclic, len(objs))


# ---------------------------------------------------------------------------
# the long exact sequence relating GE, Ext and Tate Ext
# ---------------------------------------------------------------------------


def _cover(res: Resolution, j: int) -> ModuleHom:
    if j < len(res.covers):
        return res.covers[j]
    Z = zero_module(res.module.algebra)
    return zero_hom(Z, res.syzygy(j))


def _inclusion(res: Resolution, j: int) -> ModuleHom:
    if j < len(res.inclusions):
        return res.inclusions[j]
    return zero_hom(zero_module(res.module.algebra), res.term(j - 1))


def horseshoe_resolution(approx: GpApproximation, depth: int):
    """Resolution of ``G`` stacked from the minimal resolutions of ``K`` and ``X``.

    Returns ``(resK, resX, terms, differentials)``; ``terms[j]`` is the free
    module ``P^K_j + P^X_j`` (generators of K first).
    """
    resK = min_projective_resolution(approx.K, depth + 1)
    resX = min_projective_resolution(approx.X, depth + 1)
    p = approx.X.p
    iK, pX = approx.inclusion, approx.projection
    terms, eps, incG = [], [], []
    for j in range(depth + 2):
        PK, PX = resK.term(j), resX.term(j)
        eK, eX = _cover(resK, j), _cover(resX, j)
        Gj = pX.source
        lifts = []
        for v, y in zip(PX.generators, generator_images(eX)):
            x = linalg.solve(pX.blocks[v], y, p) if Gj.dims[v] else np.zeros(0, dtype=np.int64)
            if x is None:
                raise GorensteinConsistencyError("horseshoe lift failed")
            lifts.append(x)
        s = hom_from_generator_images(PX, Gj, lifts)
        PG, incs, projs = direct_sum([PK, PX])
        eG = iK @ eK @ projs[0] + s @ projs[1]
        if not eG.is_epi():
            raise GorensteinConsistencyError("horseshoe augmentation is not onto")
        Gn, inc = kernel(eG)
        iK = corestrict(incs[0] @ _inclusion(resK, j + 1), inc)
        pX = corestrict(projs[1] @ inc, _inclusion(resX, j + 1))
        terms.append(PG)
        eps.append(eG)
        incG.append(inc)
    diffs = {j: incG[j - 1] @ eps[j] for j in range(1, depth + 2)}
    return resK, resX, terms, diffs


def _induced(f: np.ndarray, src_reps: np.ndarray, tgt_B: np.ndarray, tgt_reps: np.ndarray, p: int) -> np.ndarray:
    """Matrix of a cochain map on cohomology, in the chosen representatives."""
    if src_reps.shape[1] == 0 or tgt_reps.shape[1] == 0:
        return linalg.zeros(tgt_reps.shape[1], src_reps.shape[1])
    imgs = linalg.matmul(f, src_reps, p)
    x = linalg.solve(np.hstack([tgt_B, tgt_reps]), imgs, p)
    if x is None:
        raise GorensteinConsistencyError("cochain map does not preserve cocycles")
    return x[tgt_B.shape[1]:]


@dataclass(frozen=True)
class AMReport:
    rows: tuple  # (k, GE^k, Ext^k, Tate Ext^k)
    les_dims: tuple
    les_ranks: tuple
    exact: bool
    failures: tuple
    window: int

    def lines(self) -> list[str]:
        out = [f"k={k}: GE={ge} Ext={ex} Tate={te}" for k, ge, ex, te in self.rows]
        out.append(f"exact={'yes' if self.exact else 'no'} (window {self.window})")
        out.extend(f"failure: {f}" for f in self.failures)
        return out


def am_sequence_check(X: Module, Y: Module, cert: GorensteinCertificate,
                      window: int = DEFAULT_WINDOW) -> AMReport:
    d = _check_algebra(X, cert)
    top = d + 2
    p = X.p
    approx = special_approximation(X, cert)
    resK, resX, termsG, diffsG = horseshoe_resolution(approx, top)
    failures = []

    def complex_data(terms, diff):
        n = [cochain_dim(terms(j), Y) for j in range(top + 2)]
        delta = [cochain_matrix(diff(j + 1), Y) for j in range(top + 1)]
        H = []
        for j in range(top + 1):
            prev = delta[j - 1] if j else linalg.zeros(n[0], 0)
            B = linalg.image_basis(prev, p) if prev.size else linalg.zeros(n[j], 0)
            _, reps = cohomology(prev, delta[j], n[j], p)
            H.append((B, reps))
        return n, delta, H

    nK, dK, HK = complex_data(resK.term, resK.differential)
    nX, dX, HX = complex_data(resX.term, resX.differential)
    nG, dG, HG = complex_data(lambda j: termsG[j], lambda j: diffsG[j])

    spaces, maps = [], []
    for k in range(top + 1):
        kx, kk = nX[k], nK[k]
        incl = np.vstack([linalg.zeros(kk, kx), linalg.identity(kx)])  # Hom(P^X) -> Hom(P^G)
        restr = np.hstack([linalg.identity(kk), linalg.zeros(kk, kx)])  # Hom(P^G) -> Hom(P^K)
        conn = dG[k][nK[k + 1]:, :kk]  # X-block of the coboundary on K-cochains
        a = _induced(incl, HX[k][1], *HG[k], p)
        b = _induced(restr, HG[k][1], *HK[k], p)
        spaces += [HX[k][1].shape[1], HG[k][1].shape[1], HK[k][1].shape[1]]
        maps += [a, b]
        if k < top:
            maps.append(_induced(conn, HK[k][1], *HX[k + 1], p))
    ranks = [linalg.rank(m, p) if m.size else 0 for m in maps]
    # exactness of 0 -> H^0(X) -> H^0(G) -> H^0(K) -> H^1(X) -> ...
    if ranks[0] != spaces[0]:
        failures.append("H^0(X) -> H^0(G) not injective")
    for t in range(1, len(maps)):
        comp = linalg.matmul(maps[t], maps[t - 1], p) if maps[t].size and maps[t - 1].size else None
        if comp is not None and comp.any():
            failures.append(f"composite nonzero at LES position {t}")
        if ranks[t - 1] + ranks[t] != spaces[t]:
            failures.append(f"rank identity fails at LES position {t}")

    rows = []
    for k in range(1, top + 1):
        ge = gorenstein_ext(X, Y, k, cert)
        ex = ext(X, Y, k).dimension
        te = tate_ext(X, Y, k, cert, window)
        if k == 1:
            expect_ge = spaces[2] - ranks[1]
        else:
            expect_ge = spaces[3 * (k - 1) + 2]
        if ge != expect_ge:
            failures.append(f"GE^{k} = {ge} but the sequence predicts {expect_ge}")
        if ex != spaces[3 * k]:
            failures.append(f"Ext^{k} = {ex} disagrees with the stacked resolution ({spaces[3 * k]})")
        if te != spaces[3 * k + 1]:
            failures.append(f"Tate Ext^{k} = {te} but Ext^{k}(G, Y) = {spaces[3 * k + 1]}")
        rows.append((k, ge, ex, te))
    return AMReport(tuple(rows), tuple(spaces), tuple(ranks), not failures, tuple(failures), window)


# ---------------------------------------------------------------------------
# Nakayama functor and finitistic dimension
# ---------------------------------------------------------------------------


def nakayama_check(A: Algebra, trials: int = 8, seed: int = 0) -> list[tuple[int, str]]:
    """For each vertex, is ``nu(P_v)`` isomorphic to the injective envelope of its top?"""
    out = []
    for v in range(A.num_vertices):
        I, _ = injective_envelope(simple(A, v))
        out.append((v, is_isomorphic(nakayama(vertex_projective(A, v)), I, trials, seed).answer))
    return out


@dataclass(frozen=True)
class FindimReport:
    d: int
    finite: tuple  # (name, pd)
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def findim_check(A: Algebra, cert: GorensteinCertificate, corpus) -> FindimReport:
    d = require_certified(cert)
    finite, bad = [], []
    items = corpus.items() if hasattr(corpus, "items") else enumerate(corpus)
    for name, M in items:
        r = pd(M, cert.cap)
        if r.is_exact:
            finite.append((str(name), r.value))
            if r.value > d:
                bad.append((str(name), r.value))
    return FindimReport(d, tuple(finite), tuple(bad))
