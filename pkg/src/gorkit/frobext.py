"""Frobenius extensions ``S -> R`` of finite-dimensional algebras.

An extension is Frobenius (twisted by an automorphism ``alpha`` of ``S``)
when ``R`` is finitely generated projective as a left ``S``-module and
``R ~ Hom_S(R, alpha S)`` as ``(R, S)``-bimodules.  Such a bimodule map is
determined by ``tau = phi(1)``, a linear map ``R -> S`` with

    tau(s c) = alpha(s) tau(c)      and      tau(c s) = tau(c) s,

so the search space is a kernel computation.  The functors restriction,
induction ``R (x)_S -`` and coinduction ``Hom_S(R, -)`` are built on total
spaces and converted back to quiver representations by splitting along the
vertex idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import Algebra, AlgebraPresentation, Quiver, Relation, compile_presentation
from .diagrams import is_exact_at
from .modcat import (
    AlgebraMismatch,
    Module,
    ModuleHom,
    ShortExactSequence,
    hom_dim,
    is_isomorphic,
    is_projective,
    is_summand,
    random_module,
    simple,
    vertex_projective,
)
from .resolve import injective_dimension, pd


class NotProjectiveError(ValueError):
    """``R`` is not projective as a left module over the subalgebra."""


class NotAutomorphismError(ValueError):
    pass


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------


def _is_algebra_map(src: Algebra, tgt: Algebra, m: np.ndarray) -> bool:
    p = tgt.prime
    if not np.array_equal(linalg.matmul(m, src.one, p), tgt.one):
        return False
    # m(b_i b_j) = m(b_i) m(b_j) on all basis pairs
    lhs = np.mod(np.einsum("ijk,lk->ijl", src.mult, m), p)
    rhs = np.mod(np.einsum("ai,bj,abl->ijl", m, m, tgt.mult), p)
    return bool(np.array_equal(lhs, rhs))


@dataclass(frozen=True)
class AlgebraEmbedding:
    """An injective unital algebra map ``S -> R``; columns are images of S's basis."""

    sub: Algebra
    big: Algebra
    map: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.mod(np.asarray(self.map, dtype=np.int64), self.big.prime)
        if m.shape != (self.big.dimension, self.sub.dimension):
            raise ValueError(f"embedding matrix must be {self.big.dimension}x{self.sub.dimension}")
        object.__setattr__(self, "map", m)
        if linalg.rank(m, self.big.prime) != self.sub.dimension:
            raise ValueError("embedding is not injective")
        if not _is_algebra_map(self.sub, self.big, m):
            raise ValueError("embedding is not a unital algebra homomorphism")

    def __call__(self, x) -> np.ndarray:
        return linalg.matmul(self.map, np.asarray(x, dtype=np.int64), self.big.prime)

    @classmethod
    def by_labels(cls, sub: Algebra, big: Algebra) -> "AlgebraEmbedding":
        """Send each basis path of ``sub`` to the path with the same label in ``big``."""
        cols = [big.element_from_label(sub.label(i)) for i in range(sub.dimension)]
        return cls(sub, big, np.stack(cols, axis=1))


def check_automorphism(S: Algebra, alpha) -> np.ndarray:
    a = np.mod(np.asarray(alpha, dtype=np.int64), S.prime)
    if a.shape != (S.dimension, S.dimension) or not linalg.is_invertible(a, S.prime):
        raise NotAutomorphismError("alpha is not an invertible linear map of S")
    if not _is_algebra_map(S, S, a):
        raise NotAutomorphismError("alpha is not a unital algebra homomorphism")
    return a


# ---------------------------------------------------------------------------
# modules from total-space actions
# ---------------------------------------------------------------------------


def module_from_action(A: Algebra, act, n: int):
    """Turn a left action on ``k^n`` into a representation.

    ``act(i)`` is the ``n x n`` matrix of the ``i``-th basis element.
    Returns ``(M, B)`` where the columns of ``B`` express the module's total
    basis (vertex blocks in order) in the ambient coordinates.
    """
    p = A.prime
    blocks = [linalg.image_basis(act(A.idempotents[v]), p) if n else linalg.zeros(0, 0)
              for v in range(A.num_vertices)]
    B = np.hstack(blocks) if n else linalg.zeros(0, 0)
    if B.shape[1] != n:
        raise ValueError("idempotents do not decompose the space (action not unital?)")
    lefts = [linalg.left_inverse(b, p) for b in blocks]
    q = A.quiver
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        L = act_element(A, act, A.arrow_elements[a], n)
        acts.append(linalg.matmul(linalg.matmul(lefts[j], L, p), blocks[i], p))
    return Module(A, [b.shape[1] for b in blocks], acts), B


def act_element(A: Algebra, act, x, n: int) -> np.ndarray:
    out = linalg.zeros(n, n)
    for i in np.flatnonzero(x):
        out = out + int(x[i]) * act(int(i))
    return np.mod(out, A.prime)


def hom_from_total(M: Module, N: Module, T: np.ndarray) -> ModuleHom:
    """Split a total matrix into vertex blocks (it must preserve the grading)."""
    om, on = M.offsets, N.offsets
    blocks = []
    for v in range(len(M.dims)):
        blocks.append(T[on[v]:on[v] + N.dims[v], om[v]:om[v] + M.dims[v]])
    total = np.zeros_like(T)
    for v, b in enumerate(blocks):
        total[on[v]:on[v] + N.dims[v], om[v]:om[v] + M.dims[v]] = b
    if not np.array_equal(total, np.mod(T, M.p)):
        raise ValueError("total matrix mixes vertices")
    return ModuleHom(M, N, blocks)


# ---------------------------------------------------------------------------
# Frobenius extensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusExtension:
    embedding: AlgebraEmbedding
    alpha: np.ndarray = field(repr=False)
    tau: np.ndarray = field(repr=False)  # dim S x dim R, tau = phi(1)
    iso_witness: np.ndarray = field(repr=False)  # a -> (b -> tau(b a)), flattened

    @property
    def sub(self) -> Algebra:
        return self.embedding.sub

    @property
    def big(self) -> Algebra:
        return self.embedding.big

    def sigma(self, a, b) -> np.ndarray:
        """The pairing ``sigma(a, b) = tau(a b)`` with values in S."""
        R = self.big
        return linalg.matmul(self.tau, R.multiply(a, b), R.prime)

    def phi(self, a) -> np.ndarray:
        """``phi(a)``: the S-linear map ``b -> tau(b a)`` as a dim S x dim R matrix."""
        R = self.big
        return linalg.matmul(self.tau, R.right_mult(a), R.prime)


def regular_over_sub(emb: AlgebraEmbedding) -> Module:
    """``R`` as a left ``S``-module."""
    R = emb.big
    return module_from_action(emb.sub, lambda i: R.left_mult(emb.map[:, i]), R.dimension)[0]


def twisted_regular(S: Algebra, alpha) -> Module:
    """``alpha S``: S with ``s . x = alpha(s) x``."""
    a = np.asarray(alpha)
    return module_from_action(S, lambda i: S.left_mult(a[:, i]), S.dimension)[0]


def bimodule_maps(emb: AlgebraEmbedding, alpha) -> np.ndarray:
    """Basis (columns, flattened row-major) of all ``tau: R -> S`` of bimodule type."""
    S, R = emb.sub, emb.big
    p = R.prime
    ns, nr = S.dimension, R.dimension
    eqs = []
    for i in range(ns):
        s = np.eye(ns, dtype=np.int64)[i]
        Li = R.left_mult(emb(s))
        Ri = R.right_mult(emb(s))
        La = S.left_mult(linalg.matmul(alpha, s, p))
        Rs = S.right_mult(s)
        # T L - La T = 0 and T R - Rs T = 0 with T flattened row-major
        eqs.append(np.kron(np.eye(ns, dtype=np.int64), Li.T) - np.kron(La, np.eye(nr, dtype=np.int64)))
        eqs.append(np.kron(np.eye(ns, dtype=np.int64), Ri.T) - np.kron(Rs, np.eye(nr, dtype=np.int64)))
    return linalg.kernel_basis(np.mod(np.vstack(eqs), p), p)


def _phi_matrix(R: Algebra, tau: np.ndarray) -> np.ndarray:
    cols = [linalg.matmul(tau, R.right_mult(np.eye(R.dimension, dtype=np.int64)[j]), R.prime).ravel()
            for j in range(R.dimension)]
    return np.stack(cols, axis=1)


def verify_frobenius(emb: AlgebraEmbedding, alpha=None, trials: int = 8, seed: int = 0) -> FrobeniusExtension | None:
    """Return a verified extension, or ``None`` when no invertible bimodule map was found.

    ``None`` is a probabilistic negative: every basis element and ``trials``
    random combinations of the bimodule-map space were tested.
    """
    S, R = emb.sub, emb.big
    p = R.prime
    alpha = np.eye(S.dimension, dtype=np.int64) if alpha is None else alpha
    alpha = check_automorphism(S, alpha)
    RS = regular_over_sub(emb)
    if not is_projective(RS):
        raise NotProjectiveError("R is not projective as a left S-module")
    target_dim = hom_dim(RS, twisted_regular(S, alpha))
    Tb = bimodule_maps(emb, alpha)
    if target_dim != R.dimension or Tb.shape[1] == 0:
        return None
    shape = (S.dimension, R.dimension)
    candidates = [Tb[:, c] for c in range(Tb.shape[1])]
    rng = np.random.default_rng(seed)
    candidates += [linalg.matmul(Tb, linalg.random_matrix(Tb.shape[1], 1, rng, p)[:, 0], p) for _ in range(trials)]
    for t in candidates:
        tau = t.reshape(shape)
        Phi = _phi_matrix(R, tau)
        if linalg.rank(Phi, p) == R.dimension:
            return FrobeniusExtension(emb, alpha, tau, Phi)
    return None


# ---------------------------------------------------------------------------
# restriction, induction, coinduction, twisting
# ---------------------------------------------------------------------------


def _require(M: Module, A: Algebra, what: str):
    if M.algebra is not A:
        raise AlgebraMismatch(f"{what} expects a module over {A!r}")


def restrict_with_basis(emb: AlgebraEmbedding, X: Module):
    _require(X, emb.big, "restriction")
    return module_from_action(emb.sub, lambda i: X.element_action(emb.map[:, i]), X.dim)


def restrict(ext, X: Module) -> Module:
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    return restrict_with_basis(emb, X)[0]


def twist_by_alpha(ext: FrobeniusExtension, M: Module) -> Module:
    """``alpha M``: the same space with ``s . m = alpha(s) m``."""
    a = ext.alpha
    return module_from_action(M.algebra, lambda i: M.element_action(a[:, i]), M.dim)[0]


@dataclass(frozen=True)
class _Induced:
    module: Module
    quotient: np.ndarray  # R (x)_k M -> ambient quotient coordinates
    basis: np.ndarray  # module total -> ambient quotient coordinates


def _induce(emb: AlgebraEmbedding, M: Module) -> _Induced:
    _require(M, emb.sub, "induction")
    S, R = emb.sub, emb.big
    p = R.prime
    nr, m = R.dimension, M.dim
    if m == 0:
        Z, B = module_from_action(R, lambda i: linalg.zeros(0, 0), 0)
        return _Induced(Z, linalg.zeros(0, 0), B)
    rel = []
    for i in range(S.dimension):
        s = np.eye(S.dimension, dtype=np.int64)[i]
        # r s (x) m - r (x) s m, with R (x) M flattened as r-major
        rel.append(np.kron(R.right_mult(emb(s)), np.eye(m, dtype=np.int64))
                   - np.kron(np.eye(nr, dtype=np.int64), M.element_action(s)))
    q = linalg.cokernel_map(np.mod(np.hstack(rel), p), p)
    qi = linalg.right_inverse(q, p)
    cache = {}

    def act(i):
        if i not in cache:
            L = np.kron(R.left_mult(np.eye(nr, dtype=np.int64)[i]), np.eye(m, dtype=np.int64))
            cache[i] = linalg.matmul(linalg.matmul(q, L, p), qi, p)
        return cache[i]

    mod, B = module_from_action(R, act, q.shape[0])
    return _Induced(mod, q, B)


def induce(ext, M: Module) -> Module:
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    return _induce(emb, M).module


@dataclass(frozen=True)
class _Coinduced:
    module: Module
    space: np.ndarray  # columns: flattened S-linear maps R -> M (dim M x dim R)
    basis: np.ndarray


def _coinduce(emb: AlgebraEmbedding, M: Module) -> _Coinduced:
    _require(M, emb.sub, "coinduction")
    S, R = emb.sub, emb.big
    p = R.prime
    nr, m = R.dimension, M.dim
    if m == 0:
        Z, B = module_from_action(R, lambda i: linalg.zeros(0, 0), 0)
        return _Coinduced(Z, linalg.zeros(0, 0), B)
    eqs = []
    for i in range(S.dimension):
        s = np.eye(S.dimension, dtype=np.int64)[i]
        # f(s r) = s f(r):  F L_s - M_s F = 0
        eqs.append(np.kron(np.eye(m, dtype=np.int64), R.left_mult(emb(s)).T)
                   - np.kron(M.element_action(s), np.eye(nr, dtype=np.int64)))
    C = linalg.kernel_basis(np.mod(np.vstack(eqs), p), p)
    Cl = linalg.left_inverse(C, p)
    cache = {}

    def act(i):  # (r f)(b) = f(b r)
        if i not in cache:
            Rr = R.right_mult(np.eye(nr, dtype=np.int64)[i])
            L = np.kron(np.eye(m, dtype=np.int64), Rr.T)
            cache[i] = linalg.matmul(linalg.matmul(Cl, L, p), C, p)
        return cache[i]

    mod, B = module_from_action(R, act, C.shape[1])
    return _Coinduced(mod, C, B)


def coinduce(ext, M: Module) -> Module:
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    return _coinduce(emb, M).module


def _total(f: ModuleHom) -> np.ndarray:
    T = linalg.zeros(f.target.dim, f.source.dim)
    om, on = f.source.offsets, f.target.offsets
    for v, b in enumerate(f.blocks):
        T[on[v]:on[v] + b.shape[0], om[v]:om[v] + b.shape[1]] = b
    return T


def _emb(ext) -> AlgebraEmbedding:
    return ext.embedding if isinstance(ext, FrobeniusExtension) else ext


def restrict_hom(ext, f: ModuleHom) -> ModuleHom:
    emb = _emb(ext)
    p = emb.big.prime
    X, BX = restrict_with_basis(emb, f.source)
    Y, BY = restrict_with_basis(emb, f.target)
    if X.dim == 0 or Y.dim == 0:
        return hom_from_total(X, Y, linalg.zeros(Y.dim, X.dim))
    return hom_from_total(X, Y, linalg.solve(BY, linalg.matmul(_total(f), BX, p), p))


def induce_hom(ext, f: ModuleHom) -> ModuleHom:
    """``R (x) f``."""
    emb = _emb(ext)
    R = emb.big
    p = R.prime
    a, b = _induce(emb, f.source), _induce(emb, f.target)
    if a.module.dim == 0 or b.module.dim == 0:
        return hom_from_total(a.module, b.module, linalg.zeros(b.module.dim, a.module.dim))
    lift = linalg.matmul(linalg.right_inverse(a.quotient, p), a.basis, p)
    mapped = linalg.matmul(np.kron(np.eye(R.dimension, dtype=np.int64), _total(f)), lift, p)
    return hom_from_total(a.module, b.module, linalg.solve(b.basis, linalg.matmul(b.quotient, mapped, p), p))


def coinduce_hom(ext, f: ModuleHom) -> ModuleHom:
    """``Hom_S(R, f)``: post-composition with ``f``."""
    emb = _emb(ext)
    R = emb.big
    p = R.prime
    a, b = _coinduce(emb, f.source), _coinduce(emb, f.target)
    if a.module.dim == 0 or b.module.dim == 0:
        return hom_from_total(a.module, b.module, linalg.zeros(b.module.dim, a.module.dim))
    maps = linalg.matmul(a.space, a.basis, p)  # flattened F, row-major dim M x dim R
    composed = linalg.matmul(np.kron(_total(f), np.eye(R.dimension, dtype=np.int64)), maps, p)
    coords = linalg.solve(b.space, composed, p)
    return hom_from_total(a.module, b.module, linalg.solve(b.basis, coords, p))


def induction_unit(ext, M: Module) -> ModuleHom:
    """``M -> restrict(induce M)``, ``m -> 1 (x) m``."""
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    R = emb.big
    p = R.prime
    ind = _induce(emb, M)
    res, Bres = restrict_with_basis(emb, ind.module)
    if M.dim == 0:
        return hom_from_total(M, res, linalg.zeros(res.dim, 0))
    # 1 (x) m in R (x) M, then to quotient coordinates, then to the module bases
    one = np.kron(R.one.reshape(-1, 1), np.eye(M.dim, dtype=np.int64))
    amb = linalg.matmul(ind.quotient, one, p)
    tot = linalg.solve(ind.basis, amb, p)
    T = linalg.solve(Bres, tot, p)
    return hom_from_total(M, res, T)


def coinduction_counit(ext, N: Module) -> ModuleHom:
    """``restrict(coinduce N) -> N``, ``f -> f(1)``."""
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    R = emb.big
    p = R.prime
    co = _coinduce(emb, N)
    res, Bres = restrict_with_basis(emb, co.module)
    if N.dim == 0:
        return hom_from_total(res, N, linalg.zeros(0, res.dim))
    # ambient coordinate c -> flattened F = C c -> F @ 1
    ev = np.kron(np.eye(N.dim, dtype=np.int64), R.one.reshape(1, -1))
    T = linalg.matmul(linalg.matmul(linalg.matmul(ev, co.space, p), co.basis, p), Bres, p)
    return hom_from_total(res, N, T)


# ---------------------------------------------------------------------------
# the canonical fixture R = S[t]/(t^2)
# ---------------------------------------------------------------------------


def central_nilpotent(S: Algebra, prefix: str = "t") -> AlgebraEmbedding:
    """``R = S[t]/(t^2)`` with ``t`` central, embedded by path labels."""
    pres = S.presentation
    q = S.quiver
    loops = [(f"{prefix}{v}", v, v) for v in q.vertices]
    names = {a.name for a in q.arrows}
    if any(n for n, _, _ in loops if n in names):
        raise ValueError("loop names clash with existing arrows; pass another prefix")
    arrows = [(a.name, a.source, a.target) for a in q.arrows] + loops
    Q = Quiver(q.vertices, arrows)
    rels = list(pres.relations)
    for v in q.vertices:
        rels.append(Relation.monomial(f"{prefix}{v}", f"{prefix}{v}"))
    for a in q.arrows:
        # traversing t then a equals traversing a then t
        rels.append(Relation.of((1, (f"{prefix}{a.source}", a.name)), (-1, (a.name, f"{prefix}{a.target}"))))
    N = pres.nilpotency_bound
    # paths of S of length N vanish in S and must keep vanishing in R
    layer = [((), v) for v in range(S.num_vertices)]
    for _ in range(N):
        layer = [(path + (a,), q.tgt[a]) for path, end in layer for a in range(len(q.arrows)) if q.src[a] == end]
    for path, _ in layer:
        rels.append(Relation.monomial(*(q.arrows[a].name for a in path)))
    R = compile_presentation(AlgebraPresentation(Q, tuple(rels), N + 1, pres.prime))
    return AlgebraEmbedding.by_labels(S, R)


# ---------------------------------------------------------------------------
# checks of the transfer statements
# ---------------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    checks: list = field(default_factory=list)  # (label, ok, detail)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.checks.append((label, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]

    def lines(self) -> list[str]:
        out = [f"{'PASS' if ok else 'FAIL'} {label}{': ' + detail if detail else ''}" for label, ok, detail in self.checks]
        out.append(f"{self.name}: {'ok' if self.ok else 'FAILED'} ({len(self.checks)} checks)")
        return out


def sample_modules(A: Algebra, samples: int, seed: int, include_structural: bool = True) -> list[Module]:
    """Seeded random modules, preceded by the vertex simples and projectives."""
    out = []
    if include_structural:
        out += [simple(A, v) for v in range(A.num_vertices)]
        out += [vertex_projective(A, v) for v in range(A.num_vertices)]
    ss = np.random.SeedSequence(seed)
    for child in ss.spawn(samples):
        out.append(random_module(A, np.random.default_rng(child)))
    return out


def check_adjunctions(ext, samples: int = 6, seed: int = 0, modules_S=None, modules_R=None) -> CheckReport:
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    rep = CheckReport("adjunctions")
    mods_S = modules_S if modules_S is not None else sample_modules(emb.sub, samples, seed)
    mods_R = modules_R if modules_R is not None else sample_modules(emb.big, samples, seed + 1)
    for k, M in enumerate(mods_S):
        u = induction_unit(emb, M)
        rep.add(f"unit mono (S-module {k}, dims {M.dims})", u.is_mono())
        c = coinduction_counit(emb, M)
        rep.add(f"counit epi (S-module {k})", c.is_epi())
        ind, coind = induce(emb, M), coinduce(emb, M)
        rep.add(f"dim induce = dim coinduce (S-module {k})", ind.dim == coind.dim, f"{ind.dim} vs {coind.dim}")
        for j, X in enumerate(mods_R[: max(2, samples // 2)]):
            a = hom_dim(ind, X)
            b = hom_dim(M, restrict(emb, X))
            rep.add(f"Hom_R(IM, X) = Hom_S(M, RX) ({k},{j})", a == b, f"{a} vs {b}")
            c1 = hom_dim(X, coind)
            c2 = hom_dim(restrict(emb, X), M)
            rep.add(f"Hom_R(X, CM) = Hom_S(RX, M) ({k},{j})", c1 == c2, f"{c1} vs {c2}")
    return rep


def check_projective_correspondence(ext, trials: int = 8, seed: int = 0) -> CheckReport:
    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    S, R = emb.sub, emb.big
    rep = CheckReport("projective correspondence")
    induced = [induce(emb, vertex_projective(S, v)) for v in range(S.num_vertices)]
    for w in range(R.num_vertices):
        P = vertex_projective(R, w)
        hit = [v for v, I in enumerate(induced) if is_summand(P, I, trials, seed).answer == "yes"]
        rep.add(f"P_R({R.quiver.vertices[w]}) is a summand of an induced projective", bool(hit),
                f"from {[S.quiver.vertices[v] for v in hit]}")
        rep.add(f"restriction of P_R({R.quiver.vertices[w]}) is projective", is_projective(restrict(emb, P)))
    return rep


def check_ind_coind_twist(ext: FrobeniusExtension, samples: int = 6, seed: int = 0, trials: int = 8,
                          modules=None) -> CheckReport:
    rep = CheckReport("induce vs coinduce of twist")
    mods = modules if modules is not None else sample_modules(ext.sub, samples, seed)
    for k, M in enumerate(mods):
        v = is_isomorphic(induce(ext, M), coinduce(ext, twist_by_alpha(ext, M)), trials, seed)
        rep.add(f"induce M ~ coinduce(alpha M) (sample {k})", v.answer == "yes", v.answer)
    return rep


def check_exactness(ext, seq: ShortExactSequence) -> CheckReport:
    """Rank check that the functors keep a sequence exact.

    A sequence of R-modules is restricted; a sequence of S-modules is
    induced and coinduced.
    """
    emb = _emb(ext)
    rep = CheckReport("exactness of R, I, C")
    A = seq.middle.algebra
    if A is emb.big:
        functors = (("restrict", restrict_hom),)
    elif A is emb.sub:
        functors = (("induce", induce_hom), ("coinduce", coinduce_hom))
    else:
        raise AlgebraMismatch("sequence lives over neither algebra of the extension")
    for name, F in functors:
        f, g = F(emb, seq.inclusion), F(emb, seq.projection)
        ok = f.is_mono() and g.is_epi() and is_exact_at(f, g)
        rep.add(f"{name} keeps the sequence exact", ok, f"dims {f.source.dims} -> {f.target.dims} -> {g.target.dims}")
    return rep


def _gdim_or_none(M, cert):
    from .gorenstein import gdim

    return gdim(M, cert)


def transfer_checks(ext, cert_S, cert_R, samples: int = 20, seed: int = 1, cap: int = 24,
                    modules=None) -> CheckReport:
    """Executable form of the transfer statements between S-mod and R-mod."""
    from .gorenstein import require_certified

    emb = ext.embedding if isinstance(ext, FrobeniusExtension) else ext
    S, R = emb.sub, emb.big
    rep = CheckReport("transfer")
    dS, dR = require_certified(cert_S), require_certified(cert_R)
    rep.add("d_S = d_R", dS == dR, f"{dS} vs {dR}")
    simples_pd = [pd(simple(S, v), cap) for v in range(S.num_vertices)]
    gl_equals_d = all(h.is_exact and h.value <= dS for h in simples_pd) and any(
        h.value == dS for h in simples_pd)
    mods = modules if modules is not None else sample_modules(R, samples, seed, include_structural=False)
    for k, X in enumerate(mods):
        RX = restrict(emb, X)
        gR = _gdim_or_none(X, cert_R)
        gS = _gdim_or_none(RX, cert_S)
        rep.add(f"Gd_R X = Gd_S(res X) (sample {k}, dims {X.dims})", gR == gS, f"{gR} vs {gS}")
        if gl_equals_d:
            h = pd(RX, cap)
            rep.add(f"Gd_R X = pd_S(res X) (sample {k})", h.is_exact and h.value == gR, f"{gR} vs {h}")
    for v in range(S.num_vertices):
        P = vertex_projective(S, v)
        a = injective_dimension(P, cap)
        b = injective_dimension(induce(emb, P), cap)
        rep.add(f"id_S P({S.quiver.vertices[v]}) = id_R(induce P)", a.kind == b.kind and a.value == b.value,
                f"{a} vs {b}")
    return rep
