"""Minimal projective resolutions, projective and injective dimension, Ext.

Resolutions are cached per module and grown on demand.  Cochains
``Hom(P, N)`` for a free module ``P`` are stored in generator coordinates:
a morphism is the list of images of the generators, concatenated.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .modcat import (
    Module,
    ModuleHom,
    _free_layout,
    dualize,
    dualize_hom,
    generator_images,
    hom_from_generator_images,
    hom_space,
    is_isomorphic,
    is_summand,
    kernel,
    projective_cover,
    zero_module,
)

DEFAULT_CAP = 24
# total dimension of a single projective term beyond which resolutions stop
DIM_BUDGET = 2048


class ResolutionTruncated(RuntimeError):
    """The resolution could not be computed to the requested depth."""


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------


class _ResolutionData:
    """Mutable, lock-protected growth state shared by all snapshots of one module."""

    def __init__(self, M: Module):
        self.module = M
        self.terms: list[Module] = []
        self.covers: list[ModuleHom] = []  # P_i ->> Omega^i
        self.syzygies: list[Module] = [M]  # Omega^0 = M
        self.inclusions: list[ModuleHom | None] = [None]  # Omega^i >-> P_{i-1}
        self.lock = threading.Lock()

    @property
    def terminated(self) -> bool:
        return self.syzygies[-1].is_zero()

    def extend(self, depth: int, budget: int = DIM_BUDGET):
        """Compute terms ``P_0 .. P_depth`` (fewer if the resolution ends)."""
        with self.lock:
            while len(self.terms) <= depth and not (self.terms and self.terminated):
                om = self.syzygies[len(self.terms)]
                P, eps = projective_cover(om)
                if P.dim > budget:
                    raise ResolutionTruncated(
                        f"term P_{len(self.terms)} has dimension {P.dim} > budget {budget}")
                K, inc = kernel(eps)
                self.terms.append(P)
                self.covers.append(eps)
                self.syzygies.append(K)
                self.inclusions.append(inc)


_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def _data(M: Module) -> _ResolutionData:
    key = ("zero",) if M.is_zero() else M.key
    with _CACHE_LOCK:
        d = _CACHE.get(key)
        if d is None or d.module.algebra is not M.algebra:
            d = _ResolutionData(M)
            _CACHE[key] = d
        return d


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


@dataclass(frozen=True)
class Resolution:
    """``... -> P_1 -> P_0 ->> M`` truncated at ``depth``."""

    module: Module
    terms: tuple
    covers: tuple
    syzygies: tuple
    inclusions: tuple
    truncated: bool
    minimal: bool = True

    @property
    def depth(self) -> int:
        return len(self.terms) - 1

    @property
    def augmentation(self) -> ModuleHom:
        return self.covers[0]

    def term(self, i: int) -> Module:
        if i < 0:
            raise IndexError(i)
        if i < len(self.terms):
            return self.terms[i]
        if self.truncated:
            raise ResolutionTruncated(f"P_{i} lies beyond the computed depth {self.depth}")
        return zero_module(self.module.algebra)

    def differential(self, i: int) -> ModuleHom:
        """``d_i: P_i -> P_{i-1}`` for ``i >= 1``."""
        src = self.term(i)
        tgt = self.term(i - 1)
        if i < len(self.terms):
            return self.inclusions[i] @ self.covers[i]
        return ModuleHom(src, tgt, [linalg.zeros(t, s) for s, t in zip(src.dims, tgt.dims)], check=False)

    def syzygy(self, i: int) -> Module:
        if i < len(self.syzygies):
            return self.syzygies[i]
        if self.truncated:
            raise ResolutionTruncated(f"syzygy {i} beyond computed depth")
        return zero_module(self.module.algebra)

    @property
    def differentials(self) -> list[ModuleHom]:
        return [self.differential(i) for i in range(1, len(self.terms))]


def min_projective_resolution(M: Module, depth_cap: int = DEFAULT_CAP, budget: int = DIM_BUDGET) -> Resolution:
    if depth_cap < 0:
        raise ValueError("depth_cap must be >= 0")
    data = _data(M)
    data.extend(depth_cap, budget)
    n = min(len(data.terms), depth_cap + 1)
    truncated = len(data.syzygies) > n and not data.syzygies[n].is_zero()
    return Resolution(
        module=M,
        terms=tuple(data.terms[:n]),
        covers=tuple(data.covers[:n]),
        syzygies=tuple(data.syzygies[:n + 1]),
        inclusions=tuple(data.inclusions[:n + 1]),
        truncated=truncated,
    )


def nth_syzygy(M: Module, n: int) -> Module:
    if n == 0:
        return M
    return min_projective_resolution(M, n).syzygy(n)


# ---------------------------------------------------------------------------
# projective and injective dimension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologicalDimension:
    """A value in N u {infinity}, or an honest lower bound.

    ``kind`` is ``"exact"``, ``"infinite"`` (always with a witness: the
    syzygy indices ``j < k`` and whether ``Omega^j`` was found isomorphic to,
    or a direct summand of, ``Omega^k``) or ``"lower_bound"``.
    """

    kind: str
    value: int
    witness: tuple | None = None
    label: str = "pd"
    reason: str = ""

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def is_finite(self) -> bool:
        return self.kind == "exact"

    def at_least(self, n: int) -> bool:
        return self.kind == "infinite" or self.value >= n

    def __str__(self):
        if self.kind == "exact":
            return f"{self.label} = {self.value}"
        if self.kind == "infinite":
            j, k, how = self.witness
            tag = "period" if how == "iso" else "summand"
            return f"{self.label} = infinity ({tag} {j}->{k})"
        return f"{self.label} >= {self.value}"

    def as_json(self) -> dict:
        out = {"kind": self.kind, "value": self.value}
        if self.witness:
            out["witness"] = {"from": self.witness[0], "to": self.witness[1], "type": self.witness[2]}
        if self.reason:
            out["reason"] = self.reason
        return out


def _infinity_witness(syz: list[Module], k: int, trials: int, seed: int):
    """Look for ``j < k`` with ``Omega^j`` a direct summand of ``Omega^k``.

    Over a minimal resolution this forces infinite projective dimension:
    the summand relation propagates to all later syzygies, so Omega^k could
    never vanish.
    """
    Ok = syz[k]
    for j in range(k - 1, -1, -1):
        Oj = syz[j]
        if Oj.is_zero() or any(a > b for a, b in zip(Oj.dims, Ok.dims)):
            continue
        if Oj.dims == Ok.dims:
            if is_isomorphic(Oj, Ok, trials, seed).answer == "yes":
                return (j, k, "iso")
        elif is_summand(Oj, Ok, trials, seed).answer == "yes":
            return (j, k, "summand")
    return None


def pd(M: Module, depth_cap: int = DEFAULT_CAP, trials: int = 8, seed: int = 0,
       label: str = "pd", budget: int = DIM_BUDGET) -> HomologicalDimension:
    data = _data(M)
    for k in range(depth_cap + 1):
        try:
            data.extend(k, budget)
        except ResolutionTruncated as exc:
            return HomologicalDimension("lower_bound", k, label=label, reason=f"budget: {exc}")
        syz = data.syzygies
        if syz[k + 1].is_zero():
            return HomologicalDimension("exact", k, label=label)
        w = _infinity_witness(syz, k + 1, trials, seed)
        if w is not None:
            return HomologicalDimension("infinite", -1, w, label=label)
    return HomologicalDimension("lower_bound", depth_cap + 1, label=label, reason="cap")


def injective_dimension(M: Module, depth_cap: int = DEFAULT_CAP, trials: int = 8, seed: int = 0,
                        budget: int = DIM_BUDGET) -> HomologicalDimension:
    """``id_A M = pd_{A^op} D M``."""
    return pd(dualize(M), depth_cap, trials, seed, label="id", budget=budget)


id = injective_dimension  # noqa: A001  (mirrors the usual notation)


# ---------------------------------------------------------------------------
# cochains and Ext
# ---------------------------------------------------------------------------


def hom_coordinates(f: ModuleHom) -> np.ndarray:
    """Generator coordinates of a morphism out of a free module."""
    imgs = generator_images(f)
    return np.concatenate(imgs) if imgs else np.zeros(0, dtype=np.int64)


def hom_from_coordinates(P: Module, N: Module, x) -> ModuleHom:
    x = np.asarray(x, dtype=np.int64)
    imgs, pos = [], 0
    for v in P.generators:
        imgs.append(x[pos:pos + N.dims[v]])
        pos += N.dims[v]
    return hom_from_generator_images(P, N, imgs)


def cochain_dim(P: Module, N: Module) -> int:
    return sum(N.dims[v] for v in P.generators)


def cochain_matrix(f: ModuleHom, N: Module) -> np.ndarray:
    """Matrix of ``phi -> phi o f``, ``Hom(P', N) -> Hom(P, N)``, for free ``P, P'``."""
    P, Q = f.source, f.target
    A = P.algebra
    p = P.p
    layout = _free_layout(A, Q.generators)
    col_off = np.concatenate([[0], np.cumsum([N.dims[v] for v in Q.generators])]).astype(int)
    row_off = np.concatenate([[0], np.cumsum([N.dims[v] for v in P.generators])]).astype(int)
    out = linalg.zeros(int(row_off[-1]), int(col_off[-1]))
    for h, y in enumerate(generator_images(f)):
        v = P.generators[h]
        r0 = row_off[h]
        for k in np.flatnonzero(y):
            g, b = layout[v][k]
            blk = N.basis_action(b)
            out[r0:r0 + N.dims[v], col_off[g]:col_off[g + 1]] += int(y[k]) * blk
    return np.mod(out, p)


def cohomology(prev: np.ndarray, cur: np.ndarray, n: int, p: int):
    """Cohomology at a cochain space of dimension ``n``.

    ``prev`` maps into it and ``cur`` maps out of it (either may have zero
    size).  Returns ``(dim, representatives)`` where the representatives
    are columns of a kernel complement to the image, in echelon order.
    """
    Z = linalg.kernel_basis(cur, p) if cur.shape[0] else linalg.identity(n)
    B = linalg.image_basis(prev, p) if prev.size else linalg.zeros(n, 0)
    if Z.shape[1] == 0:
        return 0, linalg.zeros(n, 0)
    _, piv = linalg.rref(np.hstack([B, Z]), p)
    reps = [c - B.shape[1] for c in piv if c >= B.shape[1]]
    return len(reps), Z[:, reps]


@dataclass(frozen=True)
class ExtGroup:
    degree: int
    dimension: int
    cocycle_basis: tuple = field(default=(), repr=False)


def _cochain_complex(res: Resolution, N: Module, lo: int, hi: int) -> dict:
    """Coboundaries ``delta^j: Hom(P_j, N) -> Hom(P_{j+1}, N)`` for lo <= j <= hi."""
    return {j: cochain_matrix(res.differential(j + 1), N) for j in range(max(lo, 0), hi + 1)}


def ext(M: Module, N: Module, i: int, budget: int = DIM_BUDGET) -> ExtGroup:
    """``Ext^i(M, N)`` from the minimal projective resolution of ``M``."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    res = min_projective_resolution(M, i + 1, budget)
    p = M.p
    Pi = res.term(i)
    n = cochain_dim(Pi, N)
    cur = cochain_matrix(res.differential(i + 1), N)
    prev = cochain_matrix(res.differential(i), N) if i >= 1 else linalg.zeros(n, 0)
    dim, reps = cohomology(prev, cur, n, p)
    basis = tuple(hom_from_coordinates(Pi, N, reps[:, c]) for c in range(reps.shape[1]))
    return ExtGroup(i, dim, basis)


def ext_dim(M: Module, N: Module, i: int) -> int:
    return ext(M, N, i).dimension


def lift_chain_map(f: ModuleHom, src: Resolution, tgt: Resolution, depth: int) -> list[ModuleHom]:
    """Maps ``f_j: P_j -> P'_j`` over ``f: M -> M'`` for ``0 <= j <= depth``."""
    p = f.p
    out: list[ModuleHom] = []
    for j in range(depth + 1):
        Pj, Qj = src.term(j), tgt.term(j)
        # eps' f_0 = f eps at j = 0, and d'_j f_j = f_{j-1} d_j afterwards
        goal = f @ src.covers[0] if j == 0 else out[j - 1] @ src.differential(j)
        through = tgt.covers[0] if j == 0 else tgt.differential(j)
        gens = []
        for v, y in zip(Pj.generators, generator_images(goal)):
            x = linalg.solve(through.blocks[v], y, p) if Qj.dims[v] else np.zeros(0, dtype=np.int64)
            if x is None:
                raise ValueError("chain map does not lift")
            gens.append(x)
        out.append(hom_from_generator_images(Pj, Qj, gens))
    return out


# ---------------------------------------------------------------------------
# Ext through injective coresolutions (independent route)
# ---------------------------------------------------------------------------


def injective_coresolution(N: Module, depth: int, budget: int = DIM_BUDGET):
    """``0 -> N -> I^0 -> I^1 -> ...`` as the dual of a resolution of ``D N``.

    Returns ``(coaugmentation, [I^0, ...], [d^0: I^0 -> I^1, ...], truncated)``.
    """
    res = min_projective_resolution(dualize(N), depth + 1, budget)
    terms = [dualize(res.term(j)) for j in range(depth + 2)]
    coaug = ModuleHom(N, terms[0], [b.T for b in res.augmentation.blocks], check=False)
    diffs = [dualize_hom(res.differential(j + 1)) for j in range(depth + 1)]
    return coaug, terms, diffs, res.truncated


def ext_via_injectives(M: Module, N: Module, i: int, budget: int = DIM_BUDGET) -> int:
    """``dim Ext^i(M, N)`` as the cohomology of ``Hom(M, I^*)``."""
    if i < 0:
        raise ValueError("degree must be >= 0")
    _, terms, diffs, _ = injective_coresolution(N, i, budget)
    p = M.p
    spaces = [hom_space(M, terms[j]) for j in range(i + 2)]

    def push(j):  # Hom(M, I^j) -> Hom(M, I^{j+1})
        S, T = spaces[j], spaces[j + 1]
        cols = [T.coordinates(diffs[j] @ h) for h in S.basis]
        return np.stack(cols, axis=1) if cols else linalg.zeros(T.dim, 0)

    cur = push(i)
    prev = push(i - 1) if i >= 1 else linalg.zeros(spaces[i].dim, 0)
    return cohomology(prev, cur, spaces[i].dim, p)[0]
