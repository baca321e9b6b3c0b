"""Finite-dimensional modules as quiver representations, and the abelian
category operations on them.

A :class:`Module` stores one matrix per arrow.  Modules built as direct sums
of vertex projectives remember their generators (``Module.generators``); for
those, a morphism out of the module is determined by the images of the
generators, which is what the resolution code relies on.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import Algebra


class ModuleError(ValueError):
    """Invalid module data, or a relation the representation violates."""


class AlgebraMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# modules and morphisms
# ---------------------------------------------------------------------------


class Module:
    def __init__(self, algebra: Algebra, dims, action, generators=None, check=True, name=None):
        self.algebra = algebra
        self.p = algebra.prime
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.num_vertices or min(self.dims, default=0) < 0:
            raise ModuleError(f"dimension vector {self.dims} does not match the quiver")
        q = algebra.quiver
        acts = []
        for a, mat in enumerate(action):
            m = np.mod(np.asarray(mat, dtype=np.int64), self.p).reshape(self.dims[q.tgt[a]], self.dims[q.src[a]])
            m.setflags(write=False)
            acts.append(m)
        if len(acts) != len(q.arrows):
            raise ModuleError(f"expected {len(q.arrows)} arrow matrices, got {len(acts)}")
        self.action = tuple(acts)
        self.generators = None if generators is None else tuple(generators)
        self.name = name
        self._path_cache: dict[int, np.ndarray] = {}
        self._key = None
        if check:
            self.validate()

    # -- bookkeeping ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def key(self):
        if self._key is None:
            self._key = (self.algebra.token, self.dims, tuple(m.tobytes() for m in self.action))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Module):
            return NotImplemented
        # equal only over the same algebra object; cached constructions rely on it
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Module{tag} dims={self.dims}>"

    # -- action of algebra elements ---------------------------------------------
    def path_action(self, arrows: Sequence[int], vertex: int | None = None) -> np.ndarray:
        """Matrix of a path (arrow indices in traversal order)."""
        if not arrows:
            return linalg.identity(self.dims[vertex])
        m = self.action[arrows[0]]
        for a in arrows[1:]:
            m = linalg.matmul(self.action[a], m, self.p)
        return m

    def basis_action(self, i: int) -> np.ndarray:
        """Matrix ``M_{source} -> M_{target}`` of the ``i``-th basis path."""
        m = self._path_cache.get(i)
        if m is None:
            b = self.algebra.basis[i]
            m = self.path_action(b.arrows, b.source)
            self._path_cache[i] = m
        return m

    def element_action(self, x) -> np.ndarray:
        """Total ``dim x dim`` matrix of an algebra element."""
        out = linalg.zeros(self.dim, self.dim)
        off = self.offsets
        for i in np.flatnonzero(np.asarray(x)):
            b = self.algebra.basis[i]
            blk = self.basis_action(i)
            s, t = off[b.source], off[b.target]
            out[t:t + self.dims[b.target], s:s + self.dims[b.source]] += int(x[i]) * blk
        return np.mod(out, self.p)

    def validate(self):
        A = self.algebra
        pres = A.presentation
        q = A.quiver
        for r_i, rel in enumerate(pres.relations):
            total = None
            for coef, names in rel.terms:
                path = tuple(q.arrow_index[n] for n in names)
                m = (int(coef) % self.p) * self.path_action(path)
                total = m if total is None else total + m
            if total is not None and np.any(np.mod(total, self.p)):
                text = " + ".join(f"{c}*{'.'.join(ps)}" for c, ps in rel.terms)
                raise ModuleError(f"relation {r_i} ({text}) does not act as zero")
        # J^N must act as zero: check every path of length N
        N = pres.nilpotency_bound
        layer = [((), v) for v in range(A.num_vertices) if self.dims[v]]
        mats = {((), v): linalg.identity(self.dims[v]) for _, v in layer}
        for _ in range(N):
            nxt = []
            for path, end in layer:
                cur = mats.pop((path, end))
                for a in range(len(q.arrows)):
                    if q.src[a] == end and self.dims[q.tgt[a]]:
                        m = linalg.matmul(self.action[a], cur, self.p)
                        if m.any():
                            nxt.append((path + (a,), q.tgt[a]))
                            mats[(path + (a,), q.tgt[a])] = m
            layer = nxt
        if layer:
            names = ".".join(q.arrows[a].name for a in layer[0][0])
            raise ModuleError(f"path {names} of length {N} acts nonzero (J^N must vanish)")

    def vertex_label(self, v: int) -> str:
        return self.algebra.quiver.vertices[v]


class ModuleHom:
    """A morphism given by one matrix per vertex."""

    def __init__(self, source: Module, target: Module, blocks, check=True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("source and target live over different algebras")
        self.source = source
        self.target = target
        p = source.p
        self.blocks = tuple(
            np.mod(np.asarray(b, dtype=np.int64), p).reshape(target.dims[v], source.dims[v])
            for v, b in enumerate(blocks)
        )
        if check and not self.is_intertwiner():
            raise ModuleError("blocks do not commute with the arrow actions")

    @property
    def p(self):
        return self.source.p

    def is_intertwiner(self) -> bool:
        q = self.source.algebra.quiver
        for a in range(len(q.arrows)):
            i, j = q.src[a], q.tgt[a]
            lhs = linalg.matmul(self.blocks[j], self.source.action[a], self.p)
            rhs = linalg.matmul(self.target.action[a], self.blocks[i], self.p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    # -- algebra of morphisms ------------------------------------------------
    def __matmul__(self, other: "ModuleHom") -> "ModuleHom":
        """``self @ other`` is the composite ``self o other``."""
        if other.target != self.source:
            raise ModuleError("composable morphisms expected")
        return ModuleHom(other.source, self.target,
                         [linalg.matmul(a, b, self.p) for a, b in zip(self.blocks, other.blocks)], check=False)

    def __add__(self, other):
        return ModuleHom(self.source, self.target, [a + b for a, b in zip(self.blocks, other.blocks)], check=False)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "ModuleHom":
        return ModuleHom(self.source, self.target, [int(c) * b for b in self.blocks], check=False)

    def vector(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([b.ravel() for b in self.blocks])

    def ranks(self) -> list[int]:
        return [linalg.rank(b, self.p) for b in self.blocks]

    def rank(self) -> int:
        return sum(self.ranks())

    def is_zero(self) -> bool:
        return not any(b.any() for b in self.blocks)

    def is_mono(self) -> bool:
        return all(r == d for r, d in zip(self.ranks(), self.source.dims))

    def is_epi(self) -> bool:
        return all(r == d for r, d in zip(self.ranks(), self.target.dims))

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_mono()

    def inverse(self) -> "ModuleHom":
        if not self.is_iso():
            raise ModuleError("morphism is not invertible")
        return ModuleHom(self.target, self.source, [linalg.inverse(b, self.p) for b in self.blocks], check=False)

    def __repr__(self):
        return f"<ModuleHom {self.source.dims} -> {self.target.dims}>"


def zero_hom(M: Module, N: Module) -> ModuleHom:
    return ModuleHom(M, N, [linalg.zeros(n, m) for m, n in zip(M.dims, N.dims)], check=False)


def identity_hom(M: Module) -> ModuleHom:
    return ModuleHom(M, M, [linalg.identity(d) for d in M.dims], check=False)


def zero_module(A: Algebra) -> Module:
    return Module(A, [0] * A.num_vertices, [linalg.zeros(0, 0) for _ in A.quiver.arrows],
                  generators=(), check=False)


@dataclass(frozen=True)
class ShortExactSequence:
    inclusion: ModuleHom
    projection: ModuleHom

    def __post_init__(self):
        if self.inclusion.target != self.projection.source:
            raise ModuleError("inclusion and projection do not share the middle term")
        if not self.inclusion.is_mono():
            raise ModuleError("inclusion is not injective")
        if not self.projection.is_epi():
            raise ModuleError("projection is not surjective")
        if not (self.projection @ self.inclusion).is_zero():
            raise ModuleError("composite is nonzero")
        for v, d in enumerate(self.middle.dims):
            if self.inclusion.source.dims[v] + self.projection.target.dims[v] != d:
                raise ModuleError("image of inclusion differs from kernel of projection")

    @property
    def left(self) -> Module:
        return self.inclusion.source

    @property
    def middle(self) -> Module:
        return self.inclusion.target

    @property
    def right(self) -> Module:
        return self.projection.target


# ---------------------------------------------------------------------------
# constructions of specific modules
# ---------------------------------------------------------------------------


def _free_layout(A: Algebra, generators) -> list[list[tuple[int, int]]]:
    """Per vertex ``w``: ordered ``(generator slot, basis index)`` pairs."""
    return [[(g, b) for g, v in enumerate(generators) for b in A.paths_between(w, v)]
            for w in range(A.num_vertices)]


def free_module(A: Algebra, generators: Sequence[int]) -> Module:
    """The projective ``A e_{v_1} + ... + A e_{v_r}`` in the standard basis."""
    generators = tuple(int(v) for v in generators)
    layout = _free_layout(A, generators)
    pos = [{gb: k for k, gb in enumerate(layout[w])} for w in range(A.num_vertices)]
    q = A.quiver
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        m = linalg.zeros(len(layout[j]), len(layout[i]))
        for col, (g, b) in enumerate(layout[i]):
            prod = A.multiply(A.arrow_elements[a], np.eye(A.dimension, dtype=np.int64)[b])
            for k in np.flatnonzero(prod):
                m[pos[j][(g, int(k))], col] = prod[k]
        acts.append(m)
    return Module(A, [len(l) for l in layout], acts, generators=generators, check=False)


def generator_position(P: Module, g: int) -> tuple[int, int]:
    """(vertex, index within that vertex) of the ``g``-th generator of a free module."""
    A = P.algebra
    v = P.generators[g]
    e = A.idempotents[v]
    k = _free_layout(A, P.generators)[v].index((g, e))
    return v, k


def hom_from_generator_images(P: Module, N: Module, images) -> ModuleHom:
    """The morphism out of a free module sending generator ``g`` to ``images[g]``."""
    A = P.algebra
    layout = _free_layout(A, P.generators)
    blocks = []
    for w in range(A.num_vertices):
        blk = linalg.zeros(N.dims[w], len(layout[w]))
        for col, (g, b) in enumerate(layout[w]):
            y = np.asarray(images[g], dtype=np.int64)
            if y.size:
                blk[:, col] = linalg.matmul(N.basis_action(b), y, N.p)
        blocks.append(blk)
    return ModuleHom(P, N, blocks, check=False)


def generator_images(f: ModuleHom) -> list[np.ndarray]:
    P = f.source
    out = []
    for g in range(len(P.generators)):
        v, k = generator_position(P, g)
        out.append(f.blocks[v][:, k].copy())
    return out


def vertex_projective(A: Algebra, v) -> Module:
    """The indecomposable projective ``A e_v``."""
    return free_module(A, (_vertex(A, v),))


def simple(A: Algebra, v) -> Module:
    v = _vertex(A, v)
    dims = [1 if w == v else 0 for w in range(A.num_vertices)]
    q = A.quiver
    return Module(A, dims, [linalg.zeros(dims[q.tgt[a]], dims[q.src[a]]) for a in range(len(q.arrows))])


def vertex_injective(A: Algebra, v) -> Module:
    """The indecomposable injective ``D(e_v A)``."""
    return dualize(vertex_projective(A.opposite(), _vertex(A, v)))


def regular_module(A: Algebra) -> Module:
    return free_module(A, tuple(range(A.num_vertices)))


def _vertex(A: Algebra, v) -> int:
    if isinstance(v, str):
        try:
            return A.quiver.vertex_index[v]
        except KeyError:
            raise ModuleError(f"unknown vertex {v!r}") from None
    v = int(v)
    if not 0 <= v < A.num_vertices:
        raise ModuleError(f"unknown vertex {v!r}")
    return v


def direct_sum(modules: Sequence[Module], A: Algebra | None = None):
    """Return ``(S, inclusions, projections)``."""
    if not modules:
        Z = zero_module(A)
        return Z, [], []
    A = modules[0].algebra
    q = A.quiver
    dims = [sum(M.dims[v] for M in modules) for v in range(A.num_vertices)]
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        m = linalg.zeros(dims[j], dims[i])
        r = c = 0
        for M in modules:
            m[r:r + M.dims[j], c:c + M.dims[i]] = M.action[a]
            r += M.dims[j]
            c += M.dims[i]
        acts.append(m)
    gens = None
    if all(M.generators is not None for M in modules):
        gens = tuple(g for M in modules for g in M.generators)
    S = Module(A, dims, acts, generators=gens, check=False)
    incs, projs = [], []
    start = [0] * A.num_vertices
    for M in modules:
        ib, pb = [], []
        for v in range(A.num_vertices):
            blk = linalg.zeros(dims[v], M.dims[v])
            blk[start[v]:start[v] + M.dims[v]] = linalg.identity(M.dims[v])
            ib.append(blk)
            pb.append(blk.T.copy())
            start[v] += M.dims[v]
        incs.append(ModuleHom(M, S, ib, check=False))
        projs.append(ModuleHom(S, M, pb, check=False))
    return S, incs, projs


def direct_sum_module(*modules: Module) -> Module:
    return direct_sum(list(modules))[0]


def hom_pair(f: ModuleHom, g: ModuleHom, S=None) -> ModuleHom:
    """``(f, g): X -> Y + Z`` for ``f: X -> Y`` and ``g: X -> Z``."""
    S, incs, _ = S or direct_sum([f.target, g.target])
    return incs[0] @ f + incs[1] @ g


def hom_copair(f: ModuleHom, g: ModuleHom, S=None) -> ModuleHom:
    """``[f g]: X + Y -> Z`` for ``f: X -> Z`` and ``g: Y -> Z``."""
    S, _, projs = S or direct_sum([f.source, g.source])
    return f @ projs[0] + g @ projs[1]


def hom_direct_sum(f: ModuleHom, g: ModuleHom) -> ModuleHom:
    Ss, _, sp = direct_sum([f.source, g.source])
    St, ti, _ = direct_sum([f.target, g.target])
    return ti[0] @ f @ sp[0] + ti[1] @ g @ sp[1]


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------


class HomSpace:
    """A basis of ``Hom(M, N)`` with exact coordinate extraction."""

    def __init__(self, M: Module, N: Module):
        if M.algebra is not N.algebra:
            raise AlgebraMismatch("Hom between modules over different algebras")
        self.source, self.target = M, N
        self.basis = _hom_basis(M, N)
        width = sum(m * n for m, n in zip(M.dims, N.dims))
        self.matrix = (np.stack([h.vector() for h in self.basis], axis=1)
                       if self.basis else linalg.zeros(width, 0))
        self._coord = None

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: ModuleHom) -> np.ndarray:
        if self._coord is None:
            self._coord = linalg.left_inverse(self.matrix, self.source.p) if self.basis else linalg.zeros(0, self.matrix.shape[0])
        c = linalg.matmul(self._coord, f.vector(), self.source.p)
        return c

    def combine(self, coeffs) -> ModuleHom:
        blocks = [linalg.zeros(n, m) for m, n in zip(self.source.dims, self.target.dims)]
        for c, h in zip(coeffs, self.basis):
            if c:
                blocks = [b + int(c) * hb for b, hb in zip(blocks, h.blocks)]
        return ModuleHom(self.source, self.target, blocks, check=False)

    def random(self, rng) -> ModuleHom:
        c = linalg.random_matrix(1, len(self.basis), rng, self.source.p)[0]
        return self.combine(c)


@functools.lru_cache(maxsize=4096)
def hom_space(M: Module, N: Module) -> HomSpace:
    return HomSpace(M, N)


def hom_basis(M: Module, N: Module) -> list[ModuleHom]:
    """A basis of the solutions of the intertwiner equations."""
    return list(hom_space(M, N).basis)


def hom_dim(M: Module, N: Module) -> int:
    return hom_space(M, N).dim


def _hom_basis(M: Module, N: Module) -> list[ModuleHom]:
    p = M.p
    nv = len(M.dims)
    if M.generators is not None:
        # Hom(free, N) is the sum of N_v over generators
        out = []
        for g, v in enumerate(M.generators):
            for k in range(N.dims[v]):
                imgs = [np.zeros(N.dims[w], dtype=np.int64) for w in M.generators]
                imgs[g][k] = 1
                out.append(hom_from_generator_images(M, N, imgs))
        return out
    sizes = [N.dims[v] * M.dims[v] for v in range(nv)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offs[-1])
    if total == 0:
        return []
    q = M.algebra.quiver
    eqs = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        rows = N.dims[j] * M.dims[i]
        if rows == 0:
            continue
        E = linalg.zeros(rows, total)
        # X_j M_a - N_a X_i = 0, with X_v flattened row-major
        if sizes[j]:
            E[:, offs[j]:offs[j + 1]] += np.kron(linalg.identity(N.dims[j]), M.action[a].T)
        if sizes[i]:
            E[:, offs[i]:offs[i + 1]] -= np.kron(N.action[a], linalg.identity(M.dims[i]))
        eqs.append(np.mod(E, p))
    K = linalg.kernel_basis(np.vstack(eqs), p) if eqs else linalg.identity(total)
    out = []
    for c in range(K.shape[1]):
        col = K[:, c]
        blocks = [col[offs[v]:offs[v + 1]].reshape(N.dims[v], M.dims[v]) for v in range(nv)]
        out.append(ModuleHom(M, N, blocks, check=False))
    return out


def factors_through(f: ModuleHom, via: ModuleHom, side: str = "pre") -> ModuleHom | None:
    """Solve for ``h`` with ``h o via == f`` (side="pre") or ``via o h == f`` (side="post")."""
    p = f.p
    if side == "pre":
        H = hom_space(via.target, f.target)
        cols = [(h @ via).vector() for h in H.basis]
    else:
        H = hom_space(f.source, via.source)
        cols = [(via @ h).vector() for h in H.basis]
    if not H.basis:
        return H.combine([]) if f.is_zero() else None
    x = linalg.solve(np.stack(cols, axis=1), f.vector(), p)
    return None if x is None else H.combine(x)


# ---------------------------------------------------------------------------
# kernels, cokernels, images, sub- and quotient modules
# ---------------------------------------------------------------------------


def _cols(s, rows: int) -> np.ndarray:
    s = np.asarray(s, dtype=np.int64)
    if s.size == 0:
        return linalg.zeros(rows, 0)
    return s.reshape(rows, -1)


def submodule(M: Module, spans) -> tuple[Module, ModuleHom]:
    """Submodule spanned vertexwise by independent columns ``spans[v]``."""
    p = M.p
    q = M.algebra.quiver
    spans = [_cols(s, M.dims[v]) for v, s in enumerate(spans)]
    lefts = [linalg.left_inverse(s, p) for s in spans]
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        img = linalg.matmul(M.action[a], spans[i], p)
        acts.append(linalg.matmul(lefts[j], img, p))
    S = Module(M.algebra, [s.shape[1] for s in spans], acts, check=False)
    inc = ModuleHom(S, M, spans, check=False)
    return S, inc


def quotient_by_spans(M: Module, spans) -> tuple[Module, ModuleHom]:
    p = M.p
    q = M.algebra.quiver
    qs = [linalg.cokernel_map(_cols(s, M.dims[v]), p)
          for v, s in enumerate(spans)]
    secs = [linalg.right_inverse(m, p) for m in qs]
    acts = [linalg.matmul(linalg.matmul(qs[q.tgt[a]], M.action[a], p), secs[q.src[a]], p)
            for a in range(len(q.arrows))]
    Q = Module(M.algebra, [m.shape[0] for m in qs], acts, check=False)
    return Q, ModuleHom(M, Q, qs, check=False)


def kernel(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return submodule(f.source, [linalg.kernel_basis(b, f.p) for b in f.blocks])


def cokernel(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return quotient_by_spans(f.target, f.blocks)


def image(f: ModuleHom) -> tuple[Module, ModuleHom]:
    return submodule(f.target, [linalg.image_basis(b, f.p) for b in f.blocks])


def corestrict(f: ModuleHom, inc: ModuleHom) -> ModuleHom:
    """Factor ``f`` through a monomorphism ``inc`` whose image contains im f."""
    p = f.p
    blocks = []
    for fb, ib in zip(f.blocks, inc.blocks):
        x = linalg.solve(ib, fb, p) if ib.shape[1] or fb.size else linalg.zeros(ib.shape[1], fb.shape[1])
        if x is None:
            raise ModuleError("image is not contained in the given submodule")
        blocks.append(x.reshape(ib.shape[1], fb.shape[1]))
    return ModuleHom(f.source, inc.source, blocks, check=False)


def descend(f: ModuleHom, epi: ModuleHom) -> ModuleHom:
    """The map ``h`` with ``h o epi == f``; requires ``f`` to kill ``ker epi``."""
    p = f.p
    blocks = [linalg.matmul(fb, linalg.right_inverse(eb, p), p) for fb, eb in zip(f.blocks, epi.blocks)]
    h = ModuleHom(epi.target, f.target, blocks, check=False)
    if not np.array_equal((h @ epi).vector(), f.vector()):
        raise ModuleError("morphism does not vanish on the kernel of the epimorphism")
    return h


def radical(M: Module) -> tuple[Module, ModuleHom]:
    q = M.algebra.quiver
    spans = []
    for v in range(len(M.dims)):
        ims = [M.action[a] for a in range(len(q.arrows)) if q.tgt[a] == v]
        spans.append(linalg.image_basis(np.hstack(ims), M.p) if ims else linalg.zeros(M.dims[v], 0))
    return submodule(M, spans)


def top(M: Module) -> tuple[Module, ModuleHom]:
    _, inc = radical(M)
    return cokernel(inc)


def socle(M: Module) -> tuple[Module, ModuleHom]:
    q = M.algebra.quiver
    spans = []
    for v in range(len(M.dims)):
        outs = [M.action[a] for a in range(len(q.arrows)) if q.src[a] == v]
        spans.append(linalg.kernel_basis(np.vstack(outs), M.p) if outs else linalg.identity(M.dims[v]))
    return submodule(M, spans)


def projective_cover(M: Module) -> tuple[Module, ModuleHom]:
    """Minimal projective cover; generators are chosen by pivoting against rad M."""
    A = M.algebra
    p = M.p
    _, rad = radical(M)
    gens, images = [], []
    for v in range(A.num_vertices):
        n = M.dims[v]
        if n == 0:
            continue
        r = rad.blocks[v]
        _, piv = linalg.rref(np.hstack([r, linalg.identity(n)]), p)
        for c in piv:
            if c >= r.shape[1]:
                gens.append(v)
                images.append(linalg.identity(n)[:, c - r.shape[1]])
    P = free_module(A, gens)
    return P, hom_from_generator_images(P, M, images)


def is_projective(M: Module) -> bool:
    P, _ = projective_cover(M)
    return P.dims == M.dims


def injective_envelope(M: Module) -> tuple[Module, ModuleHom]:
    P, epi = projective_cover(dualize(M))
    I = dualize(P)
    return I, ModuleHom(M, I, [b.T for b in epi.blocks], check=False)


def is_injective(M: Module) -> bool:
    return is_projective(dualize(M))


def syzygy(M: Module) -> Module:
    _, epi = projective_cover(M)
    return kernel(epi)[0]


def pushout(f: ModuleHom, g: ModuleHom):
    """Pushout of ``f: N -> X`` and ``g: N -> Y``: returns ``(PO, X -> PO, Y -> PO)``."""
    if f.source != g.source:
        raise ModuleError("pushout needs morphisms with a common source")
    S, incs, _ = direct_sum([f.target, g.target])
    h = incs[0] @ f - incs[1] @ g
    PO, q = cokernel(h)
    return PO, q @ incs[0], q @ incs[1]


# ---------------------------------------------------------------------------
# duality and the functor Hom_A(-, A)
# ---------------------------------------------------------------------------


def dualize(M: Module) -> Module:
    """``D M = Hom_k(M, k)`` as a module over the opposite algebra."""
    Aop = M.algebra.opposite()
    return Module(Aop, M.dims, [m.T for m in M.action], check=False)


def dualize_hom(f: ModuleHom) -> ModuleHom:
    return ModuleHom(dualize(f.target), dualize(f.source), [b.T for b in f.blocks], check=False)


def right_mult_hom(A: Algebra, x, source_vertex: int, target_vertex: int) -> ModuleHom:
    """``A e_j -> A e_i``, ``y -> y x`` for ``x`` in ``e_j A e_i``."""
    P = vertex_projective(A, source_vertex)
    Q = vertex_projective(A, target_vertex)
    idx = A.paths_between(source_vertex, target_vertex)
    return hom_from_generator_images(P, Q, [np.asarray(x)[idx]])


@functools.lru_cache(maxsize=1024)
def regular_dual(M: Module):
    """``F(M) = Hom_A(M, A)`` over the opposite algebra, with the Hom bases used."""
    A = M.algebra
    q = A.quiver
    spaces = [hom_space(M, vertex_projective(A, w)) for w in range(A.num_vertices)]
    acts = []
    for a in range(len(q.arrows)):
        i, j = q.src[a], q.tgt[a]
        rho = right_mult_hom(A, A.arrow_elements[a], j, i)
        cols = [spaces[i].coordinates(rho @ phi) for phi in spaces[j].basis]
        acts.append(np.stack(cols, axis=1) if cols else linalg.zeros(spaces[i].dim, 0))
    FM = Module(A.opposite(), [s.dim for s in spaces], acts, check=False)
    return FM, spaces


def hom_to_regular(M: Module) -> Module:
    return regular_dual(M)[0]


def hom_to_regular_map(f: ModuleHom) -> ModuleHom:
    """``F(f): F(N) -> F(M)`` by precomposition, for ``f: M -> N``."""
    FM, sm = regular_dual(f.source)
    FN, sn = regular_dual(f.target)
    blocks = []
    for w in range(len(sm)):
        cols = [sm[w].coordinates(phi @ f) for phi in sn[w].basis]
        blocks.append(np.stack(cols, axis=1) if cols else linalg.zeros(sm[w].dim, 0))
    return ModuleHom(FN, FM, blocks, check=False)


def regular_dual_unit(M: Module) -> ModuleHom:
    """Evaluation ``M -> F°F(M)``, ``x -> (phi -> phi(x))``."""
    A = M.algebra
    FM, spaces = regular_dual(M)
    FFM, outer = regular_dual(FM)
    blocks = []
    for v in range(A.num_vertices):
        cols = []
        for k in range(M.dims[v]):
            x = np.zeros(M.dims[v], dtype=np.int64)
            x[k] = 1
            ev_blocks = []
            for w in range(A.num_vertices):
                vals = [linalg.matmul(phi.blocks[v], x, M.p) for phi in spaces[w].basis]
                ev_blocks.append(np.stack(vals, axis=1) if vals else linalg.zeros(len(A.paths_between(v, w)), 0))
            ev = ModuleHom(FM, outer[v].target, ev_blocks)
            cols.append(outer[v].coordinates(ev))
        blocks.append(np.stack(cols, axis=1) if cols else linalg.zeros(FFM.dims[v], 0))
    return ModuleHom(M, FFM, blocks)


def nakayama(M: Module) -> Module:
    """``nu M = D Hom_A(M, A)``."""
    return dualize(hom_to_regular(M))


# ---------------------------------------------------------------------------
# isomorphism and summand tests (randomised, three-valued)
# ---------------------------------------------------------------------------


@dataclass
class Verdict:
    """Outcome of a randomised test: ``"yes"`` (with witness), ``"no"`` or ``"unknown"``."""

    answer: str
    witness: object = None
    reason: str = ""

    def __bool__(self):
        return self.answer == "yes"

    @property
    def qualifier(self) -> str:
        return {"yes": "certain (explicit witness)", "no": "certain",
                "unknown": "probabilistic: no witness found"}[self.answer]


def is_isomorphic(M: Module, N: Module, trials: int = 8, seed: int = 0) -> Verdict:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if M.dims != N.dims:
        return Verdict("no", reason="dimension vectors differ")
    if M.is_zero():
        return Verdict("yes", zero_hom(M, N), "both zero")
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("isomorphism test across algebras")
    if M == N:
        return Verdict("yes", identity_hom(M), "identical data")
    H = hom_space(M, N)
    if H.dim != hom_space(N, M).dim:
        return Verdict("no", reason="dim Hom(M,N) != dim Hom(N,M)")
    for h in H.basis:
        if h.is_iso():
            return Verdict("yes", h, "basis element invertible")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        h = H.random(rng)
        if h.is_iso():
            return Verdict("yes", h, "random element invertible")
    return Verdict("unknown", reason=f"no invertible element in {trials} samples")


def is_summand(X: Module, Y: Module, trials: int = 8, seed: int = 0) -> Verdict:
    """Is ``X`` isomorphic to a direct summand of ``Y``?

    A "yes" carries ``(f, g)`` with ``g o f`` invertible, which is a proof.
    """
    if any(x > y for x, y in zip(X.dims, Y.dims)):
        return Verdict("no", reason="dimension vector too large")
    if X.is_zero():
        return Verdict("yes", None, "zero module")
    if X.dims == Y.dims:
        v = is_isomorphic(X, Y, trials, seed)
        if v.answer == "yes":
            return Verdict("yes", (v.witness, v.witness.inverse()), v.reason)
        return v
    F, G = hom_space(X, Y), hom_space(Y, X)
    if not F.dim or not G.dim:
        return Verdict("no", reason="no nonzero maps")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f, g = F.random(rng), G.random(rng)
        if (g @ f).is_iso():
            return Verdict("yes", (f, g), "split monomorphism found")
    return Verdict("unknown", reason=f"no split pair in {trials} samples")


def random_module(A: Algebra, rng, max_generators: int = 3, max_relations: int = 3) -> Module:
    """A random quotient of a random free module (deterministic in ``rng``)."""
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    ng = int(rng.integers(1, max_generators + 1))
    gens = sorted(int(v) for v in rng.integers(0, A.num_vertices, size=ng))
    P = free_module(A, gens)
    nr = int(rng.integers(0, max_relations + 1))
    spans = [linalg.zeros(d, 0) for d in P.dims]
    for _ in range(nr):
        v = int(rng.integers(0, A.num_vertices))
        if P.dims[v] == 0:
            continue
        x = linalg.random_matrix(P.dims[v], 1, rng, A.prime)
        # sparsify so the relations are not all generic
        x[rng.random(P.dims[v]) < 0.5] = 0
        spans[v] = np.hstack([spans[v], x])
    sub = generated_submodule(P, spans)
    return quotient_by_spans(P, sub)[0]


def generated_submodule(M: Module, vectors) -> list[np.ndarray]:
    """Vertexwise bases of the submodule generated by the given columns."""
    p = M.p
    q = M.algebra.quiver
    spans = [linalg.image_basis(_cols(v, M.dims[i]), p)
             for i, v in enumerate(vectors)]
    changed = True
    while changed:
        changed = False
        for a in range(len(q.arrows)):
            i, j = q.src[a], q.tgt[a]
            if spans[i].shape[1] == 0:
                continue
            new = np.hstack([spans[j], linalg.matmul(M.action[a], spans[i], p)])
            b = linalg.image_basis(new, p)
            if b.shape[1] > spans[j].shape[1]:
                spans[j] = b
                changed = True
    return spans
