"""Quivers with relations compiled into finite-dimensional algebras.

Conventions
-----------
A path is written in *traversal order*: ``[a, b]`` means "first ``a``, then
``b``" and requires ``target(a) == source(b)``.  As an algebra element that
path is the product ``b * a``, so left modules are quiver representations
with arrow ``a: i -> j`` acting by a ``dims[j] x dims[i]`` matrix.  With this
convention ``A e_v`` is spanned by paths starting at ``v`` and ``e_v A`` by
paths ending at ``v``.

The algebra attached to a presentation is ``kQ / (I + J^N)``: the ideal is
reduced by plain linear algebra on the span of paths of length ``< N``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import linalg
from .linalg import DEFAULT_PRIME


_TOKENS = itertools.count()


class PresentationError(ValueError):
    """Raised for malformed quivers, relations or nilpotency bounds."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow | tuple]):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        if not self.vertices:
            raise PresentationError("quiver has no vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow names")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in self.vertex_index:
                    raise PresentationError(f"arrow {a.name!r} uses undeclared vertex {end!r}")
        self.src = [self.vertex_index[a.source] for a in self.arrows]
        self.tgt = [self.vertex_index[a.target] for a in self.arrows]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, each a tuple of arrow names."""

    terms: tuple[tuple[int, tuple[str, ...]], ...]

    @classmethod
    def of(cls, *terms) -> "Relation":
        return cls(tuple((int(c), tuple(path)) for c, path in terms))

    @classmethod
    def monomial(cls, *path: str) -> "Relation":
        return cls(((1, tuple(path)),))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(path))) for c, path in self.terms))


@dataclass(frozen=True)
class AlgebraPresentation:
    quiver: Quiver
    relations: tuple[Relation, ...] = ()
    nilpotency_bound: int = 2
    prime: int = DEFAULT_PRIME

    def opposite(self) -> "AlgebraPresentation":
        return AlgebraPresentation(
            self.quiver.opposite(),
            tuple(r.reversed() for r in self.relations),
            self.nilpotency_bound,
            self.prime,
        )


class Path(NamedTuple):
    source: int
    target: int
    arrows: tuple[int, ...]

    def __len__(self):  # path length, not tuple length
        return len(self.arrows)


def _enumerate_paths(quiver: Quiver, max_len: int) -> list[Path]:
    """All paths of length ``<= max_len`` in length-lexicographic order."""
    out = [Path(v, v, ()) for v in range(len(quiver.vertices))]
    layer = [p for p in out]
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for a in range(len(quiver.arrows)):
                if quiver.src[a] == p.target:
                    nxt.append(Path(p.source, quiver.tgt[a], p.arrows + (a,)))
        nxt.sort(key=lambda q: q.arrows)
        out.extend(nxt)
        layer = nxt
    return out


def _relation_paths(pres: AlgebraPresentation, rel: Relation) -> list[tuple[int, Path]]:
    q = pres.quiver
    terms = []
    for coef, names in rel.terms:
        c = int(coef) % pres.prime
        if c == 0:
            continue
        if not names:
            raise PresentationError("relations must lie in the arrow ideal (no trivial paths)")
        try:
            idx = tuple(q.arrow_index[n] for n in names)
        except KeyError as exc:
            raise PresentationError(f"relation uses unknown arrow {exc.args[0]!r}") from None
        for a, b in zip(idx, idx[1:]):
            if q.tgt[a] != q.src[b]:
                raise PresentationError(f"path {'.'.join(names)} is not composable")
        terms.append((c, Path(q.src[idx[0]], q.tgt[idx[-1]], idx)))
    if not terms:
        raise PresentationError("relation has no nonzero coefficient")
    ends = {(p.source, p.target) for _, p in terms}
    if len(ends) != 1:
        raise PresentationError("relation terms are not parallel paths")
    return terms


class Algebra:
    """A compiled finite-dimensional algebra with explicit path basis.

    ``mult[i, j]`` is the coefficient vector of ``basis[i] * basis[j]``.
    """

    def __init__(self, presentation, basis, mult, reduce_matrix, paths, _opposite_of=None):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.prime = presentation.prime
        self.basis: list[Path] = basis
        self.mult = mult
        self.mult.setflags(write=False)
        self._reduce = reduce_matrix
        self._paths = paths
        self._path_index = {p: i for i, p in enumerate(paths)}
        self.dimension = len(basis)
        self.num_vertices = len(self.quiver.vertices)
        self.idempotents = [basis.index(Path(v, v, ())) for v in range(self.num_vertices)]
        self._between: dict[tuple[int, int], list[int]] = {}
        for i, b in enumerate(basis):
            self._between.setdefault((b.target, b.source), []).append(i)
        self.arrow_elements = [self.reduce_path((a,)) for a in range(len(self.quiver.arrows))]
        self._opposite = _opposite_of
        h = hashlib.sha256()
        h.update(repr((self.prime, self.quiver.vertices, self.quiver.arrows, basis)).encode())
        h.update(np.ascontiguousarray(mult).tobytes())
        self.fingerprint = h.hexdigest()[:16]
        # distinguishes algebra objects (an algebra and its opposite may share a fingerprint)
        self.token = next(_TOKENS)

    # -- basis bookkeeping -------------------------------------------------
    def paths_between(self, target: int, source: int) -> list[int]:
        """Basis indices of ``e_target A e_source`` (paths from source to target)."""
        return self._between.get((target, source), [])

    def reduce_path(self, arrows: tuple[int, ...], source: int | None = None) -> np.ndarray:
        """Coefficient vector of a path given by arrow indices (traversal order)."""
        if not arrows:
            out = np.zeros(self.dimension, dtype=np.int64)
            out[self.idempotents[source]] = 1
            return out
        q = self.quiver
        path = Path(q.src[arrows[0]], q.tgt[arrows[-1]], tuple(arrows))
        k = self._path_index.get(path)
        if k is None:
            return np.zeros(self.dimension, dtype=np.int64)
        return self._reduce[:, k].copy()

    def label(self, i: int) -> str:
        b = self.basis[i]
        if not b.arrows:
            return f"e_{self.quiver.vertices[b.source]}"
        return ".".join(self.quiver.arrows[a].name for a in b.arrows)

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dimension)]

    def element_from_label(self, label: str) -> np.ndarray:
        if label.startswith("e_") and label[2:] in self.quiver.vertex_index:
            return self.reduce_path((), self.quiver.vertex_index[label[2:]])
        try:
            arrows = tuple(self.quiver.arrow_index[n] for n in label.split("."))
        except KeyError:
            raise KeyError(f"unknown path label {label!r}") from None
        return self.reduce_path(arrows)

    # -- arithmetic ---------------------------------------------------------
    @property
    def one(self) -> np.ndarray:
        out = np.zeros(self.dimension, dtype=np.int64)
        out[self.idempotents] = 1
        return out

    def multiply(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.mod(np.einsum("i,j,ijk->k", x, y, self.mult), self.prime)

    def left_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> x*y`` on coefficient vectors."""
        return np.mod(np.einsum("i,ijk->kj", np.asarray(x, dtype=np.int64), self.mult), self.prime)

    def right_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> y*x`` on coefficient vectors."""
        return np.mod(np.einsum("j,ijk->ki", np.asarray(x, dtype=np.int64), self.mult), self.prime)

    def is_associative(self) -> bool:
        m = self.mult
        left = np.mod(np.einsum("ijk,klm->ijlm", m, m), self.prime)   # (b_i b_j) b_l
        right = np.mod(np.einsum("jlk,ikm->ijlm", m, m), self.prime)  # b_i (b_j b_l)
        return bool(np.array_equal(left, right))

    def opposite(self) -> "Algebra":
        if self._opposite is None:
            pres = self.presentation.opposite()
            basis = [Path(b.target, b.source, tuple(reversed(b.arrows))) for b in self.basis]
            paths = [Path(b.target, b.source, tuple(reversed(b.arrows))) for b in self._paths]
            mult = np.ascontiguousarray(np.transpose(self.mult, (1, 0, 2)))
            self._opposite = Algebra(pres, basis, mult, self._reduce, paths, _opposite_of=self)
        return self._opposite

    def __repr__(self):
        return f"Algebra(dim={self.dimension}, vertices={list(self.quiver.vertices)}, p={self.prime})"


def compile_presentation(pres: AlgebraPresentation) -> Algebra:
    """Compile ``kQ / (I + J^N)`` to a basis and multiplication table."""
    N = int(pres.nilpotency_bound)
    if N < 1:
        raise PresentationError("nilpotency bound must be >= 1")
    linalg.check_prime(pres.prime)
    p = pres.prime
    q = pres.quiver
    paths = _enumerate_paths(q, N - 1)
    index = {path: i for i, path in enumerate(paths)}
    n = len(paths)

    rows = []
    rel_terms = [_relation_paths(pres, r) for r in pres.relations]
    by_target: dict[int, list[Path]] = {}
    by_source: dict[int, list[Path]] = {}
    for path in paths:
        by_source.setdefault(path.source, []).append(path)
        by_target.setdefault(path.target, []).append(path)
    for terms in rel_terms:
        s, t = terms[0][1].source, terms[0][1].target
        for w in by_target.get(s, []):          # traversed before the relation
            for u in by_source.get(t, []):      # traversed after
                row = np.zeros(n, dtype=np.int64)
                for c, path in terms:
                    k = index.get(Path(w.source, u.target, w.arrows + path.arrows + u.arrows))
                    if k is not None:
                        row[k] = (row[k] + c) % p
                if row.any():
                    rows.append(row)

    # pivot on the largest paths so the surviving basis consists of small paths
    order = np.arange(n)[::-1]
    if rows:
        R, piv = linalg.rref(np.array(rows)[:, order], p)
        piv_paths = [int(order[c]) for c in piv]
    else:
        R, piv, piv_paths = None, [], []
    pivot_set = set(piv_paths)
    basis_idx = [k for k in range(n) if k not in pivot_set]
    pos = {k: i for i, k in enumerate(basis_idx)}
    reduce_matrix = np.zeros((len(basis_idx), n), dtype=np.int64)
    for k in basis_idx:
        reduce_matrix[pos[k], k] = 1
    for r, k in enumerate(piv_paths):
        row = R[r][np.argsort(order)]  # back to natural column order
        for j in basis_idx:
            if row[j]:
                reduce_matrix[pos[j], k] = (-row[j]) % p
    basis = [paths[k] for k in basis_idx]

    d = len(basis)
    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if bj.target != bi.source:
                continue
            k = index.get(Path(bj.source, bi.target, bj.arrows + bi.arrows))
            if k is not None:
                mult[i, j] = reduce_matrix[:, k]
    return Algebra(pres, basis, mult, reduce_matrix, paths)


def truncation_warnings(pres: AlgebraPresentation) -> list[str]:
    """Paths of length ``N`` that survive the relations alone.

    These are exactly the elements removed by the ``J^N`` truncation; an
    empty list means the bound did not change the algebra at length ``N``.
    """
    wider = AlgebraPresentation(pres.quiver, pres.relations, pres.nilpotency_bound + 1, pres.prime)
    A = compile_presentation(wider)
    N = pres.nilpotency_bound
    return [A.label(i) for i, b in enumerate(A.basis) if len(b.arrows) == N]


def opposite(A: Algebra) -> Algebra:
    return A.opposite()


def path_algebra(vertices, arrows, relations=(), nilpotency_bound=2, prime=DEFAULT_PRIME) -> Algebra:
    """Shorthand: ``arrows`` as ``(name, source, target)`` and relations as
    lists of ``(coef, [arrow names])`` or bare paths (monomial relations)."""
    rels = []
    for r in relations:
        if isinstance(r, Relation):
            rels.append(r)
        elif r and isinstance(r[0], str):
            rels.append(Relation.monomial(*r))
        else:
            rels.append(Relation.of(*r))
    pres = AlgebraPresentation(Quiver(vertices, arrows), tuple(rels), nilpotency_bound, prime)
    return compile_presentation(pres)


def __getattr__(name):
    # module-level constructions that live with the module category code
    if name in ("vertex_projective", "dualize", "hom_to_regular"):
        from . import modcat

        return getattr(modcat, name)
    raise AttributeError(name)
