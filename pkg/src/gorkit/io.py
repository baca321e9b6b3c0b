"""JSON formats for algebras, modules and algebra extensions.

Algebra::

    {"field": {"prime": 32003},
     "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}]},
     "relations": [{"terms": [{"coef": 1, "path": ["a", "b"]}]}],
     "nilpotency_bound": 2}

Paths list arrows in traversal order.  Module::

    {"algebra": "e2.json" | {...inline...}, "dims": {"1": 1, "2": 1}, "action": {"a": [[1]]}}

Missing arrows act by zero.  Extension::

    {"sub": ..., "big": ..., "embedding": {"x": [0, 1, 0, ...]}, "alpha": [[...]]}

``embedding`` maps basis labels of ``sub`` to coordinate vectors over the
basis of ``big`` (omitted entries default to the path with the same label);
``alpha`` defaults to the identity.
"""

from __future__ import annotations

import json
import os
from pathlib import Path as FsPath

import numpy as np

from .algebra import Algebra, AlgebraPresentation, PresentationError, Quiver, Relation, compile_presentation
from .linalg import DEFAULT_PRIME, check_prime
from .modcat import Module, ModuleError


class InvalidFile(ValueError):
    """A JSON input is unreadable or describes an invalid object."""


def _read(source, base: FsPath | None):
    """``(data, directory)`` for a path, a JSON string or an already-parsed dict."""
    if isinstance(source, dict):
        return source, base
    path = FsPath(source)
    if base is not None and not path.is_absolute():
        path = base / path
    try:
        return json.loads(path.read_text()), path.parent
    except FileNotFoundError:
        raise InvalidFile(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InvalidFile(f"{path}: not valid JSON ({exc})") from None


def _need(data: dict, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise InvalidFile(f"{where}: missing field {key!r}")
    return data[key]


# -- algebras ------------------------------------------------------------------


def presentation_from_json(data: dict, prime: int | None = None) -> AlgebraPresentation:
    q = _need(data, "quiver", "algebra")
    vertices = [str(v) for v in _need(q, "vertices", "quiver")]
    arrows = [(str(_need(a, "name", "arrow")), str(_need(a, "from", "arrow")), str(_need(a, "to", "arrow")))
              for a in q.get("arrows", [])]
    if prime is None:
        prime = int(data.get("field", {}).get("prime", DEFAULT_PRIME))
    rels = []
    for r in data.get("relations", []):
        terms = [(int(_need(t, "coef", "relation term")) % prime, tuple(_need(t, "path", "relation term")))
                 for t in _need(r, "terms", "relation")]
        rels.append(Relation(tuple(terms)))
    try:
        check_prime(prime)
        return AlgebraPresentation(Quiver(vertices, arrows), tuple(rels), int(data.get("nilpotency_bound", 2)), prime)
    except (PresentationError, ValueError) as exc:
        raise InvalidFile(f"algebra: {exc}") from None


def load_algebra(source, prime: int | None = None, base: FsPath | None = None) -> Algebra:
    """``prime``, when given, overrides the file's ``field.prime``."""
    data, _ = _read(source, base)
    try:
        return compile_presentation(presentation_from_json(data, prime))
    except PresentationError as exc:
        raise InvalidFile(f"algebra: {exc}") from None


def algebra_to_json(A: Algebra) -> dict:
    pres = A.presentation
    return {
        "field": {"prime": pres.prime},
        "quiver": {
            "vertices": list(pres.quiver.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in pres.quiver.arrows],
        },
        "relations": [{"terms": [{"coef": int(c), "path": list(path)} for c, path in r.terms]}
                      for r in pres.relations],
        "nilpotency_bound": pres.nilpotency_bound,
    }


# -- modules -------------------------------------------------------------------


def module_from_json(data: dict, A: Algebra) -> Module:
    q = A.quiver
    dims_in = _need(data, "dims", "module")
    unknown = set(map(str, dims_in)) - set(q.vertices)
    if unknown:
        raise InvalidFile(f"module: unknown vertices {sorted(unknown)}")
    dims = [int(dims_in.get(v, 0)) for v in q.vertices]
    acts_in = data.get("action", {})
    unknown = set(acts_in) - set(q.arrow_index)
    if unknown:
        raise InvalidFile(f"module: unknown arrows {sorted(unknown)}")
    acts = []
    for a, arrow in enumerate(q.arrows):
        shape = (dims[q.tgt[a]], dims[q.src[a]])
        m = np.asarray(acts_in.get(arrow.name, np.zeros(shape, np.int64)), dtype=np.int64)
        if m.size == 0:
            m = np.zeros(shape, np.int64)
        if m.shape != shape:
            raise InvalidFile(f"module: arrow {arrow.name} needs a {shape[0]}x{shape[1]} matrix, got {m.shape}")
        acts.append(m)
    try:
        return Module(A, dims, acts, name=data.get("name"))
    except ModuleError as exc:
        raise InvalidFile(f"module: {exc}") from None


def load_module(source, A: Algebra | None = None, prime: int | None = None, base: FsPath | None = None) -> Module:
    """Load a module; its ``algebra`` entry is used unless ``A`` is supplied."""
    data, here = _read(source, base)
    if A is None:
        A = load_algebra(_need(data, "algebra", "module"), prime, here)
    return module_from_json(data, A)


def module_to_json(M: Module, algebra=None) -> dict:
    q = M.algebra.quiver
    return {
        "algebra": algebra_to_json(M.algebra) if algebra is None else algebra,
        "dims": {v: d for v, d in zip(q.vertices, M.dims)},
        "action": {a.name: M.action[i].tolist() for i, a in enumerate(q.arrows)},
    }


# -- extensions ----------------------------------------------------------------


def load_extension(source, prime: int | None = None, base: FsPath | None = None):
    """``(embedding, alpha)`` from an extension file."""
    from .frobext import AlgebraEmbedding, NotAutomorphismError, check_automorphism

    data, here = _read(source, base)
    S = load_algebra(_need(data, "sub", "extension"), prime, here)
    R = load_algebra(_need(data, "big", "extension"), prime, here)
    given = data.get("embedding", {}) or {}
    cols = []
    try:
        for i in range(S.dimension):
            lab = S.label(i)
            cols.append(np.asarray(given[lab], np.int64) if lab in given else R.element_from_label(lab))
        emb = AlgebraEmbedding(S, R, np.stack(cols, axis=1))
        alpha = data.get("alpha")
        alpha = np.eye(S.dimension, dtype=np.int64) if alpha is None else check_automorphism(S, alpha)
    except (KeyError, ValueError, NotAutomorphismError) as exc:
        raise InvalidFile(f"extension: {exc}") from None
    return emb, alpha


def extension_to_json(emb, alpha=None, sub=None, big=None) -> dict:
    out = {
        "sub": algebra_to_json(emb.sub) if sub is None else sub,
        "big": algebra_to_json(emb.big) if big is None else big,
        "embedding": {emb.sub.label(i): emb.map[:, i].tolist() for i in range(emb.sub.dimension)},
    }
    if alpha is not None:
        out["alpha"] = np.asarray(alpha).tolist()
    return out


def dump(obj: dict, path) -> None:
    FsPath(path).write_text(json.dumps(obj, indent=2) + "\n")


def data_path(name: str) -> str:
    """Path of a bundled example file (``e1.json``, ``e2_s1.json``, ...)."""
    return os.path.join(os.path.dirname(__file__), "data", name)
