"""The small algebras used throughout the tests, demos and CLI.

========  =================================================  ==========
name      algebra                                            IG degree
========  =================================================  ==========
``k``     the ground field                                   0
``e1``    ``k[x]/(x^2)``                                     0
``e2``    path algebra of ``1 -> 2``                         1
``e3``    two loops ``x, y`` with radical square zero        not IG
``e4``    ``e2[t]/(t^2)``, ``t`` central                     1
``e5``    ``k[x]/(x^3)``                                     0
========  =================================================  ==========
"""

from __future__ import annotations

import functools

from .algebra import Algebra, path_algebra
from .linalg import DEFAULT_PRIME


@functools.lru_cache(maxsize=None)
def _build(name: str, prime: int):
    # one cache keyed on explicit arguments: e4() and e4(DEFAULT_PRIME) must
    # share their algebra objects
    if name == "k":
        return path_algebra(["1"], [], [], 1, prime)
    if name == "e1":
        return path_algebra(["1"], [("x", "1", "1")], [["x", "x"]], 2, prime)
    if name == "e2":
        return path_algebra(["1", "2"], [("a", "1", "2")], [], 2, prime)
    if name == "e3":
        xy = [["x", "x"], ["x", "y"], ["y", "x"], ["y", "y"]]
        return path_algebra(["1"], [("x", "1", "1"), ("y", "1", "1")], xy, 2, prime)
    if name == "e4/e2":
        from .frobext import central_nilpotent

        return central_nilpotent(_build("e2", prime))
    if name == "e5":
        return path_algebra(["1"], [("x", "1", "1")], [["x", "x", "x"]], 4, prime)
    raise KeyError(name)


def field(prime: int = DEFAULT_PRIME) -> Algebra:
    return _build("k", prime)


def e1(prime: int = DEFAULT_PRIME) -> Algebra:
    return _build("e1", prime)


def e2(prime: int = DEFAULT_PRIME) -> Algebra:
    return _build("e2", prime)


def e3(prime: int = DEFAULT_PRIME) -> Algebra:
    return _build("e3", prime)


def e4_extension(prime: int = DEFAULT_PRIME):
    """The embedding ``e2 -> e4``."""
    return _build("e4/e2", prime)


def e4(prime: int = DEFAULT_PRIME) -> Algebra:
    return e4_extension(prime).big


def e5(prime: int = DEFAULT_PRIME) -> Algebra:
    return _build("e5", prime)


ALGEBRAS = {"k": field, "e1": e1, "e2": e2, "e3": e3, "e4": e4, "e5": e5}


def by_name(name: str, prime: int = DEFAULT_PRIME) -> Algebra:
    try:
        return ALGEBRAS[name.lower()](prime)
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(ALGEBRAS)}") from None
