"""The two small diagram lemmas used to build Gorenstein approximations.

``baby_horseshoe`` stacks two short exact sequences ``X >-> P ->> X1`` and
``Z >-> Q ->> Z1`` over an extension ``X >-> Y ->> Z``; ``baby_comparison``
extends a morphism ``Y -> Z`` to a ladder between ``Y >-> P ->> Y1`` and
``Z >-> Q ->> Z1`` and, for epimorphisms, extracts the four-term sequence
``0 -> ker a -> P -> Q + Y1 -> Z1 -> 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modcat import (
    ModuleError,
    ModuleHom,
    ShortExactSequence,
    cokernel,
    descend,
    direct_sum,
    factors_through,
    kernel,
)
from .resolve import ext


class ExtObstruction(ValueError):
    """The Ext^1 group needed to extend a morphism does not vanish."""


def _require_ext1_zero(M, N, what: str):
    e = ext(M, N, 1).dimension
    if e:
        raise ExtObstruction(f"Ext^1({what}) has dimension {e}, expected 0")


@dataclass(frozen=True)
class Horseshoe:
    """Rows ``X >-> P ->> X1``, ``Y >-> P+Q ->> Y1``, ``Z >-> Q ->> Z1`` and the
    three columns ``X >-> Y ->> Z``, ``P >-> P+Q ->> Q``, ``X1 >-> Y1 ->> Z1``."""

    top: ShortExactSequence
    middle: ShortExactSequence
    bottom: ShortExactSequence
    left: ShortExactSequence
    centre: ShortExactSequence
    right: ShortExactSequence

    @property
    def Y1(self):
        return self.middle.right


def baby_horseshoe(ses_X: ShortExactSequence, ses_Z: ShortExactSequence,
                   ses_mid: ShortExactSequence) -> Horseshoe:
    iX, pX = ses_X.inclusion, ses_X.projection
    iZ, pZ = ses_Z.inclusion, ses_Z.projection
    j, q = ses_mid.inclusion, ses_mid.projection
    if j.source != iX.source or q.target != iZ.source:
        raise ModuleError("sequences do not fit together")
    P, Q = iX.target, iZ.target
    _require_ext1_zero(q.target, P, "Z, P")
    phi = factors_through(iX, j, side="pre")  # phi o j = iX
    if phi is None:
        raise ExtObstruction("X -> P does not extend over Y")
    PQ, incs, projs = direct_sum([P, Q])
    mid_in = incs[0] @ phi + incs[1] @ iZ @ q
    Y1, mid_out = cokernel(mid_in)
    x1_to_y1 = descend(mid_out @ incs[0], pX)
    y1_to_z1 = descend(pZ @ projs[1], mid_out)
    return Horseshoe(
        top=ses_X,
        middle=ShortExactSequence(mid_in, mid_out),
        bottom=ses_Z,
        left=ses_mid,
        centre=ShortExactSequence(incs[0], projs[1]),
        right=ShortExactSequence(x1_to_y1, y1_to_z1),
    )


@dataclass(frozen=True)
class Comparison:
    """Ladder ``(alpha, beta, gamma)`` and, for epi ``alpha``, the exact
    sequence ``0 -> ker alpha -> P -> Q + Y1 -> Z1 -> 0``."""

    alpha: ModuleHom
    beta: ModuleHom
    gamma: ModuleHom
    four_term: tuple | None  # (k: ker -> P, m: P -> Q+Y1, e: Q+Y1 -> Z1)

    @property
    def middle_sum(self):
        return None if self.four_term is None else self.four_term[1].target


def is_exact_at(f: ModuleHom, g: ModuleHom) -> bool:
    """``im f = ker g`` for ``f: A -> B``, ``g: B -> C``."""
    if not (g @ f).is_zero():
        return False
    return all(rf + rg == d for rf, rg, d in zip(f.ranks(), g.ranks(), f.target.dims))


def baby_comparison(ses_Y: ShortExactSequence, ses_Z: ShortExactSequence,
                    alpha: ModuleHom) -> Comparison:
    iY, pY = ses_Y.inclusion, ses_Y.projection
    iZ, pZ = ses_Z.inclusion, ses_Z.projection
    if alpha.source != iY.source or alpha.target != iZ.source:
        raise ModuleError("alpha does not connect the left ends")
    Q = iZ.target
    _require_ext1_zero(pY.target, Q, "Y1, Q")
    beta = factors_through(iZ @ alpha, iY, side="pre")  # beta o iY = iZ o alpha
    if beta is None:
        raise ExtObstruction("iZ o alpha does not extend over P")
    gamma = descend(pZ @ beta, pY)
    four = None
    if alpha.is_epi():
        _, k = kernel(alpha)
        S, incs, projs = direct_sum([Q, pY.target])
        m = incs[0] @ beta - incs[1] @ pY
        e = pZ @ projs[0] + gamma @ projs[1]
        k = iY @ k
        if not (k.is_mono() and e.is_epi() and is_exact_at(k, m) and is_exact_at(m, e)):
            raise ModuleError("four-term sequence failed its exactness check")
        four = (k, m, e)
    return Comparison(alpha, beta, gamma, four)
