"""Exact Gorenstein homological algebra for quiver algebras ``kQ/(I + J^N)`` over ``F_p``."""

from .algebra import Algebra, AlgebraPresentation, Quiver, Relation, compile_presentation, path_algebra
from .gorenstein import (
    GorensteinCertificate,
    NotCertifiedError,
    am_sequence_check,
    certify_ig,
    complete_resolution,
    gdim,
    gorenstein_ext,
    gorenstein_ext_direct,
    is_gp,
    realize_ge1,
    special_approximation,
    tate_ext,
)
from .modcat import Module, ModuleHom, ShortExactSequence, simple, vertex_injective, vertex_projective
from .resolve import HomologicalDimension, ext, injective_dimension, min_projective_resolution, pd

__version__ = "0.1.0"

__all__ = [
    "Algebra", "AlgebraPresentation", "Quiver", "Relation", "compile_presentation", "path_algebra",
    "Module", "ModuleHom", "ShortExactSequence", "simple", "vertex_projective", "vertex_injective",
    "HomologicalDimension", "ext", "pd", "injective_dimension", "min_projective_resolution",
    "GorensteinCertificate", "NotCertifiedError", "certify_ig", "gdim", "is_gp", "gorenstein_ext",
    "gorenstein_ext_direct", "tate_ext", "complete_resolution", "special_approximation",
    "am_sequence_check", "realize_ge1",
]
