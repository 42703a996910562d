"""Semisimple Hessenberg varieties: irreducible components, singular loci,
GKM graphs and patch ideals."""

from .components import (component_data, component_reps, make_semisimple,
                         standard_hessenberg)
from .gkm import build_gkm, to_dot
from .kernels import BACKEND
from .patch import patch_ideal, singular_scan, verify_against_combinatorics
from .roots import build_root_system
from .weyl import WeylGroup

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "WeylGroup",
    "build_gkm",
    "build_root_system",
    "component_data",
    "component_reps",
    "make_semisimple",
    "patch_ideal",
    "singular_scan",
    "standard_hessenberg",
    "to_dot",
    "verify_against_combinatorics",
]
