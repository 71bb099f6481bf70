"""Exact construction and verification of two 32-dimensional Radford biproducts."""
from .exact_math import GaussianRational, Subspace
from .hopf_core import HopfAlgebra, HopfMorphism, dual_hopf, verify_hopf
from .catalog import build_context, build_Hd11, canonical_morphisms, fixtures

__all__ = ["GaussianRational", "Subspace", "HopfAlgebra", "HopfMorphism", "dual_hopf",
           "verify_hopf", "build_context", "build_Hd11", "canonical_morphisms", "fixtures"]
