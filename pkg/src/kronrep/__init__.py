"""Exact computations for generalized Kronecker quivers.

The library classifies dimension vectors of the r-arrow Kronecker quiver,
decides the equal-kernels and equal-images predicates through the Tits
form, walks Coxeter orbits to their property boundaries, verifies the
underlying arithmetic facts by exhaustive scans, checks concrete matrix
representations over prime fields, and moves between tree-cover fragments
and their push-downs.
"""

from .exactnum import QuadNum, lr
from .kronecker import (
    DimVec,
    RootClass,
    classify,
    coxeter,
    coxeter_inv,
    ekp_dim,
    ekp_or_eip_dim,
    eip_dim,
    inj_dim,
    kronecker_quiver,
    loewy_inequality,
    proj_dim,
    q_r,
    westwick_necessary,
)
from .linalg import FieldSpec
from .linrep import KronRep
from .quiver import QuiverDesc, RootType, euler_form, positive_root_type, tits_form

__version__ = "0.1.0"

__all__ = [
    "DimVec",
    "FieldSpec",
    "KronRep",
    "QuadNum",
    "QuiverDesc",
    "RootClass",
    "RootType",
    "classify",
    "coxeter",
    "coxeter_inv",
    "ekp_dim",
    "ekp_or_eip_dim",
    "eip_dim",
    "euler_form",
    "inj_dim",
    "kronecker_quiver",
    "loewy_inequality",
    "lr",
    "positive_root_type",
    "proj_dim",
    "q_r",
    "tits_form",
    "westwick_necessary",
]
