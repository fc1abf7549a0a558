"""Nonsymmetric Macdonald polynomials at q = infinity, the Satake basis of
the Iwahori-spherical module, and matrix coefficients of unramified
principal series.

Typical use::

    from heckemac import build_root_system, Lattice, generic_context, E
    R = build_root_system("A", 2)
    ctx = generic_context(R, Lattice.P(R))
    print(E(ctx, (1, -1)))
"""

from .coeffs import GroupAlgebraElement, Namespace, ParamScalar
from .hecke import HeckeContext, generic_context
from .kernels import IMPLEMENTATION
from .macdonald import E, demazure_limit, limit_t_infinity, normalizer
from .rootdata import Lattice, RootSystem, build_root_system, orbit_table
from .satake import (
    SatakeData,
    UnramifiedCharacter,
    delta_P,
    matrix_coefficient,
    satake_E,
    split_data,
    vol_ItlamK,
)
from .weyl import AffineWeylGroup, WeylElement, weyl_group

__all__ = [
    "GroupAlgebraElement", "Namespace", "ParamScalar", "HeckeContext",
    "generic_context", "IMPLEMENTATION", "E", "demazure_limit", "limit_t_infinity",
    "normalizer", "Lattice", "RootSystem", "build_root_system", "orbit_table",
    "SatakeData", "UnramifiedCharacter", "delta_P", "matrix_coefficient", "satake_E",
    "split_data", "vol_ItlamK", "AffineWeylGroup", "WeylElement", "weyl_group",
]
