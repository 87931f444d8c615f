"""Exact computations around finite subgroups of SL(2,C) and the Kleinian
surface singularities: binary polyhedral groups, character tables, McKay
graphs, Milnor algebras, spectra, Coxeter elements and orbifold sectors.

All arithmetic in the underlying C++ core is exact (rationals and cyclotomic
fields); the dictionaries returned here serialize rationals as "p/q" strings.
"""

import json as _json

try:
    from ._kleinian import (  # installed package layout
        UsageError,
        InternalError,
        group_json as _group_json,
        chartable_json as _chartable_json,
        quiver_json as _quiver_json,
        quiver_dot as _quiver_dot,
        spectrum_json as _spectrum_json,
        coxeter_json as _coxeter_json,
        orbifold_json as _orbifold_json,
        verify_json as _verify_json,
    )
except ImportError:  # in-tree build: module sits next to the package on sys.path
    from _kleinian import (
        UsageError,
        InternalError,
        group_json as _group_json,
        chartable_json as _chartable_json,
        quiver_json as _quiver_json,
        quiver_dot as _quiver_dot,
        spectrum_json as _spectrum_json,
        coxeter_json as _coxeter_json,
        orbifold_json as _orbifold_json,
        verify_json as _verify_json,
    )

__all__ = [
    "group",
    "character_table",
    "quiver",
    "quiver_dot",
    "spectrum",
    "coxeter",
    "orbifold",
    "verify",
    "UsageError",
    "InternalError",
]

__version__ = "0.1.0"


def group(family, rank=0):
    """Enumerated group data: order, cyclotomic field, conjugacy classes."""
    return _json.loads(_group_json(family, rank))


def character_table(family, rank=0):
    """Exact character table; values are cyclotomic expressions in z = zeta_e."""
    return _json.loads(_chartable_json(family, rank))


def quiver(family, rank=0):
    """Extended McKay graph: vertex labels, marks (dimensions), adjacency."""
    return _json.loads(_quiver_json(family, rank))


def quiver_dot(family, rank=0):
    """The same graph in DOT format."""
    return _quiver_dot(family, rank)


def spectrum(family=None, rank=0, poly=None, raw_grading=False):
    """Weights, Milnor number and spectral numbers.

    Either name a family (with a rank for A and D) or pass an explicit
    weighted homogeneous polynomial such as ``poly="x^5 + y^3 + z^2"``.
    """
    return _json.loads(_spectrum_json(family or "", rank, poly or "", raw_grading))


def coxeter(family, rank=0):
    """Coxeter number h and the exponent multiset m/h of the ADE diagram."""
    return _json.loads(_coxeter_json(family, rank))


def orbifold(family, rank=0):
    """Twisted-sector exponents and the spectrum comparison report."""
    return _json.loads(_orbifold_json(family, rank))


def verify(family=None, rank=0, all=False, max_rank=10):
    """Run the cross-verification pipeline; returns a list of case reports."""
    return _json.loads(_verify_json(family or "", rank, all, max_rank))
