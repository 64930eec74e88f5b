"""Exact difference Goncarov polynomials, their identities, and the counts they give."""
from .exact_poly import MultiPoly, TruncatedSeries, delta, evaluate, mixed_delta, shift, upper_factorial
from .goncarov_multi import NodeGrid, goncarov_multi, verify_identity_multi
from .goncarov_uni import goncarov_uni_determinant, goncarov_uni_recursion, lattice_path_count, verify_identity_uni

__all__ = [
    "MultiPoly",
    "NodeGrid",
    "TruncatedSeries",
    "delta",
    "evaluate",
    "goncarov_multi",
    "goncarov_uni_determinant",
    "goncarov_uni_recursion",
    "lattice_path_count",
    "mixed_delta",
    "shift",
    "upper_factorial",
    "verify_identity_multi",
    "verify_identity_uni",
]
