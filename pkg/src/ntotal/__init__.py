"""n-total graphs of finite commutative rings.

Vertices are the ring elements; x and y are adjacent when x^n + y^n is a
zero-divisor.  The package builds these graphs, classifies their
components and checks the structural theorems about them by brute force.
"""

from .graph import (
    Complete,
    CompleteBipartite,
    NTotalGraph,
    Other,
    Selector,
    Signature,
    build_graph,
)
from .ideals import (
    ideal_case_params,
    ideal_generated,
    is_ideal,
    min_zd_generators,
    nth_power_classes,
    find_nth_root_of_minus_one,
    zero_divisor_profile,
)
from .parse import parse_ring
from .rings import Element, Modular, PolyQuotient, Product, Ring, make_ring
from .theorems import Verdict, VerificationReport, run_suite

__all__ = [
    "Complete", "CompleteBipartite", "Element", "Modular", "NTotalGraph", "Other",
    "PolyQuotient", "Product", "Ring", "Selector", "Signature", "Verdict",
    "VerificationReport", "build_graph", "find_nth_root_of_minus_one", "ideal_case_params",
    "ideal_generated", "is_ideal", "make_ring", "min_zd_generators", "nth_power_classes",
    "parse_ring", "ring", "run_suite", "zero_divisor_profile",
]


def ring(text: str, cap: int | None = None) -> Ring:
    """Parse and build a ring from spec text: ``ring("Z3xZ3")``."""
    from .rings import DEFAULT_VERTEX_CAP

    return make_ring(parse_ring(text), DEFAULT_VERTEX_CAP if cap is None else cap)
