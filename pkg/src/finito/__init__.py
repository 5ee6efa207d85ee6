"""Finite topological spaces as finite posets.

A finite T0 space is the same thing as a finite partial order; this
package follows a space through that dictionary: cores and homotopy
reductions, order complexes with exact homology, fundamental group
presentations read off the cover digraph, and exhaustive enumeration of
all small spaces to machine-check which ones are the smallest models of
spheres and wedges of circles.
"""

__version__ = "0.1.0"

from .errors import (
    CapExceededError,
    CycleError,
    DuplicateCoverError,
    EmptyError,
    FinitoError,
    FlattenBlockedError,
    IllFormedMoveError,
    IllFormedPathError,
    LastPointError,
    NotConnectedError,
    NotContinuousError,
    ParseError,
    QuotientError,
)
from .fileio import PosetDocument, emit, parse_poset
from .models import (
    EnumerationStats,
    WedgeModelCertificate,
    bipartite_model,
    check_wedge_model,
    enumerate_posets,
    enumerate_wedge_minimal_models,
    enumeration_stats,
    minimal_wedge_size,
    nh_suspension,
    sphere_model,
    verify_sphere_theorem,
    wedge_uniqueness_scan,
)
from .order_complex import (
    HomologySummary,
    SimplicialComplex,
    betti_numbers,
    euler_characteristic,
    f_vector,
    faces_text,
    homology,
    order_complex,
)
from .pi1 import (
    GroupPresentation,
    HEdge,
    HPath,
    close_move,
    edge_path_presentation,
    first_betti,
    free_rank,
    is_monotonic,
    loop_to_word,
    presentation_text,
    spanning_tree,
    tietze_simplify,
)
from .poset import CanonicalForm, FinitePoset, HasseDiagram
from .reduction import (
    BeatPointReport,
    McCordReport,
    ReductionTrace,
    beat_points,
    core,
    flatten_to_height2,
    is_contractible,
    is_homotopy_equivalent,
    mccord_check,
    osaki_closed_reduction,
    osaki_open_reduction,
    remove_point,
)

__all__ = [name for name in dir() if not name.startswith("_")]
