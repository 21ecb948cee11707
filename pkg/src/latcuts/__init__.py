"""Lattice-valued fuzzy sets with a prescribed family of cuts.

Count, enumerate and test for uniqueness the maps ``mu: X -> L`` into a
finite lattice ``L`` whose cut sets ``{x : mu(x) >= p}`` form a given
family of subsets of ``X``.
"""
from importlib.resources import files

from .errors import *  # noqa: F401,F403
from .fuzzy import (
    FuzzySet,
    SetFamily,
    canonical_factorization,
    cut,
    cut_family,
    family_dual_poset,
    image_meet_closure,
    phi,
)
from .io import (
    load_family,
    load_fuzzy,
    load_lattice,
    parse_family,
    parse_fuzzy,
    parse_lattice,
    render_family,
    render_fuzzy,
    render_lattice,
)
from .lattice import (
    Lattice,
    MeetClosedSet,
    enumerate_meet_closed_subsets,
    is_iota_embedded,
    meet_closure,
    meet_of_set,
    validate_complete_lattice,
)
from .order import OrderMap, Poset, automorphisms, build_poset, dual, find_isomorphism
from .representation import (
    RepresentationReport,
    analyze,
    brute_force_oracle,
    check_closure_conditions,
    construct_witness,
    enumerate_H,
    enumerate_N,
    enumerate_S,
)

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path to one of the bundled example files, e.g. ``fixture_path("fig1.lat")``."""
    return files(__name__).joinpath("data", name)
