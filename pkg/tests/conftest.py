import pytest
from hypothesis import settings

from latcuts import FuzzySet, fixture_path, load_family, load_lattice
from latcuts.order import build_poset
from latcuts.lattice import validate_complete_lattice

settings.register_profile("default", deadline=None)
settings.load_profile("default")

FIG1_ELEMENTS = ["0", "q", "r", "p", "s", "t", "1"]
FIG1_COVERS = [
    ("0", "q"), ("0", "r"), ("0", "p"),
    ("q", "s"), ("r", "s"), ("r", "t"), ("p", "t"),
    ("s", "1"), ("t", "1"),
]

# the four fuzzy sets on {a, b, c} with the Example family as cuts
DELTA = {"a": "r", "b": "t", "c": "p"}
GAMMA = {"a": "p", "b": "t", "c": "r"}
BETA = {"a": "q", "b": "s", "c": "r"}
ALPHA = {"a": "r", "b": "s", "c": "q"}


def chain(n, prefix="c"):
    names = [f"{prefix}{i}" for i in range(n)]
    return build_poset(names, list(zip(names, names[1:])))


def antichain(n):
    return build_poset([f"a{i}" for i in range(n)], [])


@pytest.fixture
def fig1_poset():
    return build_poset(FIG1_ELEMENTS, FIG1_COVERS)


@pytest.fixture
def fig1():
    return load_lattice(fixture_path("fig1.lat"))


@pytest.fixture
def exa1():
    return load_family(fixture_path("exa1.fam"))


@pytest.fixture
def chain3():
    return validate_complete_lattice(build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")]))


@pytest.fixture
def delta(fig1):
    return FuzzySet.from_mapping(fig1, DELTA)


@pytest.fixture
def beta(fig1):
    return FuzzySet.from_mapping(fig1, BETA)
