"""Cuts of a lattice-valued fuzzy set, and how it factors through its own image.

Run with ``python demos/02_cuts_and_factorization.py``.
"""
from latcuts import (
    FuzzySet,
    canonical_factorization,
    cut,
    cut_family,
    fixture_path,
    image_meet_closure,
    load_lattice,
    phi,
)

lattice = load_lattice(fixture_path("fig1.lat"))
mu = FuzzySet.from_mapping(lattice, {"a": "r", "b": "t", "c": "p"})

## [cuts]
for p in lattice:
    print(f"cut at {p}: {sorted(cut(mu, p))}")
print("distinct cuts:", [sorted(s) for s in cut_family(mu)])
## [cuts]

## [phi]
# each cut goes to the meet of the grades inside it; this is an order
# isomorphism from the cuts (reverse inclusion) onto the meet-closure of the image
closure = image_meet_closure(mu)
print("meet-closure of the image:", closure.elements)
for c, level in phi(mu).as_dict().items():
    print(f"  {sorted(c)} -> {level}")
## [phi]

## [factorization]
nu, iota = canonical_factorization(mu)
print("nu lives on", nu.lattice.elements, "with the same values", nu.values)
print("iota is", iota.kind, "and nu has the same cuts:", cut_family(nu) == cut_family(mu))
## [factorization]
