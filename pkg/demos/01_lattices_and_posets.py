"""Build the seven-element lattice from its Hasse diagram and look around.

Run with ``python demos/01_lattices_and_posets.py``.
"""
from latcuts import (
    automorphisms,
    build_poset,
    dual,
    enumerate_meet_closed_subsets,
    is_iota_embedded,
    meet_closure,
    validate_complete_lattice,
)

## [hasse_diagram]
poset = build_poset(
    ["0", "q", "r", "p", "s", "t", "1"],
    [("0", "q"), ("0", "r"), ("0", "p"), ("q", "s"), ("r", "s"),
     ("r", "t"), ("p", "t"), ("s", "1"), ("t", "1")],
)
lattice = validate_complete_lattice(poset)
print("s meet t =", lattice.meet("s", "t"))
print("q join p =", lattice.join("q", "p"))
## [hasse_diagram]

## [symmetry]
# the left-right mirror swaps q with p and s with t
for eta in automorphisms(poset):
    print("automorphism:", eta.as_dict())
print("top of the dual:", validate_complete_lattice(dual(poset)).top)
## [symmetry]

## [meet_closed_subsets]
print("closure of {r, t, p}:", meet_closure(lattice, {"r", "t", "p"}).elements)
print("{r, t, p} itself embedded?", is_iota_embedded(lattice, {"r", "t", "p"}))
for sub in enumerate_meet_closed_subsets(lattice, 5):
    print("5-element meet-closed subset:", sub.elements)
## [meet_closed_subsets]
