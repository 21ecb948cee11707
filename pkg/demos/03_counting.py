"""Count and list every fuzzy set whose cuts are a given family.

Run with ``python demos/03_counting.py``.
"""
from latcuts import (
    analyze,
    brute_force_oracle,
    enumerate_H,
    enumerate_N,
    enumerate_S,
    fixture_path,
    load_family,
    load_lattice,
)

lattice = load_lattice(fixture_path("fig1.lat"))
family = load_family(fixture_path("exa1.fam"))

## [count]
report = analyze(lattice, family)
print(f"|S|={len(report.s_members)} |OI|={report.oi_size} |N|={report.total}")
## [count]

## [classes]
# one class per admissible sub-lattice, each an automorphism orbit
for l0 in enumerate_S(lattice, family):
    print("sub-lattice", l0.elements)
    for mu in enumerate_H(lattice, l0, family):
        print("   ", mu.as_dict())
## [classes]

## [oracle]
listed = {mu.values for mu in enumerate_N(lattice, family)}
scanned = {mu.values for mu in brute_force_oracle(lattice, family)}
print(f"brute force over {len(lattice) ** len(family.universe)} maps agrees:", listed == scanned)
## [oracle]
