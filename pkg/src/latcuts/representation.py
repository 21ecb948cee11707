"""Which lattice-valued fuzzy sets have a prescribed family of cuts, and how many.

For a finite lattice ``L`` and a family ``F`` of subsets of ``X`` the
fuzzy sets ``mu: X -> L`` whose cut family is ``F`` split into classes, one
per meet-closed, top-containing subset ``L0`` of ``L`` that is order
isomorphic to ``F`` under reverse inclusion. Each class is the orbit of a
single witness under the automorphisms of ``L0``, so the total count is the
number of such subsets times the number of automorphisms of ``F``.

:func:`brute_force_oracle` recomputes the same set by scanning every map
``X -> L`` and is kept free of any of that structure.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Union

from .caps import get_caps
from .errors import (
    FamilyNotClosed,
    InternalInvariantViolation,
    NotInS,
    SearchSpaceTooLarge,
    WitnessVerificationFailed,
)
from .fuzzy import (
    FuzzySet,
    SetFamily,
    cut_family,
    family_dual_poset,
    image_meet_closure,
)
from .lattice import (
    Lattice,
    MeetClosedSet,
    enumerate_meet_closed_subsets,
    validate_complete_lattice,
)
from .order import OrderMap, automorphisms, find_isomorphism

__all__ = [
    "RepresentationReport",
    "analyze",
    "brute_force_oracle",
    "check_closure_conditions",
    "closure_diagnostic",
    "construct_witness",
    "enumerate_H",
    "enumerate_N",
    "enumerate_S",
    "family_dual_poset",
]


def closure_diagnostic(f: SetFamily) -> Optional[str]:
    """Why ``f`` is not intersection-closed with the universe, or None if it is."""
    members = set(f.members)
    universe = frozenset(f.universe)
    if universe not in members:
        return "the family does not contain the whole domain"
    ordered = f.members
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b not in members:
                return (
                    f"intersection of {{{' '.join(map(str, f.sorted_set(a)))}}} and "
                    f"{{{' '.join(map(str, f.sorted_set(b)))}}} is missing"
                )
    return None


def check_closure_conditions(f: SetFamily) -> bool:
    # pairwise closure of a finite family gives closure under arbitrary intersections
    return closure_diagnostic(f) is None


def _require_closed(f: SetFamily):
    reason = closure_diagnostic(f)
    if reason is not None:
        raise FamilyNotClosed(reason)


def _embeddings(l: Lattice, f: SetFamily):
    """Yield index tuples of meet- and top-preserving order embeddings of (F, ⊇) into ``l``."""
    fp = family_dual_poset(f)
    fl = validate_complete_lattice(fp)
    n, m = len(fp), len(l)
    lp = l.poset
    lmeet = l.meet_table
    fmeet = fl.meet_table
    f_top = fp.index(fl.top)
    l_top = l.index(l.top)
    assigned = [-1] * n
    used = 0

    def consistent(i):
        # called with assigned[i] just set; indices < i are the other assigned ones
        j = assigned[i]
        for k in range(i):
            t = assigned[k]
            if (fp.up[k] >> i & 1) != (lp.up[t] >> j & 1):
                return False
            if (fp.up[i] >> k & 1) != (lp.up[j] >> t & 1):
                return False
        for k in range(i + 1):
            mk = fmeet[i][k]
            if mk <= i and lmeet[j][assigned[k]] != assigned[mk]:
                return False
        for a in range(i):
            for b in range(a + 1, i):
                if fmeet[a][b] == i and lmeet[assigned[a]][assigned[b]] != j:
                    return False
        return True

    def extend(i):
        nonlocal used
        if i == n:
            yield tuple(assigned)
            return
        choices = [l_top] if i == f_top else range(m)
        for j in choices:
            if used >> j & 1:
                continue
            assigned[i] = j
            if consistent(i):
                used |= 1 << j
                yield from extend(i + 1)
                used &= ~(1 << j)
            assigned[i] = -1

    if n <= m:
        yield from extend(0)


def enumerate_S(l: Lattice, f: SetFamily) -> list:
    """Meet-closed subsets of ``l`` with the top that are order isomorphic to (F, ⊇).

    Found by extending partial embeddings of the family poset into ``l``;
    sorted by their index tuples in ``l``.
    """
    _require_closed(f)
    images = {frozenset(img) for img in _embeddings(l, f)}
    found = [MeetClosedSet(l, frozenset(l.elements[i] for i in img)) for img in images]
    return sorted(found, key=MeetClosedSet.key)


def _enumerate_S_by_filter(l: Lattice, f: SetFamily) -> list:
    """Same result as :func:`enumerate_S`, by filtering all meet-closed subsets of size |F|."""
    _require_closed(f)
    if len(f) > len(l):
        return []
    fp = family_dual_poset(f)
    return [
        m
        for m in enumerate_meet_closed_subsets(l, len(f))
        if find_isomorphism(fp, m.as_lattice().poset) is not None
    ]


def construct_witness(
    l0: Union[Lattice, MeetClosedSet], f: SetFamily, iso: OrderMap
) -> FuzzySet:
    """An ``l0``-valued fuzzy set with cut family ``f`` that generates all of ``l0``.

    Each ``x`` goes to the image under ``iso`` of the smallest member of
    ``f`` containing it. Both properties are checked before returning.
    """
    lat0 = l0.as_lattice() if isinstance(l0, MeetClosedSet) else l0
    if iso.target != lat0.poset or iso.source != family_dual_poset(f):
        raise WitnessVerificationFailed("iso does not map (F, ⊇) onto L0")
    members = set(f.members)
    values = []
    for x in f.universe:
        smallest = frozenset(f.universe)
        for y in f.members:
            if x in y:
                smallest &= y
        if smallest not in members:
            raise WitnessVerificationFailed(f"no smallest member of the family contains {x!r}")
        values.append(iso(smallest))
    g = FuzzySet(f.universe, lat0, tuple(values))
    if cut_family(g) != f:
        raise WitnessVerificationFailed("witness has the wrong cut family")
    if image_meet_closure(g).members != frozenset(lat0.elements):
        raise WitnessVerificationFailed("witness does not generate L0")
    return g


def enumerate_H(l: Lattice, l0: MeetClosedSet, f: SetFamily) -> list:
    """All ``l``-valued fuzzy sets with cut family ``f`` whose image meet-closure is ``l0``.

    One witness composed with each automorphism of ``l0`` (identity first),
    then included into ``l``.
    """
    _require_closed(f)
    if l0.host != l or len(l0) != len(f):
        raise NotInS("L0 is not a candidate for this lattice and family")
    lat0 = l0.as_lattice()
    iso = find_isomorphism(family_dual_poset(f), lat0.poset)
    if iso is None:
        raise NotInS("L0 is not order isomorphic to the family under reverse inclusion")
    g = construct_witness(lat0, f, iso)
    orbit = [
        FuzzySet(f.universe, l, tuple(eta(v) for v in g.values))
        for eta in automorphisms(lat0.poset)
    ]
    if len({mu.values for mu in orbit}) != len(orbit):
        raise InternalInvariantViolation("distinct automorphisms gave equal fuzzy sets")
    return orbit


def enumerate_N(l: Lattice, f: SetFamily) -> list:
    """Every ``l``-valued fuzzy set on ``f.universe`` whose cut family is ``f``.

    Sorted by the lattice indices of the values in domain order.
    """
    _require_closed(f)
    out = []
    for l0 in enumerate_S(l, f):
        out.extend(enumerate_H(l, l0, f))
    if len({mu.values for mu in out}) != len(out):
        raise InternalInvariantViolation("H-classes of distinct L0 overlap")
    return sorted(out, key=FuzzySet.key)


def brute_force_oracle(l: Lattice, f: SetFamily, cap: Optional[int] = None) -> list:
    """Scan every map ``f.universe -> l`` and keep those whose cut family is ``f``.

    Uses nothing but the order relation of ``l``. Raises
    :class:`SearchSpaceTooLarge` when there are more than ``cap`` maps
    (default: the configured oracle cap).
    """
    if cap is None:
        cap = get_caps().oracle_cap
    n, m = len(l), len(f.universe)
    if n**m > cap:
        raise SearchSpaceTooLarge(f"{n}^{m} candidate maps exceeds the oracle cap of {cap}")
    pos = {x: i for i, x in enumerate(f.universe)}
    target = frozenset(sum(1 << pos[x] for x in s) for s in f.members)
    leq = l.poset.leq
    found = []
    for vals in product(range(n), repeat=m):
        cuts = set()
        for p in range(n):
            mask = 0
            for i, v in enumerate(vals):
                if leq[p][v]:
                    mask |= 1 << i
            cuts.add(mask)
        if cuts == target:
            found.append(FuzzySet(f.universe, l, tuple(l.elements[v] for v in vals)))
    return found


@dataclass
class RepresentationReport:
    representable: bool
    s_members: list
    oi_size: int
    total: int
    unique: bool
    witnesses: Optional[list] = None
    diagnostic: Optional[str] = field(default=None)


def analyze(l: Lattice, f: SetFamily, want_witnesses: bool = False) -> RepresentationReport:
    """Count the fuzzy sets with cut family ``f`` and decide uniqueness.

    The count is ``|S| * |OI(F)|`` and is computed without listing the fuzzy
    sets; ``want_witnesses`` additionally lists them.
    """
    # the empty family has only the empty automorphism
    oi_size = len(automorphisms(family_dual_poset(f))) if len(f) else 1
    reason = closure_diagnostic(f)
    if reason is not None:
        return RepresentationReport(
            representable=False,
            s_members=[],
            oi_size=oi_size,
            total=0,
            unique=False,
            witnesses=[] if want_witnesses else None,
            diagnostic=reason,
        )
    s_members = enumerate_S(l, f)
    total = len(s_members) * oi_size
    return RepresentationReport(
        representable=total >= 1,
        s_members=s_members,
        oi_size=oi_size,
        total=total,
        unique=len(s_members) == 1 and oi_size == 1,
        witnesses=enumerate_N(l, f) if want_witnesses else None,
        diagnostic=None if s_members else "no meet-closed subset of L is isomorphic to (F, ⊇)",
    )
