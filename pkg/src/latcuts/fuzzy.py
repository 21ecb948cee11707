"""Lattice-valued fuzzy sets and the families of crisp sets cut from them."""
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .errors import (
    DuplicateSet,
    InternalInvariantViolation,
    LatticeCutsError,
    UnknownElement,
    UnknownMember,
)
from .lattice import Lattice, MeetClosedSet, meet_closure, meet_of_set
from .order import OrderMap, Poset


def _distinct_universe(universe) -> tuple:
    universe = tuple(universe)
    if not universe:
        raise ValueError("the domain must be nonempty")
    if len(set(universe)) != len(universe):
        raise ValueError("domain elements must be distinct")
    return universe


@dataclass(frozen=True)
class SetFamily:
    """A finite family of distinct subsets of ``universe``.

    Members are stored as frozensets in canonical order: by size, then by
    the sorted positions of their elements in ``universe``. Two families
    over the same universe compare equal iff they hold the same sets.
    """

    universe: tuple
    members: tuple

    def __post_init__(self):
        universe = _distinct_universe(self.universe)
        pos = {x: i for i, x in enumerate(universe)}
        members = [frozenset(m) for m in self.members]
        seen = set()
        for m in members:
            extra = [x for x in m if x not in pos]
            if extra:
                raise UnknownMember(f"{extra[0]!r} is not in the universe")
            if m in seen:
                raise DuplicateSet(f"set {sorted(m, key=pos.get)} appears twice")
            seen.add(m)
        members.sort(key=lambda m: (len(m), sorted(pos[x] for x in m)))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "members", tuple(members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return frozenset(s) in set(self.members)

    def sorted_set(self, s) -> tuple:
        """Elements of ``s`` in universe order."""
        return tuple(x for x in self.universe if x in s)


def family_dual_poset(f: SetFamily) -> Poset:
    """``f`` ordered by reverse inclusion: ``A <= B`` iff ``A`` contains ``B``."""
    members = f.members
    return Poset(members, tuple(tuple(a >= b for b in members) for a in members))


@dataclass(frozen=True)
class FuzzySet:
    """A total map from ``domain`` into the carrier of ``lattice``.

    ``values[i]`` is the grade of ``domain[i]``.
    """

    domain: tuple
    lattice: Lattice
    values: tuple

    def __post_init__(self):
        domain = _distinct_universe(self.domain)
        values = tuple(self.values)
        if len(values) != len(domain):
            raise ValueError("a fuzzy set needs exactly one value per domain element")
        for v in values:
            if v not in self.lattice:
                raise UnknownElement(f"value {v!r} is not in the lattice")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(cls, lattice: Lattice, mapping: Mapping, domain: Sequence[Hashable] = None):
        if domain is None:
            domain = tuple(mapping)
        missing = [x for x in domain if x not in mapping]
        if missing:
            raise ValueError(f"no value given for {missing[0]!r}")
        return cls(tuple(domain), lattice, tuple(mapping[x] for x in domain))

    def __call__(self, x):
        try:
            return self.values[self.domain.index(x)]
        except ValueError:
            raise UnknownElement(f"{x!r} is not in the domain") from None

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.values))

    def key(self) -> tuple:
        """Lattice indices of the values, in domain order; used for sorting."""
        return tuple(self.lattice.index(v) for v in self.values)

    def image(self) -> frozenset:
        return frozenset(self.values)


def cut(mu: FuzzySet, p) -> frozenset:
    """The ``p``-cut: all ``x`` with ``mu(x) >= p``."""
    l = mu.lattice
    i = l.index(p)
    up = l.poset.up[i]
    return frozenset(x for x, v in zip(mu.domain, mu.values) if up >> l.index(v) & 1)


def cut_family(mu: FuzzySet) -> SetFamily:
    """All distinct cuts of ``mu`` as ``p`` ranges over the lattice."""
    return SetFamily(mu.domain, tuple({cut(mu, p) for p in mu.lattice}))


def image_meet_closure(mu: FuzzySet) -> MeetClosedSet:
    """Meets of all subsets of the image of ``mu``, the empty meet included."""
    return meet_closure(mu.lattice, mu.values)


def phi(mu: FuzzySet) -> OrderMap:
    """Isomorphism from the cut family under reverse inclusion onto the image meet-closure.

    Each cut is sent to the meet of the grades of its elements (the empty cut
    goes to the top). The result is checked to be a bijection that reflects
    order both ways before it is returned.
    """
    l = mu.lattice
    grades = mu.as_dict()
    source = family_dual_poset(cut_family(mu))
    target = image_meet_closure(mu).as_lattice().poset
    images = tuple(meet_of_set(l, {grades[x] for x in c}) for c in source.elements)
    try:
        return OrderMap(source, target, images, "isomorphism")
    except (ValueError, LatticeCutsError) as exc:
        raise InternalInvariantViolation(f"phi is not an order isomorphism: {exc}") from exc


def canonical_factorization(mu: FuzzySet):
    """Split ``mu`` as an iota-embedding after a fuzzy set valued in its own image meet-closure.

    Returns ``(nu, iota)`` where ``nu`` takes the same values as ``mu`` but
    lives on the sub-lattice, and ``iota`` is the inclusion of that
    sub-lattice into ``mu.lattice``.
    """
    closure = image_meet_closure(mu)
    sub = closure.as_lattice()
    nu = FuzzySet(mu.domain, sub, mu.values)
    iota = OrderMap(sub.poset, mu.lattice.poset, sub.elements, "iota-embedding")
    if cut_family(nu) != cut_family(mu):
        raise InternalInvariantViolation("factorization changed the cut family")
    if image_meet_closure(nu).members != frozenset(sub.elements):
        raise InternalInvariantViolation("factor does not generate its own codomain")
    return nu, iota
