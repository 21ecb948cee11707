"""Finite complete lattices and their meet-closed subsets.

A finite poset in which every pair has a meet and a join is a complete
lattice. A subset of a finite lattice is embedded with all infima and the
top preserved exactly when it contains the top and is closed under binary
meets (the meet of a nonempty finite set is a fold of binary meets), so the
pairwise test below is the whole story in the finite case.
"""
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

from .errors import (
    InternalInvariantViolation,
    NotALattice,
    SizeOutOfRange,
)
from .order import Poset, _bits


def _bound(mask: int, cone: tuple):
    """Index g in ``mask`` with ``cone[g] == mask`` (a greatest/least member), or None."""
    for g in _bits(mask):
        if cone[g] == mask:
            return g
    return None


@dataclass(frozen=True)
class Lattice:
    """A validated finite complete lattice.

    ``meet_table`` and ``join_table`` hold element indices. Build instances
    with :func:`validate_complete_lattice`.
    """

    poset: Poset
    meet_table: tuple = field(repr=False, compare=False)
    join_table: tuple = field(repr=False, compare=False)
    bottom: object = field(compare=False)
    top: object = field(compare=False)

    @property
    def elements(self) -> tuple:
        return self.poset.elements

    def __len__(self):
        return len(self.poset)

    def __iter__(self):
        return iter(self.poset)

    def __contains__(self, x):
        return x in self.poset

    def index(self, x) -> int:
        return self.poset.index(x)

    def le(self, x, y) -> bool:
        return self.poset.le(x, y)

    def meet(self, x, y):
        return self.elements[self.meet_table[self.index(x)][self.index(y)]]

    def join(self, x, y):
        return self.elements[self.join_table[self.index(x)][self.index(y)]]

    def join_of_set(self, s: Iterable):
        """Least upper bound; the empty join is the bottom."""
        s = list(s)
        idx = reduce(
            lambda a, b: self.join_table[a][b],
            (self.index(x) for x in s),
            self.index(self.bottom),
        )
        return self.elements[idx]


def validate_complete_lattice(p: Poset) -> Lattice:
    """Check that every pair of ``p`` has a meet and a join; build the tables.

    Raises :class:`NotALattice` naming the first offending pair.
    """
    n = len(p)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g = _bound(p.down[i] & p.down[j], p.down)
            if g is None:
                raise NotALattice((p.elements[i], p.elements[j]), "no greatest lower bound")
            h = _bound(p.up[i] & p.up[j], p.up)
            if h is None:
                raise NotALattice((p.elements[i], p.elements[j]), "no least upper bound")
            meet[i][j] = meet[j][i] = g
            join[i][j] = join[j][i] = h
    all_mask = (1 << n) - 1
    bottom = _bound(all_mask, p.up)
    top = _bound(all_mask, p.down)
    if bottom is None or top is None:  # unreachable once all pairs have bounds
        raise InternalInvariantViolation("pairwise bounded poset without top or bottom")
    return Lattice(
        p,
        tuple(map(tuple, meet)),
        tuple(map(tuple, join)),
        p.elements[bottom],
        p.elements[top],
    )


def _indices(l: Lattice, s: Iterable) -> set:
    return {l.index(x) for x in s}


def _meet_idx(l: Lattice, idx: Iterable[int]) -> int:
    return reduce(lambda a, b: l.meet_table[a][b], idx, l.index(l.top))


def meet_of_set(l: Lattice, s: Iterable):
    """Greatest lower bound of ``s``; the empty meet is the top."""
    return l.elements[_meet_idx(l, _indices(l, s))]


def _close_indices(l: Lattice, start: set) -> set:
    closed = set(start)
    closed.add(l.index(l.top))
    frontier = list(closed)
    while frontier:
        a = frontier.pop()
        for b in list(closed):
            m = l.meet_table[a][b]
            if m not in closed:
                closed.add(m)
                frontier.append(m)
    return closed


def _is_closed_indices(l: Lattice, idx: set) -> bool:
    if l.index(l.top) not in idx:
        return False
    return all(l.meet_table[a][b] in idx for a in idx for b in idx)


@dataclass(frozen=True)
class MeetClosedSet:
    """A subset of ``host`` that contains the top and is closed under meets."""

    host: Lattice
    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if not _is_closed_indices(self.host, _indices(self.host, members)):
            raise ValueError(f"{sorted(map(str, members))} is not meet-closed with top")

    @property
    def elements(self) -> tuple:
        """Members in host carrier order."""
        return tuple(x for x in self.host.elements if x in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.members

    def key(self) -> tuple:
        return tuple(sorted(self.host.index(x) for x in self.members))

    def as_lattice(self) -> Lattice:
        """The members as a standalone lattice with the restricted order.

        Meets agree with the host's because the set is meet-closed; joins
        are the sub-poset's own and may differ from host joins.
        """
        sub = validate_complete_lattice(self.host.poset.sub_poset(self.members))
        for x in sub:
            for y in sub:
                if sub.meet(x, y) != self.host.meet(x, y):
                    raise InternalInvariantViolation(
                        f"sub-lattice meet of {x!r}, {y!r} differs from host meet"
                    )
        if sub.top != self.host.top:
            raise InternalInvariantViolation("sub-lattice top differs from host top")
        return sub


def meet_closure(l: Lattice, s: Iterable) -> MeetClosedSet:
    """All meets of subsets of ``s``, the empty meet (top) included."""
    closed = _close_indices(l, _indices(l, s))
    return MeetClosedSet(l, frozenset(l.elements[i] for i in closed))


def is_iota_embedded(l: Lattice, s: Iterable) -> bool:
    """Whether inclusion of ``s`` into ``l`` preserves all infima and the top."""
    return _is_closed_indices(l, _indices(l, s))


def enumerate_meet_closed_subsets(l: Lattice, size: int) -> list:
    """Every meet-closed subset of ``l`` that has ``size`` elements and contains the top.

    Results come in lexicographic order of their sorted index tuples. Partial
    subsets are abandoned as soon as a meet they force has already been
    excluded or would push them past ``size``.
    """
    n = len(l)
    if not 1 <= size <= n:
        raise SizeOutOfRange(f"size must be in [1, {n}], got {size}")
    top = l.index(l.top)
    meet = l.meet_table
    out = []

    def walk(i, chosen, forced, excluded):
        # forced holds the meets of chosen pairs not yet chosen themselves
        if forced & excluded:
            return
        if bin(chosen | forced).count("1") > size:
            return
        if i == n:
            if bin(chosen).count("1") == size and not forced:
                out.append(chosen)
            return
        bit = 1 << i
        if bin(chosen).count("1") < size:
            new_forced = forced & ~bit
            for j in _bits(chosen):
                m = meet[i][j]
                if not (chosen >> m & 1) and m != i:
                    new_forced |= 1 << m
            walk(i + 1, chosen | bit, new_forced, excluded)
        if i != top and not forced & bit:
            walk(i + 1, chosen, forced, excluded | bit)

    walk(0, 0, 1 << top, 0)
    return [MeetClosedSet(l, frozenset(l.elements[i] for i in _bits(m))) for m in out]
