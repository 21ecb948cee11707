"""Finite posets, order maps, and order-isomorphism search.

Elements are opaque hashable tokens. Internally every poset keeps the order
as up-set and down-set bitmasks over element indices, so comparisons and
the isomorphism backtracking are cheap at the sizes this package targets.
"""
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Optional, Sequence

from .caps import get_caps
from .errors import CapExceeded, CyclicCovers, DuplicateElement, UnknownElement

KINDS = ("isomorphism", "automorphism", "iota-embedding")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """A finite partially ordered set.

    ``leq[i][j]`` is true iff ``elements[i] <= elements[j]``. Construction
    checks reflexivity, antisymmetry and transitivity; use :func:`build_poset`
    to start from a Hasse diagram instead of a full relation.
    """

    elements: tuple
    leq: tuple

    _index: dict = field(init=False, repr=False, compare=False)
    up: tuple = field(init=False, repr=False, compare=False)
    down: tuple = field(init=False, repr=False, compare=False)
    upper_covers: tuple = field(init=False, repr=False, compare=False)
    lower_covers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        leq = tuple(tuple(bool(v) for v in row) for row in self.leq)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "leq", leq)

        n = len(elements)
        if n == 0:
            raise ValueError("a poset needs at least one element")
        cap = get_caps().lattice_cap
        if n > cap:
            raise CapExceeded(f"{n} elements exceeds the carrier cap of {cap}")
        index = {}
        for i, x in enumerate(elements):
            if x in index:
                raise DuplicateElement(f"duplicate element {x!r}")
            index[x] = i
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError(f"order table must be {n}x{n}")

        up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]
        down = [sum(1 << j for j in range(n) if leq[j][i]) for i in range(n)]
        for i in range(n):
            if not leq[i][i]:
                raise ValueError(f"order is not reflexive at {elements[i]!r}")
            for j in _bits(up[i]):
                if j != i and leq[j][i]:
                    raise ValueError(
                        f"order is not antisymmetric: {elements[i]!r}, {elements[j]!r}"
                    )
                if up[j] & ~up[i]:
                    raise ValueError(
                        f"order is not transitive above {elements[i]!r}"
                    )

        # j covers i iff i < j with nothing strictly between
        upper = []
        for i in range(n):
            strict = up[i] & ~(1 << i)
            covers = 0
            for j in _bits(strict):
                if not (strict & down[j] & ~(1 << j)):
                    covers |= 1 << j
            upper.append(covers)
        lower = [sum(1 << i for i in range(n) if upper[i] >> j & 1) for j in range(n)]

        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "upper_covers", tuple(upper))
        object.__setattr__(self, "lower_covers", tuple(lower))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"unknown element {x!r}") from None

    def le(self, x, y) -> bool:
        return bool(self.up[self.index(x)] >> self.index(y) & 1)

    def covers(self) -> list:
        """Hasse diagram as ``(lower, upper)`` pairs in index order."""
        return [
            (self.elements[i], self.elements[j])
            for i in range(len(self))
            for j in _bits(self.upper_covers[i])
        ]

    def sub_poset(self, members: Iterable) -> "Poset":
        """Restriction of the order to ``members``, kept in carrier order."""
        idx = sorted({self.index(x) for x in members})
        return Poset(
            tuple(self.elements[i] for i in idx),
            tuple(tuple(self.leq[i][j] for j in idx) for i in idx),
        )

    def invariant(self, i: int) -> tuple:
        """Isomorphism-invariant fingerprint of the element at index ``i``."""
        return (
            bin(self.down[i]).count("1"),
            bin(self.up[i]).count("1"),
            bin(self.lower_covers[i]).count("1"),
            bin(self.upper_covers[i]).count("1"),
        )


def build_poset(elements: Sequence[Hashable], covers: Iterable[tuple]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of ``covers``.

    Each pair ``(a, b)`` in ``covers`` means ``a < b``.

    >>> p = build_poset("abc", [("a", "b"), ("b", "c")])
    >>> p.le("a", "c")
    True
    """
    elements = tuple(elements)
    index = {}
    for i, x in enumerate(elements):
        if x in index:
            raise DuplicateElement(f"duplicate element {x!r}")
        index[x] = i
    n = len(elements)
    up = [1 << i for i in range(n)]
    for a, b in covers:
        for x in (a, b):
            if x not in index:
                raise UnknownElement(f"cover references unknown element {x!r}")
        up[index[a]] |= 1 << index[b]

    # Warshall closure over bitmasks
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in _bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CyclicCovers(
                    f"covers form a cycle through {elements[i]!r} and {elements[j]!r}"
                )
    leq = tuple(tuple(bool(up[i] >> j & 1) for j in range(n)) for i in range(n))
    return Poset(elements, leq)


def dual(p: Poset) -> Poset:
    """Same carrier, order reversed."""
    n = len(p)
    return Poset(p.elements, tuple(tuple(p.leq[j][i] for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class OrderMap:
    """A total map between poset carriers, tagged with what it is claimed to be.

    ``images[i]`` is the image of ``source.elements[i]``. The claim is
    checked on construction: isomorphisms and automorphisms must be
    bijective and reflect order both ways; an iota-embedding must be the
    identity on a sub-carrier whose order is the restricted one.
    """

    source: Poset
    target: Poset
    images: tuple
    kind: str = "isomorphism"

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if len(self.images) != len(self.source):
            raise ValueError("map must be total on the source carrier")
        for y in self.images:
            self.target.index(y)

        src, tgt = self.source, self.target
        if self.kind == "iota-embedding":
            if self.images != src.elements:
                raise ValueError("an iota-embedding is the identity on its source")
            for x in src:
                for y in src:
                    if src.le(x, y) != tgt.le(x, y):
                        raise ValueError(
                            "source order is not the restriction of the target order"
                        )
            return

        if self.kind == "automorphism" and src != tgt:
            raise ValueError("an automorphism maps a poset onto itself")
        if len(src) != len(tgt) or len(set(self.images)) != len(tgt):
            raise ValueError(f"{self.kind} must be a bijection")
        img = [tgt.index(y) for y in self.images]
        n = len(src)
        for i in range(n):
            for j in range(n):
                if src.leq[i][j] != tgt.leq[img[i]][img[j]]:
                    raise ValueError(
                        f"{self.kind} does not reflect the order at "
                        f"({src.elements[i]!r}, {src.elements[j]!r})"
                    )

    def __call__(self, x):
        return self.images[self.source.index(x)]

    def as_dict(self) -> dict:
        return dict(zip(self.source.elements, self.images))

    def is_identity(self) -> bool:
        return self.images == self.source.elements

    def compose(self, inner: "OrderMap") -> "OrderMap":
        """``self`` after ``inner``."""
        if inner.target != self.source:
            raise ValueError("cannot compose: carriers do not line up")
        if "iota-embedding" in (self.kind, inner.kind):
            raise ValueError("composition is defined for isomorphisms only")
        kind = "automorphism" if inner.source == self.target else "isomorphism"
        images = tuple(self(inner(x)) for x in inner.source)
        return OrderMap(inner.source, self.target, images, kind)

    def inverse(self) -> "OrderMap":
        if self.kind == "iota-embedding" and len(self.source) != len(self.target):
            raise ValueError("a proper embedding has no inverse")
        back = {y: x for x, y in zip(self.source.elements, self.images)}
        return OrderMap(self.target, self.source, tuple(back[y] for y in self.target), self.kind)


def _isomorphisms(p: Poset, q: Poset) -> Iterator[tuple]:
    """Yield every order isomorphism p -> q as a tuple of target indices.

    Elements of ``p`` are assigned in carrier order and candidates tried in
    the carrier order of ``q``, so the output is lexicographic in the image
    tuples.
    """
    n = len(p)
    if n != len(q):
        return
    inv_p = [p.invariant(i) for i in range(n)]
    inv_q = [q.invariant(j) for j in range(n)]
    if sorted(inv_p) != sorted(inv_q):
        return
    candidates = [[j for j in range(n) if inv_q[j] == inv_p[i]] for i in range(n)]
    assigned = [-1] * n
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            yield tuple(assigned)
            return
        for j in candidates[i]:
            if used >> j & 1:
                continue
            ok = True
            for k in range(i):
                m = assigned[k]
                if (p.up[k] >> i & 1) != (q.up[m] >> j & 1) or (
                    p.up[i] >> k & 1
                ) != (q.up[j] >> m & 1):
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = j
            used |= 1 << j
            yield from extend(i + 1)
            used &= ~(1 << j)
            assigned[i] = -1

    yield from extend(0)


def find_isomorphism(p: Poset, q: Poset) -> Optional[OrderMap]:
    """First order isomorphism from ``p`` onto ``q`` in search order, or None."""
    for images in _isomorphisms(p, q):
        return OrderMap(p, q, tuple(q.elements[j] for j in images), "isomorphism")
    return None


def isomorphisms(p: Poset, q: Poset) -> Iterator[OrderMap]:
    for images in _isomorphisms(p, q):
        yield OrderMap(p, q, tuple(q.elements[j] for j in images), "isomorphism")


def automorphisms(p: Poset) -> list:
    """All order automorphisms of ``p``; the identity comes first.

    The rest follow in lexicographic order of their image index tuples.
    """
    return [
        OrderMap(p, p, tuple(p.elements[j] for j in images), "automorphism")
        for images in _isomorphisms(p, p)
    ]
