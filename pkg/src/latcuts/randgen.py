"""Pseudorandom lattices and fuzzy sets, and the formula-versus-oracle self test.

Lattices are drawn as intersection-closed families of subsets of a ground
set with ``n - 1`` points (every lattice with ``n`` elements arises this
way), grown one random subset at a time until the closure has exactly the
requested size. Given a seed, everything here is reproducible.
"""
import random
from dataclasses import dataclass, field
from typing import Iterator

from .fuzzy import FuzzySet, SetFamily, cut_family
from .lattice import Lattice, validate_complete_lattice
from .order import Poset
from .representation import analyze, brute_force_oracle, enumerate_N

MAX_GROWTH_STEPS = 200


def _closure_system(rng: random.Random, size: int) -> list:
    ground = max(size - 1, 0)
    full = (1 << ground) - 1
    while True:
        closed = {full}
        for _ in range(MAX_GROWTH_STEPS):
            if len(closed) == size:
                return sorted(closed, key=lambda s: (bin(s).count("1"), s))
            s = rng.getrandbits(ground) if ground else 0
            grown = set(closed)
            grown.add(s)
            grown.update(s & t for t in closed)
            if len(grown) <= size:
                closed = grown
        # stuck: every draw overshoots, start over


def random_lattice(rng: random.Random, size: int) -> Lattice:
    """A lattice with exactly ``size`` elements named ``e0 .. e{size-1}``.

    ``e0`` is the bottom and the last element the top.
    """
    if size < 1:
        raise ValueError("size must be positive")
    sets = _closure_system(rng, size)
    names = tuple(f"e{i}" for i in range(size))
    leq = tuple(tuple(a & b == a for b in sets) for a in sets)
    return validate_complete_lattice(Poset(names, leq))


def random_fuzzy(rng: random.Random, lattice: Lattice, domain_size: int) -> FuzzySet:
    domain = tuple(f"x{i}" for i in range(1, domain_size + 1))
    values = tuple(rng.choice(lattice.elements) for _ in domain)
    return FuzzySet(domain, lattice, values)


def random_instances(
    count: int, max_lattice: int, max_domain: int, seed: int
) -> Iterator[tuple]:
    """Yield ``(lattice, mu, F)`` with ``F`` the cut family of ``mu``.

    Lattice sizes are uniform in ``[2, max_lattice]`` and domain sizes in
    ``[1, max_domain]``.
    """
    rng = random.Random(seed)
    for _ in range(count):
        lattice = random_lattice(rng, rng.randint(2, max(2, max_lattice)))
        mu = random_fuzzy(rng, lattice, rng.randint(1, max(1, max_domain)))
        yield lattice, mu, cut_family(mu)


def random_family(rng: random.Random, universe: tuple) -> SetFamily:
    """Uniformly random family of subsets; usually not representable."""
    members = []
    for mask in range(1 << len(universe)):
        if rng.random() < 0.5:
            members.append(frozenset(x for i, x in enumerate(universe) if mask >> i & 1))
    return SetFamily(universe, tuple(members))


@dataclass
class SelftestResult:
    total: int
    passed: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"selftest: {self.passed}/{self.total} passed"


def check_instance(lattice: Lattice, mu: FuzzySet, family: SetFamily):
    """Compare the structural count and listing with the brute-force scan.

    Returns None when everything agrees, else a short description.
    """
    listed = enumerate_N(lattice, family)
    scanned = brute_force_oracle(lattice, family)
    report = analyze(lattice, family)
    s_times_oi = len(report.s_members) * report.oi_size
    listed_set = {m.values for m in listed}
    scanned_set = {m.values for m in scanned}
    problems = []
    if listed_set != scanned_set:
        problems.append(f"enumerated {len(listed_set)} != oracle {len(scanned_set)}")
    if len(listed) != s_times_oi or report.total != s_times_oi:
        problems.append(f"|N|={len(listed)} but |S|*|OI|={s_times_oi}")
    if mu.values not in scanned_set:
        problems.append("generating fuzzy set missing from oracle")
    if report.unique != (len(scanned) == 1):
        problems.append("uniqueness verdict disagrees with oracle")
    if problems:
        return (
            f"|L|={len(lattice)} |X|={len(mu.domain)} mu={list(mu.values)}: "
            + "; ".join(problems)
        )
    return None


def selftest(instances: int, max_lattice: int, max_domain: int, seed: int) -> SelftestResult:
    result = SelftestResult(total=instances, passed=0)
    stream = random_instances(instances, max_lattice, max_domain, seed)
    for number, (lattice, mu, family) in enumerate(stream, start=1):
        problem = check_instance(lattice, mu, family)
        if problem is None:
            result.passed += 1
        else:
            result.failures.append(f"instance {number}: FAIL {problem}")
    return result
