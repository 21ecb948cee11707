"""When is the fuzzy set with given cuts unique? Plus the randomized self check.

Run with ``python demos/04_uniqueness_and_selftest.py``.
"""
from latcuts import SetFamily, analyze, fixture_path, load_lattice
from latcuts.randgen import selftest

## [unique_chain]
chain = load_lattice(fixture_path("chain3.lat"))
family = SetFamily(("a", "b"), ({"a", "b"}, {"a"}, set()))
report = analyze(chain, family, want_witnesses=True)
print("unique:", report.unique, "witness:", report.witnesses[0].as_dict())
## [unique_chain]

## [not_unique]
fig1 = load_lattice(fixture_path("fig1.lat"))
report = analyze(fig1, family)
# the family is a 3-chain; it sits in the 7-element lattice in many ways
print("in the 7-element lattice: unique =", report.unique, "count =", report.total)
## [not_unique]

## [not_closed]
report = analyze(fig1, SetFamily(("a", "b"), ({"a"}, {"b"})))
print("representable:", report.representable, "-", report.diagnostic)
## [not_closed]

## [selftest]
result = selftest(instances=50, max_lattice=6, max_domain=3, seed=1)
print(result.summary())
## [selftest]
