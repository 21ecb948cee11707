"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 family not closed,
3 oracle mismatch, 4 cap exceeded.
"""
import argparse
import sys

from . import io
from .errors import (
    CapExceeded,
    FamilyNotClosed,
    InternalInvariantViolation,
    LatticeCutsError,
)
from .fuzzy import cut, cut_family, family_dual_poset, image_meet_closure
from .order import automorphisms
from .randgen import selftest
from .representation import analyze, closure_diagnostic, brute_force_oracle, enumerate_N

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CLOSED = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4


def _load_pair(args):
    lattice = io.load_lattice(args.lattice)
    family = io.load_family(args.family)
    return lattice, family


def _print_fuzzy_sets(sets, out):
    for number, mu in enumerate(sets):
        if number:
            out.write("\n")
        out.write(io.render_fuzzy(mu))


def _load_closed_pair(args):
    lattice, family = _load_pair(args)
    reason = closure_diagnostic(family)
    if reason is not None:
        raise FamilyNotClosed(reason)
    return lattice, family


def cmd_count(args, out):
    report = analyze(*_load_closed_pair(args))
    out.write(f"|S|={len(report.s_members)} |OI|={report.oi_size} |N|={report.total}\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    lattice, family = _load_pair(args)
    _print_fuzzy_sets(enumerate_N(lattice, family), out)
    return EXIT_OK


def cmd_unique(args, out):
    report = analyze(*_load_closed_pair(args))
    out.write("unique\n" if report.unique else f"not-unique ({report.total})\n")
    return EXIT_OK


def cmd_oracle(args, out):
    lattice, family = _load_closed_pair(args)
    scanned = brute_force_oracle(lattice, family)
    listed = enumerate_N(lattice, family)
    _print_fuzzy_sets(scanned, out)
    match = [m.values for m in scanned] == [m.values for m in listed]
    if scanned:
        out.write("\n")
    out.write("MATCH\n" if match else "MISMATCH\n")
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_cuts(args, out):
    lattice = io.load_lattice(args.lattice)
    mu = io.load_fuzzy(args.fuzzy, lattice)
    for p in lattice:
        members = " ".join(x for x in mu.domain if x in cut(mu, p))
        out.write(f"cut {p}: {members}".rstrip() + "\n")
    family = cut_family(mu)
    for s in family.members:
        out.write(("set: " + io.render_set(family, s)).rstrip() + "\n")
    out.write("meet-closure: " + " ".join(image_meet_closure(mu).elements) + "\n")
    return EXIT_OK


def _render_token(x, family=None):
    if family is not None:
        return "{" + ",".join(map(str, family.sorted_set(x))) + "}"
    return str(x)


def cmd_automorphisms(args, out):
    with open(args.file, encoding="utf-8") as handle:
        text = handle.read()
    family = None
    if any(line.split("#", 1)[0].strip().startswith("universe:") for line in text.splitlines()):
        family = io.parse_family(text)
        poset = family_dual_poset(family)
    else:
        poset = io.parse_lattice(text).poset
    auts = automorphisms(poset)
    out.write(f"|OI|={len(auts)}\n")
    for eta in auts:
        pairs = " ".join(
            f"{_render_token(x, family)}->{_render_token(y, family)}"
            for x, y in zip(poset.elements, eta.images)
        )
        out.write(f"aut: {pairs}\n")
    return EXIT_OK


def cmd_selftest(args, out):
    result = selftest(args.instances, args.max_lattice, args.max_domain, args.seed)
    for line in result.failures:
        out.write(line + "\n")
    out.write(result.summary() + "\n")
    return EXIT_OK if result.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcuts",
        description="Count, enumerate and check lattice-valued fuzzy sets with a given family of cuts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in [
        ("count", cmd_count, "print |S|, |OI| and |N|"),
        ("enumerate", cmd_enumerate, "list every fuzzy set with the given cuts"),
        ("unique", cmd_unique, "decide whether exactly one such fuzzy set exists"),
        ("oracle", cmd_oracle, "brute-force listing compared against enumerate"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("lattice")
        p.add_argument("family")
        p.set_defaults(func=func)

    p = sub.add_parser("cuts", help="cuts, cut family and image meet-closure of a fuzzy set")
    p.add_argument("lattice")
    p.add_argument("fuzzy")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("automorphisms", help="automorphisms of a lattice or of (F, reverse inclusion)")
    p.add_argument("file")
    p.set_defaults(func=cmd_automorphisms)

    p = sub.add_parser("selftest", help="random formula-versus-oracle checks")
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--max-lattice", type=int, default=6)
    p.add_argument("--max-domain", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except FamilyNotClosed as exc:
        print(f"family not closed: {exc}", file=sys.stderr)
        return EXIT_NOT_CLOSED
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (LatticeCutsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
