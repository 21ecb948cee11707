"""Line-based text formats for lattices, set families and fuzzy sets.

Lattice (``.lat``)::

    elements: 0 q r p s t 1
    cover: 0 q          # 0 is covered by q

Family (``.fam``)::

    universe: a b c
    set:                # the empty set
    set: a b

Fuzzy set (``.fz``), one line per domain element, domain order as written::

    map: a -> r

``#`` starts a comment anywhere on a line. Tokens match ``[A-Za-z0-9_]+``.
"""
import re
from pathlib import Path
from typing import Union

from .errors import DuplicateSet, ParseError, UnknownMember
from .fuzzy import FuzzySet, SetFamily
from .lattice import Lattice, validate_complete_lattice
from .order import build_poset

TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")
MAP_LINE = re.compile(r"([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\Z")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _keyword(line: str, number: int):
    key, sep, rest = line.partition(":")
    if not sep:
        raise ParseError(f"expected '<keyword>: ...', got {line!r}", number)
    return key.strip(), rest.strip()


def _tokens(rest: str, number: int) -> list:
    tokens = rest.split()
    for tok in tokens:
        if not TOKEN.match(tok):
            raise ParseError(f"bad token {tok!r}", number)
    return tokens


def parse_lattice(text: str) -> Lattice:
    elements = None
    covers = []
    for number, line in _lines(text):
        key, rest = _keyword(line, number)
        if key == "elements":
            if elements is not None:
                raise ParseError("'elements:' given twice", number)
            elements = _tokens(rest, number)
            if not elements:
                raise ParseError("'elements:' lists no elements", number)
            if len(set(elements)) != len(elements):
                raise ParseError("duplicate element", number)
        elif key == "cover":
            if elements is None:
                raise ParseError("'cover:' before 'elements:'", number)
            pair = _tokens(rest, number)
            if len(pair) != 2:
                raise ParseError("'cover:' takes exactly two elements", number)
            for tok in pair:
                if tok not in elements:
                    raise ParseError(f"unknown element {tok!r}", number)
            covers.append(tuple(pair))
        else:
            raise ParseError(f"unknown keyword {key!r}", number)
    if elements is None:
        raise ParseError("missing 'elements:' line")
    return validate_complete_lattice(build_poset(elements, covers))


def parse_family(text: str) -> SetFamily:
    universe = None
    members = []
    seen = {}
    for number, line in _lines(text):
        key, rest = _keyword(line, number)
        if key == "universe":
            if universe is not None:
                raise ParseError("'universe:' given twice", number)
            universe = _tokens(rest, number)
            if not universe:
                raise ParseError("the universe must be nonempty", number)
            if len(set(universe)) != len(universe):
                raise ParseError("duplicate universe element", number)
        elif key == "set":
            if universe is None:
                raise ParseError("'set:' before 'universe:'", number)
            toks = _tokens(rest, number)
            for tok in toks:
                if tok not in universe:
                    raise UnknownMember(f"{tok!r} is not in the universe", number)
            s = frozenset(toks)
            if len(s) != len(toks):
                raise ParseError("element repeated within a set", number)
            if s in seen:
                raise DuplicateSet(f"same set as line {seen[s]}", number)
            seen[s] = number
            members.append(s)
        else:
            raise ParseError(f"unknown keyword {key!r}", number)
    if universe is None:
        raise ParseError("missing 'universe:' line")
    return SetFamily(tuple(universe), tuple(members))


def parse_fuzzy(text: str, lattice: Lattice) -> FuzzySet:
    mapping = {}
    for number, line in _lines(text):
        key, rest = _keyword(line, number)
        if key != "map":
            raise ParseError(f"unknown keyword {key!r}", number)
        match = MAP_LINE.match(rest)
        if not match:
            raise ParseError("expected 'map: <x> -> <value>'", number)
        x, v = match.groups()
        if x in mapping:
            raise ParseError(f"{x!r} mapped twice", number)
        if v not in lattice:
            raise ParseError(f"{v!r} is not a lattice element", number)
        mapping[x] = v
    if not mapping:
        raise ParseError("no 'map:' lines")
    return FuzzySet.from_mapping(lattice, mapping)


def render_lattice(l: Lattice) -> str:
    lines = ["elements: " + " ".join(map(str, l.elements))]
    lines += [f"cover: {a} {b}" for a, b in l.poset.covers()]
    return "\n".join(lines) + "\n"


def render_set(f: SetFamily, s) -> str:
    return " ".join(map(str, f.sorted_set(s)))


def render_family(f: SetFamily) -> str:
    lines = ["universe: " + " ".join(map(str, f.universe))]
    lines += [("set: " + render_set(f, s)).rstrip() for s in f.members]
    return "\n".join(lines) + "\n"


def render_fuzzy(mu: FuzzySet) -> str:
    return "".join(f"map: {x} -> {v}\n" for x, v in zip(mu.domain, mu.values))


def _read(source: Union[str, Path]) -> str:
    return Path(source).read_text(encoding="utf-8")


def load_lattice(path: Union[str, Path]) -> Lattice:
    return parse_lattice(_read(path))


def load_family(path: Union[str, Path]) -> SetFamily:
    return parse_family(_read(path))


def load_fuzzy(path: Union[str, Path], lattice: Lattice) -> FuzzySet:
    return parse_fuzzy(_read(path), lattice)


__all__ = [
    "load_family",
    "load_fuzzy",
    "load_lattice",
    "parse_family",
    "parse_fuzzy",
    "parse_lattice",
    "render_family",
    "render_fuzzy",
    "render_lattice",
    "render_set",
]
