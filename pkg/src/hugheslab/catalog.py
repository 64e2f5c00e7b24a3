"""Group records, the line-oriented catalog format, and the builtin catalog.

A catalog file holds one JSON object per line::

    {"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]], "tags": ["symmetric"]}

Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, TextIO

from . import constructions as C
from .group import PermGroup
from .perm import Permutation

__all__ = [
    "CatalogError",
    "GroupRecord",
    "parse_record",
    "read_catalog",
    "write_catalog",
    "record_from_group",
    "BUILTINS",
    "builtin_names",
    "builtin_group",
    "builtin_catalog",
    "resolve_group",
]


class CatalogError(ValueError):
    """A catalog line or record that does not describe a permutation group."""


@dataclass
class GroupRecord:
    name: str
    degree: int
    generators: list[list[int]]
    tags: list[str] = field(default_factory=list)

    def to_group(self) -> PermGroup:
        if self.degree < 1:
            raise CatalogError(f"{self.name}: degree must be positive")
        gens = []
        for g in self.generators:
            if len(g) != self.degree:
                raise CatalogError(f"{self.name}: generator {g} does not have degree {self.degree}")
            try:
                gens.append(Permutation(g))
            except ValueError as exc:
                raise CatalogError(f"{self.name}: {exc}") from None
        return PermGroup(gens, degree=self.degree, name=self.name)

    def to_json(self) -> str:
        obj = {"name": self.name, "degree": self.degree, "generators": self.generators}
        if self.tags:
            obj["tags"] = self.tags
        return json.dumps(obj, separators=(", ", ": "))


def parse_record(line: str) -> GroupRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CatalogError("record must be a JSON object")
    try:
        name = obj["name"]
        degree = obj["degree"]
        gens = obj["generators"]
    except KeyError as exc:
        raise CatalogError(f"missing field {exc}") from None
    tags = obj.get("tags", [])
    if not isinstance(name, str) or not isinstance(degree, int) or not isinstance(gens, list):
        raise CatalogError("fields have the wrong types")
    if not all(isinstance(g, list) and all(isinstance(x, int) for x in g) for g in gens):
        raise CatalogError(f"{name}: generators must be lists of integers")
    rec = GroupRecord(name, degree, gens, list(tags))
    rec.to_group()  # validates bijectivity and degrees
    return rec


def read_catalog(stream: TextIO) -> Iterator[tuple[int, GroupRecord | CatalogError]]:
    """Yield ``(line_number, record_or_error)``; errors do not stop the stream."""
    names: set[str] = set()
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            rec = parse_record(text)
            if rec.name in names:
                raise CatalogError(f"duplicate name {rec.name!r}")
        except CatalogError as exc:
            yield lineno, exc
            continue
        names.add(rec.name)
        yield lineno, rec


def write_catalog(records: Iterable[GroupRecord], stream: TextIO) -> None:
    for rec in records:
        stream.write(rec.to_json() + "\n")


def record_from_group(G: PermGroup, name: str | None = None, tags: Iterable[str] = ()) -> GroupRecord:
    return GroupRecord(
        name or G.name or "group",
        G.degree,
        [list(g.images) for g in G.generators],
        list(tags),
    )


def _named(builder: Callable[[], PermGroup], name: str) -> Callable[[], PermGroup]:
    def build():
        G = builder()
        G.name = name
        return G

    return build


def _builtins() -> dict[str, tuple[Callable[[], PermGroup], tuple[str, ...]]]:
    b: dict[str, tuple[Callable[[], PermGroup], tuple[str, ...]]] = {}

    def add(name, builder, *tags):
        b[name] = (_named(builder, name), tags)

    for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 25, 27, 30):
        add(f"C{n}", lambda n=n: C.cyclic(n), "cyclic")
    for n in (3, 4, 5, 6, 8, 9, 10, 12, 16, 32):
        add(f"D{2 * n}", lambda n=n: C.dihedral(n), "dihedral")
    for n in (3, 4, 5, 6):
        add(f"S{n}", lambda n=n: C.symmetric(n), "symmetric")
    add("A4", lambda: C.alternating(4), "alternating")
    add("A5", lambda: C.alternating(5), "alternating")
    for p, k in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)):
        add(f"E{p}^{k}", lambda p=p, k=k: C.elementary_abelian(p, k), "elementary-abelian")
    add("Q8", C.quaternion, "extraspecial")
    for p in (3, 5, 7):
        add(f"He{p}", lambda p=p: C.extraspecial(p, p), "extraspecial")
        add(f"M{p}", lambda p=p: C.extraspecial(p, p * p), "extraspecial")
    for q in (3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27):
        add(f"AGL1_{q}", lambda q=q: C.agl1(q), "affine", "frobenius")
    for p, k, m in ((7, 1, 3), (11, 1, 5), (13, 1, 3), (2, 4, 5), (3, 2, 2)):
        add(f"F{p ** k * m}", lambda p=p, k=k, m=m: C.affine_frobenius(p, k, m), "affine", "frobenius")
    add("gamma0", lambda: C.gamma_tower()[0], "gf27-tower", "frobenius")
    add("gamma", lambda: C.gamma_tower()[1], "gf27-tower")
    add("He7:3", lambda: C.extraspecial_frobenius(7, 3), "frobenius", "nonabelian-kernel")
    add("S3xC3", lambda: C.direct_product(C.symmetric(3), C.cyclic(3)), "product")
    add("S3xS3", lambda: C.direct_product(C.symmetric(3), C.symmetric(3)), "product")
    add("D8xC2", lambda: C.direct_product(C.dihedral(4), C.cyclic(2)), "product")
    add("Q8xC3", lambda: C.direct_product(C.quaternion(), C.cyclic(3)), "product")
    add("S4xC2", lambda: C.direct_product(C.symmetric(4), C.cyclic(2)), "product")
    add("A4xC3", lambda: C.direct_product(C.alternating(4), C.cyclic(3)), "product")
    add("S3xC5", lambda: C.direct_product(C.symmetric(3), C.cyclic(5)), "product")
    return b


BUILTINS = _builtins()

ALIASES = {"S3": "S3", "C6": "C6", "D8": "D8", "GAMMA": "gamma", "GAMMA0": "gamma0"}


def builtin_names() -> list[str]:
    return list(BUILTINS)


def builtin_group(name: str) -> PermGroup:
    key = name if name in BUILTINS else ALIASES.get(name.upper())
    if key is None:
        raise KeyError(f"unknown builtin group {name!r}")
    builder, _ = BUILTINS[key]
    return builder()


def builtin_catalog() -> list[GroupRecord]:
    return [record_from_group(builder(), name, tags) for name, (builder, tags) in BUILTINS.items()]


def resolve_group(source: str) -> PermGroup:
    """``builtin:NAME``, a JSON record, or a path to a one-record catalog file."""
    if source.startswith("builtin:"):
        return builtin_group(source.split(":", 1)[1])
    text = source.strip()
    if text.startswith("{"):
        return parse_record(text).to_group()
    with open(source) as fh:
        recs = [r for _, r in read_catalog(fh)]
    if not recs:
        raise CatalogError(f"{source}: no records")
    if isinstance(recs[0], CatalogError):
        raise recs[0]
    return recs[0].to_group()
