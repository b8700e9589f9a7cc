"""Finite presentations, their text/JSON forms and product constructions."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .words import NAME_RE, GroupWord, as_group_word, commutator, gen, parse_group_word


class PresentationParseError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(as_group_word(r) for r in self.relators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        for g in gens:
            if not NAME_RE.fullmatch(g):
                raise ValueError(f"bad generator name {g!r}")
        known = set(gens)
        for r in rels:
            missing = r.symbols() - known
            if missing:
                raise ValueError(f"relator {r} uses unknown generators {sorted(missing)}")

    @classmethod
    def build(cls, generators: str | Iterable[str], *relators, name: str = "") -> "Presentation":
        """``Presentation.build("a b", "a^2", "(a b)^3")``."""
        if isinstance(generators, str):
            generators = generators.split()
        return cls(tuple(generators), tuple(as_group_word(r) for r in relators), name)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def rename(self, mapping: dict[str, str]) -> "Presentation":
        return Presentation(tuple(mapping.get(g, g) for g in self.generators),
                            tuple(r.rename(mapping) for r in self.relators), self.name)

    def with_relators(self, extra: Iterable[GroupWord]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(extra), self.name)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [f"rel: {r}" for r in self.relators]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [str(r) for r in self.relators]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        return cls(tuple(data["generators"]),
                   tuple(parse_group_word(r) for r in data.get("relators", [])))

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {' '.join(self.generators)} | {rels} >"


TRIVIAL = Presentation(())


def parse_presentation(text: str) -> Presentation:
    """Read the ``gens:`` / ``rel:`` line format; ``#`` starts a comment."""
    gens: list[str] | None = None
    rels: list[GroupWord] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("gens", "rel"):
            raise PresentationParseError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if key == "gens":
            if gens is not None:
                raise PresentationParseError(f"line {lineno}: second 'gens:' line")
            gens = rest.split()
        else:
            try:
                rels.append(parse_group_word(rest))
            except ValueError as exc:
                raise PresentationParseError(f"line {lineno}: {exc}") from None
    if gens is None:
        raise PresentationParseError("missing 'gens:' line")
    try:
        return Presentation(tuple(gens), tuple(rels))
    except ValueError as exc:
        raise PresentationParseError(str(exc)) from None


def read_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def fresh_name(base: str, taken: set[str]) -> str:
    k = 2
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def disjoint_renaming(p1: Presentation, p2: Presentation) -> dict[str, str]:
    """Renaming for the generators of ``p2`` that collide with ``p1``."""
    taken = set(p1.generators) | set(p2.generators)
    mapping = {}
    for g in p2.generators:
        if g in p1.generators:
            new = fresh_name(g, taken)
            taken.add(new)
            mapping[g] = new
    return mapping


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    q = p2.rename(disjoint_renaming(p1, p2))
    return Presentation(p1.generators + q.generators, p1.relators + q.relators)


def direct_sum(p1: Presentation, p2: Presentation) -> Presentation:
    q = p2.rename(disjoint_renaming(p1, p2))
    comms = tuple(commutator(gen(a), gen(b)) for a in p1.generators for b in q.generators)
    return Presentation(p1.generators + q.generators, p1.relators + q.relators + comms)


def cyclic(name: str, order: int = 0) -> Presentation:
    """``<name | name^order>``; order 0 is the infinite cyclic group."""
    return Presentation((name,), (gen(name, order),) if order else ())
