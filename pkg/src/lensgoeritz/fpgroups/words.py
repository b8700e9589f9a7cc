"""Words over named generators, in syllable form."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


class GroupWordParseError(ValueError):
    pass


def _syllabify(letters: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True, order=True)
class GroupWord:
    """Freely reduced word stored as ``((name, exponent), ...)`` syllables."""

    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        s = self.syllables
        for (g, e) in s:
            if e == 0:
                raise ValueError("zero exponent in syllable form")
        for (g, _), (h, _) in zip(s, s[1:]):
            if g == h:
                raise ValueError(f"adjacent syllables share symbol {g!r}")

    @classmethod
    def of(cls, *parts) -> "GroupWord":
        """``GroupWord.of("a", ("b", -1), ...)`` with bare names meaning ^1."""
        letters = [(p, 1) if isinstance(p, str) else tuple(p) for p in parts]
        return cls(_syllabify(letters))

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> "GroupWord":
        return cls(_syllabify(letters))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        return parse_group_word(text)

    def letters(self) -> Iterator[tuple[str, int]]:
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_syllabify(self.syllables + other.syllables))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(_syllabify(base.syllables * abs(n)))

    def symbols(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.syllables if g == name)

    def substitute(self, images: dict[str, "GroupWord"]) -> "GroupWord":
        """Replace each generator by its image (missing names map to themselves)."""
        out: list[tuple[str, int]] = []
        for g, e in self.syllables:
            img = images.get(g)
            if img is None:
                out.append((g, e))
            else:
                out.extend((img if e > 0 else img.inverse()).syllables * abs(e))
        return GroupWord(_syllabify(out))

    def rename(self, mapping: dict[str, str]) -> "GroupWord":
        return GroupWord(_syllabify((mapping.get(g, g), e) for g, e in self.syllables))

    def cyclically_reduced(self) -> "GroupWord":
        s = list(self.syllables)
        while len(s) >= 2 and s[0][0] == s[-1][0]:
            g, e = s[0][0], s[0][1] + s[-1][1]
            s = s[1:-1]
            if e:
                s = [(g, e)] + s
        return GroupWord(tuple(s))

    def __str__(self):
        return format_group_word(self)

    def __repr__(self):
        return f"GroupWord({format_group_word(self)!r})"


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """``a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


def gen(name: str, e: int = 1) -> GroupWord:
    return GroupWord(((name, e),)) if e else GroupWord()


def format_group_word(w: GroupWord, sep: str = " ") -> str:
    if not w.syllables:
        return "1"
    return sep.join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[()^=*])|(?P<num>[+-]?\d+))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupWordParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


def parse_group_word(text: str) -> GroupWord:
    """Parse ``name``, ``^k``, parentheses and juxtaposition.

    ``lhs = rhs`` is read as the relator ``lhs rhs^-1``; ``*`` is an
    optional product sign and ``1`` the empty word.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def seq(closing: bool) -> list[tuple[str, int]]:
        nonlocal pos
        out: list[tuple[str, int]] = []
        while pos < len(toks):
            kind, val = toks[pos]
            if kind == "op" and val == ")":
                if not closing:
                    raise GroupWordParseError(f"unbalanced ')' in {text!r}")
                return out
            if kind == "op" and val == "=":
                return out
            if kind == "op" and val == "*":
                pos += 1
                continue
            if kind == "name":
                pos += 1
                unit = [(val, 1)]
            elif kind == "num" and val == "1":
                pos += 1
                unit = []
            elif kind == "op" and val == "(":
                pos += 1
                unit = seq(True)
                if peek() != ("op", ")"):
                    raise GroupWordParseError(f"unclosed '(' in {text!r}")
                pos += 1
            else:
                raise GroupWordParseError(f"unexpected {val!r} in {text!r}")
            k = 1
            if peek() == ("op", "^"):
                pos += 1
                kind2, val2 = peek()
                if kind2 != "num":
                    raise GroupWordParseError(f"missing exponent in {text!r}")
                pos += 1
                k = int(val2)
            base = unit if k >= 0 else [(g, -e) for g, e in reversed(unit)]
            out.extend(base * abs(k))
        if closing:
            raise GroupWordParseError(f"unclosed '(' in {text!r}")
        return out

    lhs = seq(False)
    if pos < len(toks):
        # at '='
        pos += 1
        rhs = seq(False)
        if pos < len(toks):
            raise GroupWordParseError(f"trailing input in {text!r}")
        return GroupWord.from_letters(lhs) * GroupWord.from_letters(rhs).inverse()
    return GroupWord.from_letters(lhs)


def as_group_word(w) -> GroupWord:
    if isinstance(w, GroupWord):
        return w
    if isinstance(w, str):
        return parse_group_word(w)
    if isinstance(w, Sequence):
        return GroupWord.of(*w)
    raise TypeError(f"cannot make a GroupWord from {w!r}")
