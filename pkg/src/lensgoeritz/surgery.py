"""Word traces of the disk-surgery sequence in L(p, 1).

With ``x`` and ``y`` read off the dual disk and the semiprimitive disk of
W, the disks met along the sequence have boundary words

    E   -> x
    E_0 -> y^p
    E_j -> (xy)^(j-1) x y^(p-j+1)        1 <= j <= p

so E_1 = x y^p and E_p = (xy)^p.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .f2core import (Verdict, Word, abelianize, is_primitive_whitehead,
                     is_semiprimitive_word, parse_word, primitive_root)

_x = Word((0,))
_y = Word((2,))
_xy = Word((0, 2))


class LensParam(int):
    """The parameter p >= 2 of L(p, 1)."""

    def __new__(cls, p):
        if isinstance(p, bool) or int(p) != p:
            raise ValueError(f"p must be an integer, got {p!r}")
        p = int(p)
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        return super().__new__(cls, p)


def disk_word(p: int, j: int) -> Word:
    """Boundary word of E_j, 1 <= j <= p."""
    if not 1 <= j <= p:
        raise ValueError(f"j must be in 1..{p}")
    return _xy ** (j - 1) * _x * _y ** (p - j + 1)


@dataclass(frozen=True)
class SurgerySequence:
    p: int
    entries: tuple[tuple[str, Word], ...]

    def __getitem__(self, label: str) -> Word:
        for lab, w in self.entries:
            if lab == label:
                return w
        raise KeyError(label)

    def __len__(self):
        return len(self.entries)

    def labels(self) -> list[str]:
        return [lab for lab, _ in self.entries]


def surgery_words(p) -> SurgerySequence:
    p = LensParam(p)
    entries = [("E", _x), ("E0", _y ** p)]
    entries += [(f"E{j}", disk_word(p, j)) for j in range(1, p + 1)]
    return SurgerySequence(int(p), tuple(entries))


@dataclass
class SequenceReport:
    p: int
    entries: list[dict]
    assertions: list[dict]
    notes: list[str]

    @property
    def ok(self) -> bool:
        return all(a["pass"] for a in self.assertions)

    def to_dict(self) -> dict:
        return {"p": self.p, "entries": self.entries, "assertions": self.assertions,
                "notes": self.notes}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _classify(label: str, w: Word, p: int) -> dict:
    v = is_primitive_whitehead(w)
    verdict = v.value.value
    witness = v.witness
    if v.value is Verdict.NOT_PRIMITIVE and is_semiprimitive_word(w, p):
        root, k = primitive_root(w)
        verdict = "Semiprimitive"
        witness = f"{root.representative}^{k} with primitive root"
    return {"label": label, "word": str(w), "verdict": verdict, "witness": witness}


def verify_sequence(p) -> SequenceReport:
    p = int(LensParam(p))
    seq = surgery_words(p)
    entries = [_classify(lab, w, p) for lab, w in seq.entries]
    e1, last, final = seq["E1"], seq[f"E{p - 1}"], seq[f"E{p}"]
    root, k = primitive_root(final)
    asserts = [
        ("E is x", seq["E"] == _x),
        ("E0 is y^p", seq["E0"] == _y ** p),
        ("E1 primitive", is_primitive_whitehead(e1).is_primitive),
        ("E1 has a single x", e1.letters.count(0) == 1 and 1 not in e1.letters),
        (f"E{p - 1} primitive", is_primitive_whitehead(last).is_primitive),
        (f"E{p} semiprimitive with exponent p",
         is_semiprimitive_word(final, p) and k == p),
        ("sequence length p + 2", len(seq) == p + 2),
        ("abelianization of E_j is (j, p)",
         all(abelianize(seq[f"E{j}"]) == abelianize(_x ** j * _y ** p)
             for j in range(1, p + 1))),
    ]
    notes = []
    if p == 2:
        notes.append("E_{p-1} coincides with E1 when p = 2")
    return SequenceReport(p, entries, [{"name": n, "pass": bool(ok)} for n, ok in asserts],
                          notes)


def triple_criterion(p) -> tuple[Word, bool]:
    """The only candidate third disk, x y x y^(p-1), and whether it is primitive."""
    p = int(LensParam(p))
    w = parse_word(f"xyxy^{p - 1}")
    exists = is_primitive_whitehead(w).is_primitive
    if exists != (p == 3):
        raise AssertionError(f"primitive triple verdict {exists} for p = {p}")
    return w, exists
