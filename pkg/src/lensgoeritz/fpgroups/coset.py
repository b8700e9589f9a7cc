"""HLT coset enumeration with a hard cap on live cosets."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .words import GroupWord, as_group_word

DEFAULT_COSET_CAP = 10000


def default_coset_cap() -> int:
    """``GOERITZ_COSET_CAP`` if set, else 10000."""
    raw = os.environ.get("GOERITZ_COSET_CAP")
    if raw is None:
        return DEFAULT_COSET_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("GOERITZ_COSET_CAP must be positive")
    return cap


@dataclass(frozen=True)
class Index:
    """Completed enumeration.

    ``table[c][col]`` is the coset ``c . g`` for ``col = 2*i`` (generator
    ``i``) and ``c . g^-1`` for ``col = 2*i + 1``; coset 0 is the subgroup.
    """

    n: int
    generators: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    defined: int

    def act(self, coset: int, word: GroupWord) -> int:
        col = {g: 2 * i for i, g in enumerate(self.generators)}
        for g, e in word.syllables:
            c = col[g] + (e < 0)
            for _ in range(abs(e)):
                coset = self.table[coset][c]
        return coset

    def __int__(self):
        return self.n


@dataclass(frozen=True)
class Overflow:
    """The cap was reached before the table closed."""

    cap: int
    defined: int

    n = None


def _columns(p: Presentation, w: GroupWord) -> list[int]:
    col = {g: 2 * i for i, g in enumerate(p.generators)}
    out = []
    for g, e in w.letters():
        out.append(col[g] + (e < 0))
    return out


class _Enumerator:
    def __init__(self, ncols: int, cap: int):
        self.ncols = ncols
        self.cap = cap
        self.table: list[list[int]] = [[-1] * ncols]
        self.forward = [0]        # union-find parent; forward[c] == c iff live
        self.live = 1
        self.defined = 1

    class Full(Exception):
        pass

    def rep(self, c: int) -> int:
        f = self.forward
        r = c
        while f[r] != r:
            r = f[r]
        while f[c] != r:
            f[c], c = r, f[c]
        return r

    def define(self, c: int, x: int) -> int:
        if self.live >= self.cap:
            raise self.Full
        n = len(self.table)
        self.table.append([-1] * self.ncols)
        self.forward.append(n)
        self.table[c][x] = n
        self.table[n][x ^ 1] = c
        self.live += 1
        self.defined += 1
        return n

    def _merge(self, k: int, l: int, queue: list[int]):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.forward[l] = k
        self.live -= 1
        queue.append(l)

    def coincidence(self, a: int, b: int):
        queue: list[int] = []
        self._merge(a, b, queue)
        t = self.table
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = t[e]
            for x in range(self.ncols):
                f = row[x]
                if f < 0:
                    continue
                if t[f][x ^ 1] == e:
                    t[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] >= 0:
                    self._merge(f1, t[e1][x], queue)
                elif t[f1][x ^ 1] >= 0:
                    self._merge(e1, t[f1][x ^ 1], queue)
                else:
                    t[e1][x] = f1
                    t[f1][x ^ 1] = e1

    def scan_and_fill(self, c: int, w: Sequence[int]):
        t = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] >= 0:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][w[j] ^ 1] >= 0:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def is_live(self, c: int) -> bool:
        return self.forward[c] == c


def todd_coxeter(p: Presentation, subgroup_gens: Sequence = (), coset_cap: int | None = None):
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``.

    Returns :class:`Index` on completion (the group order when the
    subgroup is trivial) or :class:`Overflow` when more than ``coset_cap``
    cosets would be live at once.
    """
    cap = default_coset_cap() if coset_cap is None else coset_cap
    if cap < 1:
        raise ValueError("coset_cap must be >= 1")
    ncols = 2 * p.rank
    rels = [_columns(p, r) for r in p.relators if r]
    subs = [_columns(p, as_group_word(h)) for h in subgroup_gens]
    en = _Enumerator(ncols, cap)
    try:
        for h in subs:
            if h:
                en.scan_and_fill(0, h)
        c = 0
        while c < len(en.table):
            for r in rels:
                if not en.is_live(c):
                    break
                en.scan_and_fill(c, r)
            if en.is_live(c):
                for x in range(ncols):
                    if en.table[c][x] < 0:
                        en.define(c, x)
            c += 1
    except _Enumerator.Full:
        return Overflow(cap, en.defined)
    return _compact(p, en)


def _compact(p: Presentation, en: _Enumerator) -> Index:
    # renumber live cosets in breadth-first order from coset 0
    t = en.table
    order = [0]
    seen = {0: 0}
    k = 0
    while k < len(order):
        c = order[k]
        k += 1
        for x in range(en.ncols):
            d = en.rep(t[c][x])
            if d not in seen:
                seen[d] = len(order)
                order.append(d)
    table = tuple(tuple(seen[en.rep(t[c][x])] for x in range(en.ncols)) for c in order)
    return Index(len(order), p.generators, table, en.defined)
