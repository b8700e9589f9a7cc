"""Word-problem backends for the factor groups of an amalgam.

General finitely presented groups have an undecidable word problem, so
only three structural shapes are handled:

* finite groups, solved through the regular coset table;
* free products of cyclic groups, by reduced syllable sequences;
* direct products of two supported groups, component by component.

Elements are opaque hashable keys; every backend exposes ``identity``,
``mul``, ``inv``, ``evaluate`` (word -> key) and ``word`` (key -> word),
plus :meth:`subgroup` returning a right-coset splitter for the subgroup
generated by some elements.
"""
from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from math import gcd

from .coset import Index, todd_coxeter
from .presentation import Presentation
from .tietze import relator_key
from .words import GroupWord, commutator, gen


class UnsupportedFactor(ValueError):
    pass


class _Backend:
    generators: tuple[str, ...]
    identity: object
    finite = False

    def evaluate(self, w: GroupWord):
        acc = self.identity
        for g, e in w.syllables:
            acc = self.mul(acc, self.power(self.gen_key(g), e))
        return acc

    def power(self, a, e: int):
        base = a if e >= 0 else self.inv(a)
        acc = self.identity
        for _ in range(abs(e)):
            acc = self.mul(acc, base)
        return acc


class FiniteBackend(_Backend):
    """Finite group; element ``i`` is the coset ``0 . w_i`` of the trivial subgroup."""

    finite = True

    def __init__(self, presentation: Presentation, enumeration: Index):
        self.presentation = presentation
        self.generators = presentation.generators
        self.enum = enumeration
        self.order = enumeration.n
        t = enumeration.table
        # shortlex-first word for each element
        words: list[GroupWord | None] = [None] * self.order
        words[0] = GroupWord()
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for i, g in enumerate(self.generators):
                for col, e in ((2 * i, 1), (2 * i + 1, -1)):
                    d = t[c][col]
                    if words[d] is None:
                        words[d] = words[c] * gen(g, e)
                        queue.append(d)
        self.words = words
        self.identity = 0
        self._mul = [[enumeration.act(a, words[b]) for b in range(self.order)]
                     for a in range(self.order)]
        self._inv = [row.index(0) for row in self._mul]

    def gen_key(self, g: str) -> int:
        return self.enum.table[0][2 * self.generators.index(g)]

    def evaluate(self, w: GroupWord) -> int:
        return self.enum.act(0, w)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def word(self, a: int) -> GroupWord:
        return self.words[a]

    def elements(self) -> range:
        return range(self.order)

    def subgroup(self, gens) -> "FiniteSplitter":
        return FiniteSplitter(self, gens)


class FiniteSplitter:
    def __init__(self, group: FiniteBackend, gens):
        self.group = group
        members = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for a in frontier:
                for h in gens:
                    b = group.mul(a, h)
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
            frontier = nxt
        self.members = frozenset(members)
        self.rep = {}
        # element numbering is already shortlex, so min() is the shortest rep
        for g in group.elements():
            if g not in self.rep:
                coset = {group.mul(h, g) for h in members}
                r = min(coset)
                for c in coset:
                    self.rep[c] = r
        self.index = len(set(self.rep.values()))

    def contains(self, a) -> bool:
        return a in self.members

    def split(self, a):
        t = self.rep[a]
        return self.group.mul(a, self.group.inv(t)), t

    def transversal(self, max_len: int | None = None):
        reps = sorted(set(self.rep.values()))
        total = len(reps)
        if max_len is not None:
            reps = [r for r in reps if len(self.group.word(r)) <= max_len]
        return reps, len(reps) < total


def _reduce_exp(e: int, order: int) -> int:
    if not order:
        return e
    e %= order
    return e - order if e > order // 2 else e


class FreeProductBackend(_Backend):
    """Free product of cyclic groups; order 0 means infinite cyclic."""

    def __init__(self, orders: dict[str, int]):
        self.orders = dict(orders)
        self.generators = tuple(orders)
        self.identity = ()
        nontrivial = [k for k in orders.values() if k != 1]
        self.finite = not nontrivial or (len(nontrivial) == 1 and nontrivial[0] != 0)

    def gen_key(self, g):
        return self._norm(((g, 1),))

    def _norm(self, syls) -> tuple:
        out: list[list] = []
        for g, e in syls:
            if out and out[-1][0] == g:
                out[-1][1] += e
            else:
                out.append([g, e])
            out[-1][1] = _reduce_exp(out[-1][1], self.orders[g])
            if out[-1][1] == 0:
                out.pop()
        return tuple((g, e) for g, e in out)

    def evaluate(self, w: GroupWord):
        return self._norm(w.syllables)

    def mul(self, a, b):
        return self._norm(a + b) if a and b and a[-1][0] == b[0][0] else a + b

    def inv(self, a):
        return self._norm(tuple((g, -e) for g, e in reversed(a)))

    def word(self, a) -> GroupWord:
        return GroupWord(a)

    def subgroup(self, gens) -> "FreeFactorSplitter":
        return FreeFactorSplitter(self, gens)


class FreeFactorSplitter:
    """Subgroup generated by whole free factors, e.g. <gamma> in <beta> * <gamma>."""

    def __init__(self, group: FreeProductBackend, gens):
        self.group = group
        names = set()
        for a in gens:
            if not a:
                continue
            if len(a) != 1:
                raise UnsupportedFactor(f"subgroup generator {a} is not a single syllable")
            g, e = a[0]
            k = group.orders[g]
            if (k == 0 and abs(e) != 1) or (k and gcd(e, k) != 1):
                raise UnsupportedFactor(f"{g}^{e} does not generate its free factor")
            names.add(g)
        self.names = frozenset(names)
        nontrivial = [x for x in group.generators if group.orders[x] != 1]
        outside = [x for x in nontrivial if x not in self.names]
        if not outside:
            self.index = 1
        elif len(nontrivial) == 1 and group.orders[outside[0]]:
            self.index = group.orders[outside[0]]
        else:
            self.index = None

    def contains(self, a) -> bool:
        return all(g in self.names for g, _ in a)

    def split(self, a):
        k = 0
        while k < len(a) and a[k][0] in self.names:
            k += 1
        return a[:k], a[k:]

    def transversal(self, max_len: int | None = None):
        """Reps sorted by length; the flag says whether ``max_len`` cut the list."""
        g = self.group
        others = [x for x in g.generators if g.orders[x] != 1]
        if self.index == 1:
            return [()], False
        if max_len is None:
            if self.index is None:
                raise ValueError("infinite transversal needs max_len")
            max_len = self.index
        exps = {x: _exp_choices(g.orders[x], max_len) for x in others}
        out = []
        cut = False

        def grow(prefix, length):
            nonlocal cut
            out.append(prefix)
            for x in others:
                if prefix and prefix[-1][0] == x:
                    continue
                if not prefix and x in self.names:
                    continue
                for e in exps[x]:
                    if length + abs(e) <= max_len:
                        grow(prefix + ((x, e),), length + abs(e))
                    else:
                        cut = True

        grow((), 0)
        out.sort(key=lambda a: (sum(abs(e) for _, e in a), a))
        return out, cut or self.index is None


def _exp_choices(order: int, max_len: int) -> list[int]:
    if order:
        vals = {_reduce_exp(e, order) for e in range(1, order)}
        return sorted(vals, key=lambda e: (abs(e), -e))
    return [e for k in range(1, max_len + 1) for e in (k, -k)]


class DirectProductBackend(_Backend):
    def __init__(self, left, right):
        self.left, self.right = left, right
        self.generators = left.generators + right.generators
        self._side = {g: 0 for g in left.generators} | {g: 1 for g in right.generators}
        self.identity = (left.identity, right.identity)
        self.finite = left.finite and right.finite

    def gen_key(self, g):
        if self._side[g] == 0:
            return (self.left.gen_key(g), self.right.identity)
        return (self.left.identity, self.right.gen_key(g))

    def evaluate(self, w: GroupWord):
        lw = GroupWord.from_letters((g, e) for g, e in w.syllables if self._side[g] == 0)
        rw = GroupWord.from_letters((g, e) for g, e in w.syllables if self._side[g] == 1)
        return (self.left.evaluate(lw), self.right.evaluate(rw))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def word(self, a) -> GroupWord:
        return self.left.word(a[0]) * self.right.word(a[1])

    def subgroup(self, gens) -> "ProductSplitter":
        return ProductSplitter(self, gens)


class ProductSplitter:
    def __init__(self, group: DirectProductBackend, gens):
        self.group = group
        lg, rg = [], []
        for a in gens:
            if a[1] == group.right.identity:
                lg.append(a[0])
            elif a[0] == group.left.identity:
                rg.append(a[1])
            else:
                raise UnsupportedFactor("subgroup generator mixes both direct factors")
        self.left = group.left.subgroup(lg)
        self.right = group.right.subgroup(rg)
        li, ri = self.left.index, self.right.index
        self.index = li * ri if li and ri else None

    def contains(self, a) -> bool:
        return self.left.contains(a[0]) and self.right.contains(a[1])

    def split(self, a):
        lh, lt = self.left.split(a[0])
        rh, rt = self.right.split(a[1])
        return (lh, rh), (lt, rt)

    def transversal(self, max_len: int | None = None):
        lt, lcut = self.left.transversal(max_len)
        rt, rcut = self.right.transversal(max_len)
        wl = self.group.left.word
        wr = self.group.right.word
        pairs = list(itertools.product(lt, rt))
        out = [(a, b) for a, b in pairs
               if max_len is None or len(wl(a)) + len(wr(b)) <= max_len]
        out.sort(key=lambda k: (len(wl(k[0])) + len(wr(k[1])), k))
        return out, lcut or rcut or len(out) < len(pairs)


# ---------------------------------------------------------------------------
# recognition


def _power_relator(r: GroupWord):
    if len(r.syllables) == 1:
        return r.syllables[0]
    return None


def _as_free_product(p: Presentation):
    orders = {g: 0 for g in p.generators}
    for r in p.relators:
        rc = r.cyclically_reduced()
        if not rc:
            continue
        pr = _power_relator(rc)
        if pr is None:
            return None
        g, e = pr
        orders[g] = gcd(orders[g], abs(e))
    return FreeProductBackend(orders)


def _direct_split(p: Presentation):
    gens = list(p.generators)
    if len(gens) < 2:
        return None
    comm_keys = {}
    for a, b in itertools.combinations(gens, 2):
        comm_keys[relator_key(commutator(gen(a), gen(b)))] = frozenset((a, b))
    have = set()
    mixed = []
    for r in p.relators:
        k = relator_key(r)
        if k in comm_keys:
            have.add(comm_keys[k])
        else:
            mixed.append(r.symbols())
    # generators must share a factor unless their commutator is a relator
    parent = {g: g for g in gens}

    def find(g):
        while parent[g] != g:
            g = parent[g]
        return g

    for a, b in itertools.combinations(gens, 2):
        if frozenset((a, b)) not in have:
            parent[find(a)] = find(b)
    for syms in mixed:
        syms = sorted(syms)
        for a in syms[1:]:
            parent[find(a)] = find(syms[0])
    first = find(gens[0])
    left = [g for g in gens if find(g) == first]
    right = [g for g in gens if find(g) != first]
    if not right:
        return None
    def part(names):
        keep = []
        for r in p.relators:
            k = relator_key(r)
            syms = r.symbols()
            if k in comm_keys and not syms <= set(names):
                continue
            if syms <= set(names):
                keep.append(r)
        return Presentation(tuple(names), tuple(keep))

    return part(left), part(right)


@lru_cache(maxsize=256)
def backend_for(p: Presentation, coset_cap: int = 2000):
    """Pick a word-problem backend for ``p`` or raise :class:`UnsupportedFactor`."""
    structured = _as_free_product(p)
    if structured is None:
        split = _direct_split(p)
        if split is not None:
            structured = DirectProductBackend(backend_for(split[0], coset_cap),
                                              backend_for(split[1], coset_cap))
    # finite groups get a full table, so any subgroup can be split off
    if structured is not None and not structured.finite:
        return structured
    res = todd_coxeter(p, (), coset_cap)
    if isinstance(res, Index):
        return FiniteBackend(p, res)
    raise UnsupportedFactor(f"no word-problem backend for {p}")


def finite_backend(p: Presentation, coset_cap: int = 2000) -> FiniteBackend:
    res = todd_coxeter(p, (), coset_cap)
    if not isinstance(res, Index):
        raise UnsupportedFactor(f"{p} did not close within {coset_cap} cosets")
    return FiniteBackend(p, res)
