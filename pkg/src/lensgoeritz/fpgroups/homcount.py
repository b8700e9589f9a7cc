"""Counting homomorphisms into symmetric groups."""
from __future__ import annotations

import itertools
from functools import lru_cache

from .presentation import Presentation


@lru_cache(maxsize=None)
def _symmetric(n: int):
    perms = list(itertools.permutations(range(n)))
    index = {q: i for i, q in enumerate(perms)}
    # (a*b)(k) = b(a(k)): left-to-right action, matching word order
    mul = [[index[tuple(b[a[k]] for k in range(n))] for b in perms] for a in perms]
    inv = [index[tuple(sorted(range(n), key=lambda k: q[k]))] for q in perms]
    ident = index[tuple(range(n))]
    return len(perms), mul, inv, ident


def hom_count(p: Presentation, n: int) -> int:
    """Number of homomorphisms from the presented group to S_n (1 <= n <= 5)."""
    if not 1 <= n <= 5:
        raise ValueError("hom_count supports 1 <= n <= 5")
    size, mul, inv, ident = _symmetric(n)
    gens = p.generators
    pos = {g: i for i, g in enumerate(gens)}
    # each relator is checked once its last generator has been assigned
    checks: list[list[list[tuple[int, int]]]] = [[] for _ in gens]
    for r in p.relators:
        if not r:
            continue
        letters = [(pos[g], e) for g, e in r.syllables]
        depth = max(i for i, _ in letters)
        checks[depth].append(letters)
    if not gens:
        return 1
    image = [0] * len(gens)

    def holds(letters) -> bool:
        acc = ident
        for i, e in letters:
            x = image[i] if e > 0 else inv[image[i]]
            row_step = abs(e)
            for _ in range(row_step):
                acc = mul[acc][x]
        return acc == ident

    def count(depth: int) -> int:
        total = 0
        last = depth == len(gens) - 1
        for q in range(size):
            image[depth] = q
            if all(holds(l) for l in checks[depth]):
                total += 1 if last else count(depth + 1)
        return total

    return count(0)
