"""Reference computations used by the tests.

Each one is deliberately naive and shares no code with the package, so an
agreement between the two is evidence rather than tautology.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


# -- rank-2 free group, letters as strings over "xXyY"

INV = {"x": "X", "X": "x", "y": "Y", "Y": "y"}


def reduce_str(s: str) -> str:
    out: list[str] = []
    for c in s:
        if out and out[-1] == INV[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclic_class(s: str) -> str:
    s = reduce_str(s)
    while len(s) > 1 and s[0] == INV[s[-1]]:
        s = s[1:-1]
    order = {"x": 0, "X": 1, "y": 2, "Y": 3}
    rots = [s[i:] + s[:i] for i in range(len(s))] or [""]
    return min(rots, key=lambda r: [order[c] for c in r])


def substitute(s: str, img_x: str, img_y: str) -> str:
    table = {"x": img_x, "y": img_y, "X": invert(img_x), "Y": invert(img_y)}
    return reduce_str("".join(table[c] for c in s))


def invert(s: str) -> str:
    return "".join(INV[c] for c in reversed(s))


def christoffel_floor(a: int, b: int) -> str:
    """Lower Christoffel word with a x's and b y's via the slope formula."""
    n = a + b
    return "".join("x" if (i * b) // n == ((i - 1) * b) // n else "y" for i in range(1, n + 1))


def whitehead_maps() -> set[tuple[str, str]]:
    """Images (phi(x), phi(y)) of the signed permutations and elementary transvections."""
    maps = set()
    for sx, sy in itertools.product("xX", "yY"):
        maps.add((sx, sy))
        maps.add((sy, sx))
    for e in "yY":
        maps.add(("x" + e, "y"))
        maps.add((e + "x", "y"))
    for e in "xX":
        maps.add(("x", "y" + e))
        maps.add(("x", e + "y"))
    return maps


# -- integer matrices

def _det(m: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination over Q."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


def determinantal_invariants(m: list[list[int]], ncols: int) -> tuple[int, list[int]]:
    """(free rank, torsion) of Z^ncols / rowspace(m) from gcds of minors."""
    rows = len(m)
    d = [1]
    for k in range(1, min(rows, ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(ncols), k):
                g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        d.append(g)
    rank = len(d) - 1
    factors = [d[k] // d[k - 1] for k in range(1, len(d))]
    return ncols - rank, [f for f in factors if f != 1]


def count_homs_to_cyclic(m: list[list[int]], ncols: int, n: int) -> int:
    """|Hom(Z^ncols / rowspace(m), Z/n)| by brute force."""
    return sum(all(sum(r[i] * v[i] for i in range(ncols)) % n == 0 for r in m)
               for v in itertools.product(range(n), repeat=ncols))


def predicted_cyclic_homs(free_rank: int, torsion: list[int], n: int) -> int:
    out = n ** free_rank
    for t in torsion:
        out *= gcd(t, n)
    return out


# -- permutation groups

def perm_mul(p, q):
    """Apply p then q."""
    return tuple(q[i] for i in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def eval_perm_word(syllables, assign, n):
    cur = tuple(range(n))
    for g, e in syllables:
        base = assign[g] if e > 0 else perm_inv(assign[g])
        for _ in range(abs(e)):
            cur = perm_mul(cur, base)
    return cur


def brute_hom_count(gens, relators, n) -> int:
    """relators: lists of (name, exponent) syllables."""
    ident = tuple(range(n))
    perms = list(itertools.permutations(range(n)))
    count = 0
    for imgs in itertools.product(perms, repeat=len(gens)):
        assign = dict(zip(gens, imgs))
        if all(eval_perm_word(r, assign, n) == ident for r in relators):
            count += 1
    return count

