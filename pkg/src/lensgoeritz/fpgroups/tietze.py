"""Tietze simplification and a syntactic comparison of presentations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coset import Index, todd_coxeter
from .presentation import Presentation
from .words import GroupWord, gen


@dataclass
class TietzeLog:
    moves: list[str] = field(default_factory=list)


def _letters_key(w: GroupWord) -> tuple:
    return tuple((g, e) for g, e in w.letters())


def relator_key(w: GroupWord) -> tuple:
    """Key identifying a relator up to cyclic rotation and inversion."""
    w = w.cyclically_reduced()
    best = None
    for cand in (w, w.inverse()):
        t = _letters_key(cand)
        for i in range(max(len(t), 1)):
            r = t[i:] + t[:i]
            if best is None or r < best:
                best = r
    return best or ()


def _power_orders(rels: list[GroupWord]) -> dict[str, int]:
    from math import gcd
    orders: dict[str, int] = {}
    for r in rels:
        if len(r.syllables) == 1:
            g, e = r.syllables[0]
            orders[g] = gcd(orders.get(g, 0), abs(e))
    return orders


def _reduce_mod(e: int, k: int) -> int:
    e %= k
    return e - k if e > k // 2 else e


def _power_reduce(w: GroupWord, orders: dict[str, int]) -> GroupWord:
    if len(w.syllables) == 1:
        return w
    out = []
    for g, e in w.syllables:
        k = orders.get(g)
        out.append((g, _reduce_mod(e, k) if k else e))
    return GroupWord.from_letters(out).cyclically_reduced()


def _normalize(rels: list[GroupWord], log: TietzeLog) -> list[GroupWord]:
    seen, out = set(), []
    for r in rels:
        r = r.cyclically_reduced()
        if not r:
            log.moves.append("drop trivial relator")
            continue
        if len(r.syllables) == 1 and r.syllables[0][1] < 0:
            r = r.inverse()
        key = relator_key(r)
        if key in seen:
            log.moves.append(f"drop duplicate relator {r}")
            continue
        seen.add(key)
        out.append(r)
    return out


def _collapse_powers(rels: list[GroupWord], log: TietzeLog) -> list[GroupWord]:
    orders = _power_orders(rels)
    out = []
    for r in rels:
        if len(r.syllables) == 1:
            g = r.syllables[0][0]
            new = gen(g, orders[g])
        else:
            new = _power_reduce(r, orders)
        if new != r:
            log.moves.append(f"rewrite {r} -> {new}")
        out.append(new)
    return out


def _elimination(gens: list[str], rels: list[GroupWord]):
    """Best (relator index, generator, replacement) or None."""
    best = None
    for ri, r in enumerate(rels):
        for gi, g in enumerate(gens):
            occ = [(k, e) for k, (h, e) in enumerate(r.syllables) if h == g]
            if len(occ) != 1 or abs(occ[0][1]) != 1:
                continue
            k, e = occ[0]
            s = r.syllables
            rest = GroupWord.from_letters(s[k + 1:] + s[:k])  # r ~ g^e * rest
            repl = rest.inverse() if e == 1 else rest
            score = (len(r), -gi)
            if best is None or score < best[0]:
                best = (score, ri, g, repl)
    return None if best is None else best[1:]


def tietze_simplify(p: Presentation, budget: int = 100, log: TietzeLog | None = None) -> Presentation:
    """Simplify by Tietze moves (each step presents an isomorphic group).

    Moves: cyclic reduction, dropping trivial/duplicate relators, reducing
    exponents modulo a power relator ``g^k``, and eliminating a generator
    that occurs exactly once, with exponent +-1, in some relator.  Among
    eliminations the shortest defining relator wins, ties going to the
    generator listed last.  ``budget`` bounds the number of eliminations
    plus exponent-reduction passes.  A final pass drops relators implied
    by a finite subpresentation.
    """
    log = log if log is not None else TietzeLog()
    gens = list(p.generators)
    rels = _normalize(list(p.relators), log)
    moves = 0
    while moves < budget:
        new = _normalize(_collapse_powers(rels, log), log)
        if [relator_key(r) for r in new] != [relator_key(r) for r in rels]:
            rels = new
            moves += 1
            continue
        rels = new
        choice = _elimination(gens, rels)
        if choice is None:
            break
        ri, g, repl = choice
        log.moves.append(f"eliminate {g} = {repl}")
        rels = [r.substitute({g: repl}) for i, r in enumerate(rels) if i != ri]
        gens.remove(g)
        rels = _normalize(rels, log)
        moves += 1
    rels = _drop_consequences(rels, log)
    return Presentation(tuple(gens), tuple(rels), p.name)


def _drop_consequences(rels: list[GroupWord], log: TietzeLog,
                       coset_cap: int = 500) -> list[GroupWord]:
    """Drop a relator that is trivial in the finite group presented by the
    other relators on its own generators; it lies in their normal closure."""
    for r in sorted(rels, key=lambda w: (-len(w), relator_key(w))):
        syms = r.symbols()
        others = [q for q in rels if q is not r and q.symbols() <= syms]
        sub = Presentation(tuple(sorted(syms)), tuple(others))
        res = todd_coxeter(sub, (), coset_cap)
        if isinstance(res, Index) and res.act(0, r) == 0:
            log.moves.append(f"drop consequence {r}")
            rels = [q for q in rels if q is not r]
    return rels


def canonical_form(p: Presentation) -> tuple[frozenset, frozenset]:
    """Generator set and relator keys after exponent normalization."""
    rels = _normalize(list(p.relators), TietzeLog())
    rels = _normalize(_collapse_powers(rels, TietzeLog()), TietzeLog())
    return frozenset(p.generators), frozenset(relator_key(r) for r in rels)


def syntactically_equal(p: Presentation, q: Presentation) -> bool:
    return canonical_form(p) == canonical_form(q)
