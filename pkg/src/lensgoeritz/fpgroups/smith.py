"""Smith normal form over the integers and abelian invariants."""
from __future__ import annotations

from dataclasses import dataclass

from .presentation import Presentation


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"not a divisor chain: {t}")

    def to_dict(self) -> dict:
        return {"freeRank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonzero entries, divisor chain)."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            changed = False
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    changed = True
            for j in range(t + 1, cols):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    changed = True
            if not changed:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % piv), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [[r.exponent_sum(g) for g in p.generators] for r in p.relators]


def abelianization_invariants(p: Presentation) -> AbelianInvariants:
    diag = smith_diagonal(relation_matrix(p)) if p.relators else []
    rank = len(diag)
    return AbelianInvariants(p.rank - rank, tuple(d for d in diag if d > 1))
