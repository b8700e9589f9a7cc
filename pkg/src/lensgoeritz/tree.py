"""Finite balls in the Bass-Serre tree of the Goeritz amalgam.

Vertices are right cosets ``A g`` (black) and ``B g`` (white), edges are
cosets ``C g``, and ``C g`` joins ``A g`` to ``B g``.  Writing ``g`` in
normal form ``c t_1 ... t_n`` the coset ``A g`` is labeled by
``t_1 ... t_n`` with a leading A-representative dropped, and likewise
for ``B g``; labels are therefore alternating representative sequences
that start in the opposite factor.

Black vertices have infinite valence, so their neighbours are enumerated
only through representatives of word length at most ``len_cap`` and the
ball is flagged as truncated.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .fpgroups import Amalgam, NormalForm
from .fpgroups.amalgam import amalgam_for
from .fpgroups.words import format_group_word
from .goeritz import stabilizer_data
from .surgery import LensParam

BLACK, WHITE = "black", "white"
_FACTOR = {BLACK: "A", WHITE: "B"}


class TreeVertex(NamedTuple):
    color: str
    label: tuple = ()


@dataclass
class TreeBall:
    p: int
    depth: int
    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    truncated: bool = False
    distance: dict = field(default_factory=dict)
    len_cap: int | None = None
    amalgam: Amalgam | None = field(default=None, repr=False)

    def neighbors(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def interior(self, color: str | None = None) -> list:
        return sorted(v for v, d in self.distance.items()
                      if d < self.depth and (color is None or v.color == color))

    def valences(self, color: str) -> dict:
        adj = self.neighbors()
        return {v: len(adj[v]) for v in self.interior(color)}

    def restrict(self, depth: int) -> "TreeBall":
        """The ball of smaller radius around the same base vertex."""
        if not 0 <= depth <= self.depth:
            raise ValueError(f"depth must be in 0..{self.depth}")
        keep = {v for v, d in self.distance.items() if d <= depth}
        edges = {e for e in self.edges if e <= keep}
        return TreeBall(self.p, depth, keep, edges, self.truncated,
                        {v: self.distance[v] for v in keep}, self.len_cap, self.amalgam)

    # -- dumps

    def label_text(self, v: TreeVertex) -> str:
        if not v.label:
            return "1"
        if self.amalgam is None:
            return "*".join(str(s) for s in v.label)
        return "*".join(format_group_word(self.amalgam.syllable_word(s, t), sep="*")
                        for s, t in v.label)

    def edge_lines(self) -> list[str]:
        lines = []
        for e in self.edges:
            b, w = sorted(e, key=lambda v: v.color != BLACK)
            lines.append(f"black:{self.label_text(b)} white:{self.label_text(w)}")
        return sorted(lines)

    def to_dict(self) -> dict:
        order = sorted(self.vertices, key=lambda v: (self.distance.get(v, 0), v.color,
                                                      self.label_text(v)))
        ids = {v: i for i, v in enumerate(order)}
        adj = self.neighbors()
        return {
            "p": self.p,
            "depth": self.depth,
            "lenCap": self.len_cap,
            "truncated": self.truncated,
            "vertices": [{"id": ids[v], "color": v.color, "label": self.label_text(v),
                          "distance": self.distance.get(v)} for v in order],
            "adjacency": {str(ids[v]): sorted(ids[u] for u in adj[v]) for v in order},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def goeritz_amalgam_structure(p) -> Amalgam:
    return amalgam_for(stabilizer_data(p).spec)


def vertex_of(am: Amalgam, color: str, nf: NormalForm) -> TreeVertex:
    syl = nf.syllables
    if syl and syl[0][0] == _FACTOR[color]:
        syl = syl[1:]
    return TreeVertex(color, syl)


def enumerate_ball(p, depth: int, len_cap: int = 6) -> TreeBall:
    """Breadth-first ball of radius ``depth`` around the base black vertex."""
    p = int(LensParam(p))
    if depth < 0:
        raise ValueError("depth must be >= 0")
    am = goeritz_amalgam_structure(p)
    reps = {BLACK: am.transversal("A", len_cap), WHITE: am.transversal("B", len_cap)}
    base = TreeVertex(BLACK, ())
    ball = TreeBall(p, depth, {base}, set(), False, {base: 0}, len_cap, am)
    queue = deque([base])
    while queue:
        v = queue.popleft()
        d = ball.distance[v]
        if d >= depth:
            continue
        side = _FACTOR[v.color]
        other = WHITE if v.color == BLACK else BLACK
        g = NormalForm(am.edge.identity, v.label)
        transversal, cut = reps[v.color]
        ball.truncated |= cut
        for t in transversal:
            # the edge C t g joins this vertex to (other factor) t g
            nf = am.prepend(side, t, g)
            if vertex_of(am, v.color, nf) != v:
                raise AssertionError(f"edge {nf} does not touch {v}")
            u = vertex_of(am, other, nf)
            ball.edges.add(frozenset((v, u)))
            if u not in ball.distance:
                ball.distance[u] = d + 1
                ball.vertices.add(u)
                queue.append(u)
    return ball


@dataclass
class TreeVerdict:
    ok: bool
    reason: str = ""
    cycle: list | None = None

    def __bool__(self):
        return self.ok


def _find_cycle(ball: TreeBall) -> list | None:
    adj = ball.neighbors()
    parent: dict = {}
    for root in sorted(ball.vertices):
        if root in parent:
            continue
        parent[root] = None
        stack = [(root, None)]
        while stack:
            v, came = stack.pop()
            for u in sorted(adj[v]):
                if u == came:
                    continue
                if u in parent:
                    # walk both branches up to the common ancestor
                    path_v, path_u = [v], [u]
                    anc = set()
                    x = v
                    while x is not None:
                        anc.add(x)
                        x = parent[x]
                    x = u
                    while x not in anc:
                        x = parent[x]
                        path_u.append(x)
                    top = x
                    x = v
                    while x != top:
                        x = parent[x]
                        path_v.append(x)
                    return path_v + list(reversed(path_u[:-1]))
                parent[u] = v
                stack.append((u, v))
    return None


def check_tree(ball: TreeBall) -> TreeVerdict:
    """Simple, bipartite by color, connected and acyclic."""
    for e in ball.edges:
        if len(e) != 2:
            return TreeVerdict(False, f"loop at {next(iter(e))}")
        a, b = tuple(e)
        if a not in ball.vertices or b not in ball.vertices:
            return TreeVerdict(False, f"edge {a}-{b} leaves the vertex set")
        if a.color == b.color:
            return TreeVerdict(False, f"edge {a}-{b} joins two {a.color} vertices")
    if not ball.vertices:
        return TreeVerdict(True, "empty")
    adj = ball.neighbors()
    start = next(iter(ball.vertices))
    seen = {start}
    stack = [start]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(ball.vertices):
        return TreeVerdict(False, f"disconnected: {len(seen)} of {len(ball.vertices)} reached")
    if len(ball.edges) != len(ball.vertices) - 1:
        return TreeVerdict(False, f"{len(ball.edges)} edges on {len(ball.vertices)} vertices",
                           _find_cycle(ball))
    return TreeVerdict(True, f"tree on {len(ball.vertices)} vertices")


def quotient_check(ball: TreeBall) -> TreeVerdict:
    """Labels are well-formed cosets of A or B, and every edge is a translate of C."""
    if not ball.vertices:
        raise ValueError("quotient_check needs a nonempty ball")
    am = ball.amalgam or goeritz_amalgam_structure(ball.p)
    seen: dict = {}
    for v in ball.vertices:
        if v.color not in (BLACK, WHITE):
            return TreeVerdict(False, f"unknown color {v.color!r}")
        prev = _FACTOR[v.color]
        for syl in v.label:
            s, t = syl
            if s == prev or s not in ("A", "B"):
                return TreeVerdict(False, f"{v}: label does not alternate correctly")
            if syl not in seen:
                try:
                    seen[syl] = am.is_representative(s, t)
                except (KeyError, TypeError, IndexError):
                    return TreeVerdict(False, f"{v}: {t} is not an element of factor {s}")
            if not seen[syl]:
                return TreeVerdict(False, f"{v}: {t} is not a coset representative")
            prev = s
    for e in ball.edges:
        a, b = sorted(e, key=lambda v: len(v.label))
        if a.color == b.color:
            return TreeVerdict(False, f"edge {a}-{b} is monochromatic")
        lb, la = b.label, a.label
        if not (lb == la or (len(lb) == len(la) + 1 and lb[1:] == la
                             and lb[0][0] == _FACTOR[a.color])):
            return TreeVerdict(False, f"edge {a}-{b} is not a translate of the base edge")
    colors = {v.color for v in ball.vertices}
    return TreeVerdict(True, f"{len(colors)} vertex orbit(s), 1 edge orbit")
