"""Stabilizer data and the Goeritz group presentations for L(p, 1).

The group acts on a tree with one orbit of edges, so it is the amalgam of
a black-vertex stabilizer (a primitive disk) and a white-vertex stabilizer
(a primitive pair, or a primitive triple when p = 3) over an edge
stabilizer.  The three pieces are recorded here as presentations; the
geometric content behind them is taken as given data and checked for
consistency: the edge group must embed in both vertex groups, and the
amalgam must match the stated presentation under an invariant fingerprint.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .fpgroups import (AbelianInvariants, AmalgamSpec, GroupHom, Index, Presentation,
                       TietzeLog, abelianization_invariants, amalgamated_product, cyclic,
                       direct_sum, hom_count, syntactically_equal, tietze_simplify,
                       todd_coxeter)
from .surgery import LensParam

DEFAULT_TIETZE_BUDGET = 50


def _z2(name: str) -> Presentation:
    return cyclic(name, 2)


def black_group() -> Presentation:
    """<alpha | alpha^2> + <beta, gamma | gamma^2>, the same for every p."""
    return direct_sum(_z2("alpha"), Presentation.build("beta gamma", "gamma^2"))


def dihedral8() -> Presentation:
    return Presentation.build("rho gamma", "rho^4", "gamma^2", "(rho gamma)^2")


def dihedral6(reflection: str = "gamma") -> Presentation:
    return Presentation.build(f"delta {reflection}", "delta^3", f"{reflection}^2",
                              f"({reflection} delta)^2")


def white_group(p: int) -> Presentation:
    p = int(LensParam(p))
    if p == 2:
        return dihedral8()
    if p == 3:
        return direct_sum(_z2("alpha"), dihedral6())
    return direct_sum(_z2("alpha"), _z2("sigma"))


def edge_group(p: int) -> Presentation:
    p = int(LensParam(p))
    if p <= 3:
        return direct_sum(_z2("alpha"), _z2("gamma"))
    return _z2("alpha")


def case_name(p: int) -> str:
    p = int(LensParam(p))
    return "p=2" if p == 2 else "p=3" if p == 3 else "p>=4"


@dataclass(frozen=True)
class StabilizerData:
    p: int
    black: Presentation
    white: Presentation
    edge: Presentation
    into_black: GroupHom
    into_white: GroupHom

    @property
    def spec(self) -> AmalgamSpec:
        return AmalgamSpec(self.black, self.white, self.edge, self.into_black, self.into_white)


def stabilizer_data(p) -> StabilizerData:
    p = int(LensParam(p))
    black, white, edge = black_group(), white_group(p), edge_group(p)
    into_black = GroupHom.inclusion(edge, black)
    if p == 2:
        # the hyperelliptic involution is rho^2 in D8
        into_white = GroupHom(edge, white, {"alpha": "rho^2", "gamma": "gamma"})
    else:
        into_white = GroupHom.inclusion(edge, white)
    return StabilizerData(p, black, white, edge, into_black, into_white)


def goeritz_amalgam(p) -> Presentation:
    """Raw amalgamated product, before simplification."""
    return amalgamated_product(stabilizer_data(p).spec)


def goeritz_constructed(p, budget: int = DEFAULT_TIETZE_BUDGET,
                        log: TietzeLog | None = None) -> Presentation:
    return tietze_simplify(goeritz_amalgam(p), budget, log)


def goeritz_stated(p) -> Presentation:
    p = int(LensParam(p))
    if p == 2:
        return Presentation.build("beta rho gamma", "rho^4", "gamma^2", "(gamma rho)^2",
                                  "rho^2 beta rho^2 beta^-1")
    if p == 3:
        return direct_sum(_z2("alpha"),
                          Presentation.build("beta delta gamma", "delta^3", "gamma^2",
                                             "(gamma delta)^2"))
    return direct_sum(_z2("alpha"), Presentation.build("beta gamma sigma", "gamma^2", "sigma^2"))


def white_edge_index(p, coset_cap: int = 200) -> int:
    """[white : image of edge] by coset enumeration."""
    data = stabilizer_data(p)
    res = todd_coxeter(data.white, [w for _, w in data.into_white.images], coset_cap)
    if not isinstance(res, Index):
        raise RuntimeError(f"coset enumeration overflowed at cap {coset_cap}")
    return res.n


@dataclass
class VerificationReport:
    p: int
    case: str
    constructed: Presentation
    stated: Presentation
    abelian: dict[str, AbelianInvariants]
    hom_counts: dict[int, dict[str, int]]
    tietze_identity: bool
    tietze_moves: list[str] = field(default_factory=list)

    @property
    def abelian_match(self) -> bool:
        return self.abelian["constructed"] == self.abelian["stated"]

    @property
    def hom_counts_match(self) -> bool:
        return all(v["constructed"] == v["stated"] for v in self.hom_counts.values())

    @property
    def ok(self) -> bool:
        return self.abelian_match and self.hom_counts_match

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "case": self.case,
            "constructed": self.constructed.to_text(),
            "stated": self.stated.to_text(),
            "abelian": {
                "constructed": self.abelian["constructed"].to_dict(),
                "stated": self.abelian["stated"].to_dict(),
                "match": self.abelian_match,
            },
            "homCounts": {
                str(n): dict(v, match=v["constructed"] == v["stated"])
                for n, v in sorted(self.hom_counts.items())
            },
            "tietzeIdentity": self.tietze_identity,
            "fingerprintMatch": self.ok,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def verify_goeritz(p, max_sym: int = 4) -> VerificationReport:
    """Compare the simplified amalgam with the stated presentation."""
    p = int(LensParam(p))
    if not 2 <= max_sym <= 5:
        raise ValueError("max_sym must be in 2..5")
    log = TietzeLog()
    constructed = goeritz_constructed(p, log=log)
    stated = goeritz_stated(p)
    abelian = {"constructed": abelianization_invariants(constructed),
               "stated": abelianization_invariants(stated)}
    counts = {n: {"constructed": hom_count(constructed, n), "stated": hom_count(stated, n)}
              for n in range(2, max_sym + 1)}
    return VerificationReport(p, case_name(p), constructed, stated, abelian, counts,
                              syntactically_equal(constructed, stated), log.moves)
