"""Amalgamated free products and their normal forms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .backends import FiniteBackend, UnsupportedFactor, backend_for, finite_backend
from .presentation import Presentation, disjoint_renaming
from .words import GroupWord, as_group_word, format_group_word


class RejectedEmbedding(ValueError):
    pass


@dataclass(frozen=True)
class GroupHom:
    source: Presentation
    target: Presentation
    images: tuple[tuple[str, GroupWord], ...]

    def __post_init__(self):
        imgs = self.images
        if isinstance(imgs, Mapping):
            imgs = imgs.items()
        imgs = tuple((g, as_group_word(w)) for g, w in imgs)
        object.__setattr__(self, "images", imgs)
        names = [g for g, _ in imgs]
        if sorted(names) != sorted(self.source.generators):
            raise ValueError("images must be given for exactly the source generators")
        for g, w in imgs:
            if not w.symbols() <= set(self.target.generators):
                raise ValueError(f"image of {g} uses symbols outside the target")

    @classmethod
    def inclusion(cls, source: Presentation, target: Presentation) -> "GroupHom":
        return cls(source, target, tuple((g, GroupWord.of(g)) for g in source.generators))

    @property
    def image_map(self) -> dict[str, GroupWord]:
        return dict(self.images)

    def __call__(self, w: GroupWord) -> GroupWord:
        return as_group_word(w).substitute(self.image_map)


@dataclass(frozen=True)
class AmalgamSpec:
    factor_a: Presentation
    factor_b: Presentation
    edge: Presentation
    embed_a: GroupHom
    embed_b: GroupHom

    def __post_init__(self):
        if self.embed_a.source != self.edge or self.embed_b.source != self.edge:
            raise ValueError("embeddings must start at the edge presentation")
        if self.embed_a.target != self.factor_a or self.embed_b.target != self.factor_b:
            raise ValueError("embedding targets must be the two factors")


def check_embedding(hom: GroupHom, coset_cap: int = 2000) -> None:
    """Raise :class:`RejectedEmbedding` unless ``hom`` is an injective homomorphism.

    The source must be finite: relators are checked in the target and the
    images of all source elements are compared.
    """
    try:
        src = finite_backend(hom.source, coset_cap)
        tgt = backend_for(hom.target, coset_cap)
    except UnsupportedFactor as exc:
        raise RejectedEmbedding(str(exc)) from None
    for r in hom.source.relators:
        if tgt.evaluate(hom(r)) != tgt.identity:
            raise RejectedEmbedding(f"relator {r} maps to {hom(r)}, nontrivial in target")
    images = {}
    for a in src.elements():
        key = tgt.evaluate(hom(src.word(a)))
        if key in images:
            raise RejectedEmbedding(
                f"{src.word(images[key])} and {src.word(a)} have the same image")
        images[key] = a


def _renaming(spec: AmalgamSpec) -> dict[str, str]:
    return disjoint_renaming(spec.factor_a, spec.factor_b)


def amalgamated_product(spec: AmalgamSpec, check: bool = True) -> Presentation:
    """Presentation of ``A *_C B``; factor B generators are renamed on collision."""
    if check:
        check_embedding(spec.embed_a)
        check_embedding(spec.embed_b)
    ren = _renaming(spec)
    b = spec.factor_b.rename(ren)
    glue = tuple(spec.embed_a(gen) * spec.embed_b(gen).rename(ren).inverse()
                 for gen in (GroupWord.of(c) for c in spec.edge.generators))
    return Presentation(spec.factor_a.generators + b.generators,
                        spec.factor_a.relators + b.relators + glue)


@dataclass(frozen=True)
class NormalForm:
    """``edge . t_1 t_2 ... t_n``: an edge-group element then alternating
    nontrivial right-coset representatives tagged ``"A"`` or ``"B"``."""

    edge: object
    syllables: tuple[tuple[str, object], ...] = ()

    def __len__(self):
        return len(self.syllables)


class Amalgam:
    """Word problem and normal forms for ``A *_C B`` with finite ``C``."""

    def __init__(self, spec: AmalgamSpec, coset_cap: int = 2000):
        self.spec = spec
        check_embedding(spec.embed_a, coset_cap)
        check_embedding(spec.embed_b, coset_cap)
        self.presentation = amalgamated_product(spec, check=False)
        self.rename_b = _renaming(spec)
        self._unrename_b = {v: k for k, v in self.rename_b.items()}
        self.edge = finite_backend(spec.edge, coset_cap)
        self.factors = {"A": backend_for(spec.factor_a, coset_cap),
                        "B": backend_for(spec.factor_b, coset_cap)}
        self.homs = {"A": spec.embed_a, "B": spec.embed_b}
        self.side = {g: "A" for g in spec.factor_a.generators}
        self.side.update({self.rename_b.get(g, g): "B" for g in spec.factor_b.generators})
        self.into: dict[str, dict] = {}
        self.outof: dict[str, dict] = {}
        self.splitters = {}
        for s in ("A", "B"):
            fac = self.factors[s]
            hom = self.homs[s]
            self.into[s] = {c: fac.evaluate(hom(self.edge.word(c))) for c in self.edge.elements()}
            self.outof[s] = {v: c for c, v in self.into[s].items()}
            gens = [fac.evaluate(hom(GroupWord.of(g))) for g in spec.edge.generators]
            self.splitters[s] = fac.subgroup(gens)

    # -- factor bookkeeping

    def factor_word(self, side: str, w: GroupWord) -> GroupWord:
        """Factor-local word -> word in amalgam generator names."""
        return w.rename(self.rename_b) if side == "B" else w

    def _local(self, side: str, w: GroupWord) -> GroupWord:
        return w.rename(self._unrename_b) if side == "B" else w

    def factor_element(self, side: str, w) -> object:
        return self.factors[side].evaluate(self._local(side, as_group_word(w)))

    def edge_index(self, side: str) -> int | None:
        return self.splitters[side].index

    def transversal(self, side: str, max_len: int | None = None):
        """Right-coset representatives of the edge image in a factor.

        Returns ``(reps, truncated)``; the identity is always first.
        """
        reps, cut = self.splitters[side].transversal(max_len)
        ident = self.factors[side].identity
        reps = [ident] + [r for r in reps if r != ident]
        return reps, cut

    def is_representative(self, side: str, t) -> bool:
        h, rep = self.splitters[side].split(t)
        return rep == t and t != self.factors[side].identity

    # -- normal forms

    def identity(self) -> NormalForm:
        return NormalForm(self.edge.identity)

    def prepend(self, side: str, x, nf: NormalForm) -> NormalForm:
        """Normal form of ``x . g`` for a factor element ``x`` and ``g`` in normal form."""
        fac = self.factors[side]
        y = fac.mul(x, self.into[side][nf.edge])
        rest = nf.syllables
        if rest and rest[0][0] == side:
            y = fac.mul(y, rest[0][1])
            rest = rest[1:]
        h, t = self.splitters[side].split(y)
        try:
            c = self.outof[side][h]
        except KeyError:
            raise AssertionError("coset split left the edge image") from None
        if t != fac.identity:
            rest = ((side, t),) + rest
        return NormalForm(c, rest)

    def _pieces(self, w: GroupWord):
        pieces: list[tuple[str, list]] = []
        for g, e in w.syllables:
            s = self.side.get(g)
            if s is None:
                raise ValueError(f"{g!r} is not a generator of the amalgam")
            if pieces and pieces[-1][0] == s:
                pieces[-1][1].append((g, e))
            else:
                pieces.append((s, [(g, e)]))
        return [(s, self.factor_element(s, GroupWord.from_letters(l))) for s, l in pieces]

    def normal_form(self, w) -> NormalForm:
        nf = self.identity()
        for side, x in reversed(self._pieces(as_group_word(w))):
            nf = self.prepend(side, x, nf)
        return nf

    def from_syllables(self, syllables) -> NormalForm:
        nf = self.identity()
        for side, x in reversed(syllables):
            nf = self.prepend(side, x, nf)
        return nf

    def multiply(self, a: NormalForm, b: NormalForm) -> NormalForm:
        nf = b
        for side, x in reversed(a.syllables):
            nf = self.prepend(side, x, nf)
        return self.prepend("A", self.into["A"][a.edge], nf)

    def inverse(self, a: NormalForm) -> NormalForm:
        return self.normal_form(self.to_word(a).inverse())

    def to_word(self, nf: NormalForm) -> GroupWord:
        w = self.factor_word("A", self.factors["A"].word(self.into["A"][nf.edge]))
        for side, t in nf.syllables:
            w = w * self.factor_word(side, self.factors[side].word(t))
        return w

    def syllable_word(self, side: str, t) -> GroupWord:
        return self.factor_word(side, self.factors[side].word(t))

    def format(self, nf: NormalForm) -> str:
        edge = self.factor_word("A", self.factors["A"].word(self.into["A"][nf.edge]))
        parts = [format_group_word(self.syllable_word(s, t)) for s, t in nf.syllables]
        head = "" if not edge else f"[{format_group_word(edge)}] "
        return head + (" | ".join(parts) if parts else "1")


@lru_cache(maxsize=64)
def amalgam_for(spec: AmalgamSpec) -> Amalgam:
    return Amalgam(spec)


def amalgam_normal_form(spec: AmalgamSpec, word) -> NormalForm:
    return amalgam_for(spec).normal_form(word)
