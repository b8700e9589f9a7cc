"""Word algebra in the free group F2 = <x, y> and primitivity deciders.

Letters are stored as small integers so that the hot loops of the
exhaustive sweeps stay cheap::

    0 = x    1 = x^-1    2 = y    3 = y^-1

so the inverse of a letter ``l`` is ``l ^ 1`` and the integer order is the
fixed letter order ``x < x^-1 < y < y^-1`` used for canonical rotations.

Three primitivity routes are provided.  :func:`is_primitive_whitehead` and
:func:`is_primitive_christoffel` are complete deciders (they never answer
``Unknown``); :func:`oz_shape_check` and :func:`lemma22_filter` are
necessary-condition filters.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Letter", "Word", "CyclicWord", "AbelianImage", "F2Automorphism",
    "Verdict", "PrimitivityVerdict", "WordParseError", "NotCoprimeError",
    "EmptyWordError", "free_reduce", "cyclic_reduce", "abelianize",
    "apply_automorphism", "whitehead_generators", "is_primitive_whitehead",
    "christoffel", "is_primitive_christoffel", "oz_shape_check",
    "lemma22_filter", "primitive_root", "is_semiprimitive_word",
    "parse_word", "iter_reduced_words", "swap_xy", "IDENTITY",
]

X, XI, Y, YI = 0, 1, 2, 3
_CHARS = "xXyY"


class Letter(enum.IntEnum):
    x = X
    X = XI
    y = Y
    Y = YI

    @property
    def generator(self) -> str:
        return "x" if self < 2 else "y"

    @property
    def sign(self) -> int:
        return -1 if self & 1 else 1

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)

    @classmethod
    def of(cls, generator: str, sign: int) -> "Letter":
        if generator not in ("x", "y") or sign not in (1, -1):
            raise ValueError(f"bad letter ({generator!r}, {sign})")
        return cls((0 if generator == "x" else 2) + (sign < 0))


class WordParseError(ValueError):
    pass


class NotCoprimeError(ValueError):
    pass


class EmptyWordError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tuple-level kernels


def _reduce(seq: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for l in seq:
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _cyclic_core(t: tuple[int, ...]) -> tuple[int, ...]:
    i, j = 0, len(t) - 1
    while i < j and t[i] == t[j] ^ 1:
        i += 1
        j -= 1
    return t[i:j + 1]


def _least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    if len(t) < 2:
        return t
    return min(t[i:] + t[:i] for i in range(len(t)))


def _canonical(t: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical cyclic key of a freely reduced tuple."""
    return _least_rotation(_cyclic_core(t))


def _invert(t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(l ^ 1 for l in reversed(t))


def _to_letters(seq) -> Iterator[int]:
    for l in seq:
        if isinstance(l, str):
            if l not in _CHARS:
                raise WordParseError(f"unknown letter {l!r}")
            yield _CHARS.index(l)
        elif isinstance(l, tuple):
            yield int(Letter.of(*l))
        else:
            l = int(l)
            if not 0 <= l <= 3:
                raise ValueError(f"letter code out of range: {l}")
            yield l


def _format(t: Sequence[int]) -> str:
    if not t:
        return "1"
    parts = []
    for l, run in itertools.groupby(t):
        n = len(list(run))
        parts.append(_CHARS[l] if n == 1 else f"{_CHARS[l]}^{n}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word in ``x, y``.

    Construct with :func:`free_reduce` or :meth:`Word.parse` unless the
    letters are already known to be reduced.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        t = self.letters
        for a, b in zip(t, t[1:]):
            if a == b ^ 1:
                raise ValueError(f"word is not freely reduced: {_format(t)}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return (Letter(l) for l in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def __pow__(self, n: int) -> "Word":
        base = self.letters if n >= 0 else _invert(self.letters)
        return Word(_reduce(base * abs(n)))

    def inverse(self) -> "Word":
        return Word(_invert(self.letters))

    __invert__ = inverse

    def is_cyclically_reduced(self) -> bool:
        t = self.letters
        return len(t) < 2 or t[0] != t[-1] ^ 1

    def __str__(self):
        return _format(self.letters)

    def __repr__(self):
        return f"Word({_format(self.letters)!r})"


@dataclass(frozen=True, order=True)
class CyclicWord:
    """Conjugacy class of a word, held by its canonical rotation."""

    representative: Word = field(default_factory=Word)

    def __post_init__(self):
        t = self.representative.letters
        if _canonical(t) != t:
            raise ValueError(f"{_format(t)} is not a canonical cyclic word")

    @property
    def letters(self) -> tuple[int, ...]:
        return self.representative.letters

    def __len__(self):
        return len(self.representative)

    def rotations(self) -> Iterator[Word]:
        t = self.letters
        for i in range(max(len(t), 1)):
            yield Word(t[i:] + t[:i])

    def __str__(self):
        return f"[{self.representative}]"


@dataclass(frozen=True)
class AbelianImage:
    a: int
    b: int

    def __add__(self, other: "AbelianImage") -> "AbelianImage":
        return AbelianImage(self.a + other.a, self.b + other.b)


@dataclass(frozen=True)
class F2Automorphism:
    """Endomorphism of F2 given by the images of ``x`` and ``y``.

    The default constructor does not check invertibility; only the maps
    produced by :func:`whitehead_generators` are known automorphisms.
    """

    image_x: Word
    image_y: Word
    name: str = field(default="", compare=False)

    def __post_init__(self):
        ix, iy = self.image_x.letters, self.image_y.letters
        object.__setattr__(self, "_images", (ix, _invert(ix), iy, _invert(iy)))

    def __call__(self, w: Word) -> Word:
        return apply_automorphism(self, w)

    def _apply(self, t: tuple[int, ...]) -> tuple[int, ...]:
        imgs = self._images
        return _reduce(itertools.chain.from_iterable(imgs[l] for l in t))

    def compose(self, other: "F2Automorphism") -> "F2Automorphism":
        """``self o other``: apply ``other`` first."""
        return F2Automorphism(self(other.image_x), self(other.image_y),
                              f"{self.name}*{other.name}")

    def __str__(self):
        return self.name or f"x->{self.image_x}, y->{self.image_y}"


IDENTITY = F2Automorphism(Word((X,)), Word((Y,)), "id")


class Verdict(str, enum.Enum):
    PRIMITIVE = "Primitive"
    NOT_PRIMITIVE = "NotPrimitive"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PrimitivityVerdict:
    value: Verdict
    witness: str | None = None

    def __bool__(self):
        return self.value is Verdict.PRIMITIVE

    @property
    def is_primitive(self) -> bool:
        return self.value is Verdict.PRIMITIVE


# ---------------------------------------------------------------------------
# basic operations


def free_reduce(letters) -> Word:
    """Freely reduce a raw letter sequence.

    Accepts letter codes, :class:`Letter` members, characters from
    ``"xXyY"`` or ``(generator, sign)`` pairs.
    """
    if isinstance(letters, Word):
        return letters
    return Word(_reduce(_to_letters(letters)))


def cyclic_reduce(w: Word) -> CyclicWord:
    return CyclicWord(Word(_canonical(w.letters)))


def abelianize(w: Word) -> AbelianImage:
    t = w.letters
    return AbelianImage(t.count(X) - t.count(XI), t.count(Y) - t.count(YI))


def apply_automorphism(phi: F2Automorphism, w: Word) -> Word:
    return Word(phi._apply(w.letters))


def swap_xy(w: Word) -> Word:
    return Word(tuple(l ^ 2 for l in w.letters))


def _letter_map(perm: bool, sx: int, sy: int):
    """Type I map: optional x<->y swap followed by sign changes."""
    gx = Word(((Y if perm else X) + (sx < 0),))
    gy = Word(((X if perm else Y) + (sy < 0),))
    return gx, gy


@lru_cache(maxsize=None)
def _whitehead_list() -> tuple[F2Automorphism, ...]:
    gens: list[F2Automorphism] = []
    # type II first: they are the only ones that can change the length
    for g, h in ((X, Y), (Y, X)):
        for e in (1, -1):
            hl = h if e == 1 else h ^ 1
            for side in ("right", "left"):
                img = (g, hl) if side == "right" else (hl, g)
                gname, hname = _CHARS[g], _CHARS[h]
                hpow = hname if e == 1 else f"{hname}^-1"
                name = (f"{gname}->{gname}{hpow}" if side == "right"
                        else f"{gname}->{hpow}{gname}")
                if g == X:
                    phi = F2Automorphism(Word(img), Word((Y,)), name)
                else:
                    phi = F2Automorphism(Word((X,)), Word(img), name)
                gens.append(phi)
    for perm in (False, True):
        for sx in (1, -1):
            for sy in (1, -1):
                gx, gy = _letter_map(perm, sx, sy)
                name = "id" if (not perm and sx == sy == 1) else f"x->{gx}, y->{gy}"
                gens.append(F2Automorphism(gx, gy, name))
    return tuple(gens)


def whitehead_generators() -> frozenset[F2Automorphism]:
    """The rank-2 Whitehead automorphisms (8 of type I, 8 of type II)."""
    return frozenset(_whitehead_list())


_TYPE_II = _whitehead_list()[:8]
_TYPE_I = _whitehead_list()[8:]


# ---------------------------------------------------------------------------
# primitivity deciders


def _whitehead_key(t: tuple[int, ...]) -> tuple[int, ...]:
    return _canonical(t)


@lru_cache(maxsize=1 << 20)
def _whitehead_descent(key: tuple[int, ...]) -> tuple[bool, tuple[str, ...]]:
    chain: list[str] = []
    t = key
    while len(t) > 1:
        for phi in _TYPE_II:
            s = _cyclic_core(phi._apply(t))
            if len(s) < len(t):
                chain.append(phi.name)
                t = _canonical(s)
                break
        else:
            return False, tuple(chain)
    return len(t) == 1, tuple(chain)


def is_primitive_whitehead(w: Word) -> PrimitivityVerdict:
    """Decide primitivity by Whitehead descent on the cyclic word."""
    key = _whitehead_key(w.letters)
    if not key:
        return PrimitivityVerdict(Verdict.NOT_PRIMITIVE, "empty word")
    ok, chain = _whitehead_descent(key)
    if ok:
        return PrimitivityVerdict(Verdict.PRIMITIVE, " ; ".join(chain) or "generator")
    return PrimitivityVerdict(
        Verdict.NOT_PRIMITIVE,
        f"Whitehead-minimal of length > 1 after [{' ; '.join(chain)}]")


def _christoffel_letters(a: int, b: int) -> tuple[int, ...]:
    # Stern-Brocot walk: each node's word is the product of its two parents.
    left, right = ((1, 0), (X,)), ((0, 1), (Y,))
    if (a, b) == left[0]:
        return left[1]
    if (a, b) == right[0]:
        return right[1]
    while True:
        (la, lb), lw = left
        (ra, rb), rw = right
        ma, mb = la + ra, lb + rb
        if (ma, mb) == (a, b):
            return lw + rw
        if b * ma < mb * a:
            right = ((ma, mb), lw + rw)
        else:
            left = ((ma, mb), lw + rw)


def christoffel(a: int, b: int) -> CyclicWord:
    """Balanced cyclic word with ``a`` letters x and ``b`` letters y."""
    if a < 0 or b < 0:
        raise ValueError("christoffel() needs nonnegative counts")
    if gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) != 1")
    return CyclicWord(Word(_least_rotation(_christoffel_letters(a, b))))


@lru_cache(maxsize=1 << 20)
def _christoffel_verdict(key: tuple[int, ...]) -> tuple[bool, str]:
    a = key.count(X) - key.count(XI)
    b = key.count(Y) - key.count(YI)
    g = gcd(a, b)
    if g != 1:
        return False, f"abelianization ({a}, {b}) has gcd {g}"
    # sign-normalize so both exponent sums are nonnegative
    flip = (a < 0) | ((b < 0) << 1)
    t = tuple(l ^ 1 if (l < 2 and flip & 1) or (l >= 2 and flip & 2) else l
              for l in key)
    target = christoffel(abs(a), abs(b)).letters
    if _least_rotation(t) == target:
        return True, f"conjugate to Christoffel word {_format(target)}"
    return False, f"not conjugate to Christoffel word {_format(target)}"


def is_primitive_christoffel(w: Word) -> PrimitivityVerdict:
    """Decide primitivity by comparison with the Christoffel class."""
    ok, why = _christoffel_verdict(_canonical(w.letters))
    return PrimitivityVerdict(Verdict.PRIMITIVE if ok else Verdict.NOT_PRIMITIVE, why)


def _shape_ok(t: tuple[int, ...], major: int) -> bool:
    # every major-letter occurrence has one sign and is isolated; the exponents
    # of the other generator between consecutive occurrences span {n, n+1}
    other = major ^ 2
    for lead in (major, major ^ 1):
        if (lead ^ 1) in t or lead not in t:
            continue
        i = t.index(lead)
        r = t[i:] + t[:i]
        exps, cur = [], None
        for l in r:
            if l == lead:
                if cur is not None:
                    exps.append(cur)
                cur = 0
            else:
                cur += 1 if l == other else -1
        exps.append(cur)
        # adjacent major letters only make sense when the other one is absent
        if 0 in exps and (other in t or other ^ 1 in t):
            continue
        if max(exps) - min(exps) <= 1:
            return True
    return False


def oz_shape_check(cw: CyclicWord) -> bool:
    """Necessary normal form for primitive cyclic words.

    True when some rotation is a product of terms ``x^e y^n`` and
    ``x^e y^(n+1)`` (fixed e, n), or the same with x and y exchanged.
    Passing does not imply primitivity (``y^3`` passes).
    """
    t = cw.letters
    if not t:
        return True
    return _shape_ok(t, X) or _shape_ok(t, Y)


_L22_PATTERNS = ((Y, X, YI), (X, Y, X, Y, Y, Y))


def _contains_cyclic(t: tuple[int, ...], pat: tuple[int, ...]) -> bool:
    n, m = len(t), len(pat)
    if m > n:
        return False
    tt = t + t
    return any(tt[i:i + m] == pat for i in range(n))


@lru_cache(maxsize=1 << 20)
def _forbidden_subword(t: tuple[int, ...]) -> str | None:
    for variant in (t, _invert(t)):
        for phi in _TYPE_I:
            v = phi._apply(variant)  # letterwise, stays reduced
            for pat in _L22_PATTERNS:
                if _contains_cyclic(v, pat):
                    return f"{_format(pat)} under {phi.name}" + (
                        " on the inverse word" if variant is not t else "")
    return None


def lemma22_filter(cw: CyclicWord) -> PrimitivityVerdict:
    """Subword obstruction: flags y x y^-1 and x y x y^n (n >= 3).

    Returns NotPrimitive with the offending pattern, or Unknown.
    """
    hit = _forbidden_subword(cw.letters)
    if hit is None:
        return PrimitivityVerdict(Verdict.UNKNOWN)
    return PrimitivityVerdict(Verdict.NOT_PRIMITIVE, f"contains {hit}")


def primitive_root(w: Word) -> tuple[CyclicWord, int]:
    t = _canonical(w.letters)
    n = len(t)
    if n == 0:
        raise EmptyWordError("primitive_root of the empty word")
    for d in range(1, n + 1):
        if n % d == 0 and t[:d] * (n // d) == t:
            return CyclicWord(Word(t[:d])), n // d
    raise AssertionError("unreachable")


def is_semiprimitive_word(w: Word, p: int) -> bool:
    """True iff w is conjugate to the p-th power of a primitive element."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if not w.letters:
        return False
    root, k = primitive_root(w)
    return k == p and is_primitive_whitehead(root.representative).is_primitive


# ---------------------------------------------------------------------------
# text grammar:  x y generators, X Y inverses, ^k on a letter or group


def parse_word(text: str) -> Word:
    src = "".join(text.split())
    pos = 0

    def exponent() -> int:
        nonlocal pos
        if pos < len(src) and src[pos] == "^":
            pos += 1
            start = pos
            if pos < len(src) and src[pos] in "+-":
                pos += 1
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            digits = src[start:pos]
            if digits in ("", "+", "-"):
                raise WordParseError(f"missing exponent at {start} in {text!r}")
            return int(digits)
        return 1

    def sequence(closing: bool) -> tuple[int, ...]:
        nonlocal pos
        out: list[int] = []
        while pos < len(src):
            c = src[pos]
            if c == ")":
                if not closing:
                    raise WordParseError(f"unbalanced ')' in {text!r}")
                return tuple(out)
            if c == "(":
                pos += 1
                inner = sequence(True)
                if pos >= len(src):
                    raise WordParseError(f"unclosed '(' in {text!r}")
                pos += 1
                unit = inner
            elif c in _CHARS:
                pos += 1
                unit = (_CHARS.index(c),)
            elif c == "1":
                pos += 1
                unit = ()
            else:
                raise WordParseError(f"unexpected {c!r} at {pos} in {text!r}")
            k = exponent()
            base = unit if k >= 0 else _invert(unit)
            out.extend(base * abs(k))
        if closing:
            raise WordParseError(f"unclosed '(' in {text!r}")
        return tuple(out)

    return Word(_reduce(sequence(False)))


def iter_reduced_words(max_len: int, min_len: int = 0) -> Iterator[tuple[int, ...]]:
    """All freely reduced letter tuples with ``min_len <= len <= max_len``."""
    if min_len <= 0:
        yield ()

    def extend(prefix: list[int]):
        last = prefix[-1] ^ 1
        for l in range(4):
            if l != last:
                prefix.append(l)
                if len(prefix) >= min_len:
                    yield tuple(prefix)
                if len(prefix) < max_len:
                    yield from extend(prefix)
                prefix.pop()

    if max_len >= 1:
        for l in range(4):
            if 1 >= min_len:
                yield (l,)
            if max_len > 1:
                yield from extend([l])
