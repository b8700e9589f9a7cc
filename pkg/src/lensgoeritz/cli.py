"""Command-line front end.

Exit status 0 on success, 1 on bad input (malformed words or files, bad
flags, p < 2), 2 when two independent checks disagree.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import f2core, goeritz, surgery, tree
from .fpgroups import (AmalgamSpec, GroupHom, Index, Presentation, RejectedEmbedding,
                       abelianization_invariants, amalgamated_product, hom_count,
                       parse_presentation, todd_coxeter)
from .fpgroups.amalgam import Amalgam
from .fpgroups.words import GroupWordParseError, parse_group_word

DEFAULT_SEED = 20240917


class InputError(ValueError):
    """Reported with exit status 1."""


class Disagreement(RuntimeError):
    """Reported with exit status 2."""


def _p(value: str) -> int:
    try:
        return int(surgery.LensParam(int(value)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _presentation_file(path: str) -> Presentation:
    try:
        return parse_presentation(_read(path))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: {exc}") from None


def _emit(out, obj) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


# -- primitive / sweep

@dataclass
class OracleReport:
    word: str
    cyclic: str
    whitehead: f2core.PrimitivityVerdict
    christoffel: f2core.PrimitivityVerdict
    subword: f2core.PrimitivityVerdict
    oz_shape: bool

    @property
    def problems(self) -> list[str]:
        out = []
        if self.whitehead.value != self.christoffel.value:
            out.append("whitehead and christoffel disagree")
        if self.whitehead.is_primitive and self.subword.value is f2core.Verdict.NOT_PRIMITIVE:
            out.append("subword filter flags a primitive word")
        if self.whitehead.is_primitive and not self.oz_shape:
            out.append("primitive word fails the shape check")
        return out

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "cyclic": self.cyclic,
            "whitehead": {"verdict": self.whitehead.value.value,
                          "witness": self.whitehead.witness},
            "christoffel": {"verdict": self.christoffel.value.value,
                            "witness": self.christoffel.witness},
            "subwordFilter": {"verdict": self.subword.value.value, "witness": self.subword.witness},
            "ozShape": "Pass" if self.oz_shape else "Fail",
            "agree": not self.problems,
        }


def oracle_report(w: f2core.Word) -> OracleReport:
    cw = f2core.cyclic_reduce(w)
    return OracleReport(str(w), str(cw), f2core.is_primitive_whitehead(w),
                        f2core.is_primitive_christoffel(w), f2core.lemma22_filter(cw),
                        f2core.oz_shape_check(cw))


def cmd_primitive(args, out) -> int:
    try:
        w = f2core.parse_word(args.word)
    except f2core.WordParseError as exc:
        raise InputError(str(exc)) from None
    rep = oracle_report(w)
    if args.json:
        _emit(out, rep.to_dict())
    else:
        out.write(f"{rep.word}: {rep.whitehead.value.value}\n")
        out.write(f"  whitehead:   {rep.whitehead.value.value}\n")
        out.write(f"  christoffel: {rep.christoffel.value.value}\n")
        out.write(f"  subwords:    {rep.subword.value.value}\n")
        out.write(f"  oz shape:    {'Pass' if rep.oz_shape else 'Fail'}\n")
    if rep.problems:
        raise Disagreement("; ".join(rep.problems))
    return 0


def cmd_sweep(args, out) -> int:
    rng = random.Random(args.seed)
    bad = []
    for _ in range(args.count):
        n = rng.randint(1, args.max_len)
        letters = [rng.randrange(4)]
        while len(letters) < n:
            l = rng.randrange(4)
            if l != letters[-1] ^ 1:
                letters.append(l)
        rep = oracle_report(f2core.Word(tuple(letters)))
        if rep.problems:
            bad.append({"word": rep.word, "problems": rep.problems})
    _emit(out, {"seed": args.seed, "count": args.count, "maxLen": args.max_len,
                "disagreements": bad})
    if bad:
        raise Disagreement(f"{len(bad)} disagreement(s)")
    return 0


# -- surgery / triple

def cmd_surgery(args, out) -> int:
    rep = surgery.verify_sequence(args.p)
    if args.json:
        _emit(out, rep.to_dict())
    else:
        for e in rep.entries:
            out.write(f"{e['label']:>4}  {e['word']:<24} {e['verdict']}\n")
        for a in rep.assertions:
            out.write(f"{'PASS' if a['pass'] else 'FAIL'}  {a['name']}\n")
        for n in rep.notes:
            out.write(f"note: {n}\n")
    if not rep.ok:
        raise Disagreement("surgery sequence assertion failed")
    return 0


def cmd_triple(args, out) -> int:
    try:
        w, exists = surgery.triple_criterion(args.p)
    except AssertionError as exc:
        raise Disagreement(str(exc)) from None
    verdict = f2core.is_primitive_whitehead(w).value.value
    if args.json:
        _emit(out, {"p": args.p, "word": str(w), "verdict": verdict,
                    "primitiveTripleExists": exists})
    else:
        tail = "primitive triple exists" if exists else "no primitive triple"
        out.write(f"{w}: {verdict} - {tail}\n")
    return 0


# -- presentations

def cmd_present(args, out) -> int:
    if args.stated:
        pres = goeritz.goeritz_stated(args.p)
    else:
        pres = goeritz.goeritz_constructed(args.p)
    if args.json:
        _emit(out, pres.to_dict())
    else:
        out.write(pres.to_text())
    return 0


def cmd_verify(args, out) -> int:
    if not 2 <= args.sym_max <= 5:
        raise InputError("--sym-max must be in 2..5")
    rep = goeritz.verify_goeritz(args.p, args.sym_max)
    _emit(out, rep.to_dict())
    if not rep.ok:
        raise Disagreement("constructed and stated presentations have different fingerprints")
    return 0


def cmd_tree(args, out) -> int:
    if args.depth < 0 or args.len_cap < 0:
        raise InputError("--depth and --len-cap must be >= 0")
    ball = tree.enumerate_ball(args.p, args.depth, args.len_cap)
    shape = tree.check_tree(ball)
    quot = tree.quotient_check(ball)
    if args.edges:
        out.write("".join(line + "\n" for line in ball.edge_lines()))
    elif args.json:
        _emit(out, ball.to_dict())
    else:
        white = sorted(set(ball.valences(tree.WHITE).values()))
        black = sorted(set(ball.valences(tree.BLACK).values()))
        _emit(out, {"p": args.p, "depth": args.depth, "lenCap": args.len_cap,
                    "vertices": len(ball.vertices), "edges": len(ball.edges),
                    "truncated": ball.truncated, "tree": shape.ok, "quotient": quot.ok,
                    "whiteValence": white, "blackValence": black,
                    "whiteEdgeIndex": goeritz.white_edge_index(args.p)})
    if not (shape.ok and quot.ok):
        raise Disagreement(shape.reason if not shape.ok else quot.reason)
    return 0


# -- generic files

_SECTIONS = ("A", "B", "edge", "embedA", "embedB")


def parse_amalgam_file(text: str) -> AmalgamSpec:
    """Sections ``[A] [B] [edge]`` hold presentations, ``[embedA] [embedB]``
    hold lines ``gen -> word`` giving the images of the edge generators."""
    parts: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in _SECTIONS:
                raise InputError(f"unknown section [{current}]")
            if current in parts:
                raise InputError(f"duplicate section [{current}]")
            parts[current] = []
        elif current is None:
            raise InputError(f"text before the first section: {line!r}")
        else:
            parts[current].append(line)
    missing = [s for s in _SECTIONS if s not in parts]
    if missing:
        raise InputError("missing section(s): " + ", ".join(f"[{s}]" for s in missing))
    try:
        a, b, c = (parse_presentation("\n".join(parts[s])) for s in ("A", "B", "edge"))
        homs = []
        for s, tgt in (("embedA", a), ("embedB", b)):
            images = {}
            for line in parts[s]:
                if "->" not in line:
                    raise InputError(f"[{s}]: expected 'gen -> word', got {line!r}")
                g, w = (t.strip() for t in line.split("->", 1))
                images[g] = parse_group_word(w)
            homs.append(GroupHom(c, tgt, images))
    except (GroupWordParseError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None
    return AmalgamSpec(a, b, c, homs[0], homs[1])


def cmd_amalgam(args, out) -> int:
    spec = parse_amalgam_file(_read(args.file))
    try:
        pres = amalgamated_product(spec)
    except RejectedEmbedding as exc:
        raise InputError(f"rejected embedding: {exc}") from None
    out.write(pres.to_text())
    if args.word:
        am = Amalgam(spec)
        for w in args.word:
            try:
                nf = am.normal_form(parse_group_word(w))
            except (GroupWordParseError, ValueError) as exc:
                raise InputError(str(exc)) from None
            out.write(f"nf {w}: {am.format(nf)}\n")
    return 0


def cmd_homcount(args, out) -> int:
    if not 1 <= args.n <= 5:
        raise InputError("--n must be in 1..5")
    pres = _presentation_file(args.file)
    out.write(f"{hom_count(pres, args.n)}\n")
    return 0


def cmd_abelian(args, out) -> int:
    inv = abelianization_invariants(_presentation_file(args.file))
    if args.json:
        _emit(out, inv.to_dict())
    else:
        out.write(f"{inv}\n")
    return 0


def cmd_order(args, out) -> int:
    pres = _presentation_file(args.file)
    try:
        res = todd_coxeter(pres, coset_cap=args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if isinstance(res, Index):
        out.write(f"{res.n}\n")
    else:
        out.write(f"overflow: more than {res.cap} cosets\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lensgoeritz",
                 description="Primitive disks and Goeritz groups of genus-2 splittings of L(p,1).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("primitive", help="primitivity verdicts for a word in x, y")
    s.add_argument("word")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_primitive)

    s = sub.add_parser("sweep", help="random cross-check of the primitivity oracles")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--count", type=int, default=2000)
    s.add_argument("--max-len", type=int, default=16)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("surgery", help="the disk-surgery sequence for L(p,1)")
    s.add_argument("--p", type=_p, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("triple", help="whether a primitive triple exists")
    s.add_argument("--p", type=_p, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_triple)

    s = sub.add_parser("present", help="Goeritz group presentation")
    s.add_argument("--p", type=_p, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--constructed", action="store_true", help="simplified amalgam (default)")
    g.add_argument("--stated", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("verify", help="compare constructed and stated presentations")
    s.add_argument("--p", type=_p, required=True)
    s.add_argument("--sym-max", type=int, default=4)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tree", help="ball in the Bass-Serre tree")
    s.add_argument("--p", type=_p, required=True)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--len-cap", type=int, default=4)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--edges", action="store_true", help="line-based edge list")
    g.add_argument("--json", action="store_true", help="adjacency-list JSON")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("amalgam", help="amalgamated product from a sectioned file")
    s.add_argument("--file", required=True)
    s.add_argument("--word", action="append", help="also print the normal form of WORD")
    s.set_defaults(func=cmd_amalgam)

    s = sub.add_parser("homcount", help="number of homomorphisms into S_n")
    s.add_argument("--file", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_homcount)

    s = sub.add_parser("abelian", help="abelianization invariants")
    s.add_argument("--file", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_abelian)

    s = sub.add_parser("order", help="group order by coset enumeration")
    s.add_argument("--file", required=True)
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_order)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except Disagreement as exc:
        err.write(f"internal check failed: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
