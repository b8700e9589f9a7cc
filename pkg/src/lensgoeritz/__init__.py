"""Primitive disks, disk surgery and Goeritz groups for genus-2 Heegaard
splittings of lens spaces L(p, 1)."""
from .f2core import (CyclicWord, F2Automorphism, PrimitivityVerdict, Verdict, Word,
                     abelianize, christoffel, cyclic_reduce, free_reduce,
                     is_primitive_christoffel, is_primitive_whitehead, lemma22_filter,
                     oz_shape_check, parse_word, primitive_root)
from .goeritz import goeritz_constructed, goeritz_stated, stabilizer_data, verify_goeritz
from .surgery import LensParam, surgery_words, triple_criterion, verify_sequence
from .tree import check_tree, enumerate_ball, quotient_check

__version__ = "0.1.0"

__all__ = [
    "CyclicWord", "F2Automorphism", "LensParam", "PrimitivityVerdict", "Verdict", "Word",
    "abelianize", "check_tree", "christoffel", "cyclic_reduce", "enumerate_ball",
    "free_reduce", "goeritz_constructed", "goeritz_stated", "is_primitive_christoffel",
    "is_primitive_whitehead", "lemma22_filter", "oz_shape_check", "parse_word",
    "primitive_root", "quotient_check", "stabilizer_data", "surgery_words",
    "triple_criterion", "verify_goeritz", "verify_sequence",
]
