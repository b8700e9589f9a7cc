"""Finitely presented groups: presentations, products, amalgams and invariants."""
from .amalgam import (AmalgamSpec, Amalgam, GroupHom, NormalForm, RejectedEmbedding,
                      amalgam_normal_form, amalgamated_product, check_embedding)
from .backends import UnsupportedFactor, backend_for, finite_backend
from .coset import Index, Overflow, default_coset_cap, todd_coxeter
from .homcount import hom_count
from .presentation import (TRIVIAL, Presentation, PresentationParseError, cyclic,
                           direct_sum, free_product, parse_presentation, read_presentation)
from .smith import AbelianInvariants, abelianization_invariants, smith_diagonal
from .tietze import TietzeLog, canonical_form, syntactically_equal, tietze_simplify
from .words import GroupWord, GroupWordParseError, commutator, gen, parse_group_word

__all__ = [
    "AbelianInvariants", "Amalgam", "AmalgamSpec", "GroupHom", "GroupWord",
    "GroupWordParseError", "Index", "NormalForm", "Overflow", "Presentation",
    "PresentationParseError", "RejectedEmbedding", "TRIVIAL", "TietzeLog",
    "UnsupportedFactor", "abelianization_invariants", "amalgam_normal_form",
    "amalgamated_product", "backend_for", "canonical_form", "check_embedding",
    "commutator", "cyclic", "default_coset_cap", "direct_sum", "finite_backend",
    "free_product", "gen", "hom_count", "parse_group_word", "parse_presentation",
    "read_presentation", "smith_diagonal", "syntactically_equal", "tietze_simplify",
    "todd_coxeter",
]
