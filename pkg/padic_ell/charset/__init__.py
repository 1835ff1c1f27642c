"""Tame Dirichlet characters chi_D * omega^j with values in Z_p."""

from .character import (
    DirichletCharacter,
    char_bar,
    char_eval,
    char_sign,
    fundamental_part,
    is_fundamental_discriminant,
    parse_character,
)

__all__ = [
    # Classes
    "DirichletCharacter",

    # Functions
    "char_bar",
    "char_eval",
    "char_sign",
    "fundamental_part",
    "is_fundamental_discriminant",
    "parse_character",
]
