"""Demazure characters and support varieties of Demazure modules over B_1."""

from .charring import Character, demazure_character, dimension
from .rootsys import build_root_system
from .supports import Orbit, Variety, classify, g_saturate, support_A1, support_A2
from .weyl import WeylElement, from_word, reduced_word

__all__ = [
    "Character",
    "Orbit",
    "Variety",
    "WeylElement",
    "build_root_system",
    "classify",
    "demazure_character",
    "dimension",
    "from_word",
    "g_saturate",
    "reduced_word",
    "support_A1",
    "support_A2",
]

__version__ = "0.1.0"
