"""Universal Coxeter groups: words, automorphisms, core graphs, splittings."""

from .kernels import BACKEND
from .word import Involution, RankError, Word, format_word, parse_word
from .aut import Automorphism, PartialConj, Swap
from .subgroup import CoreGraph, FreeFactorClass, core_from_generators
from .splitting import SplittingTree, StarClass
from .complexes import ComplexKind

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Automorphism",
    "ComplexKind",
    "CoreGraph",
    "FreeFactorClass",
    "Involution",
    "PartialConj",
    "RankError",
    "SplittingTree",
    "StarClass",
    "Swap",
    "Word",
    "core_from_generators",
    "format_word",
    "parse_word",
]
