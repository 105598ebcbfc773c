"""Free factor certificates for pretzel knot Seifert surfaces, and the
orderability verdicts they imply.

Layers, bottom up: free group words (:mod:`.words`), exact integer matrices
(:mod:`.intmat`), Reidemeister-Schreier (:mod:`.schreier`), Stallings
folding (:mod:`.stallings`), Nielsen/Whitehead (:mod:`.nielsen`), the free
factor decision (:mod:`.freefactor`), the knot model (:mod:`.knots`) and
verdicts (:mod:`.classify`).
"""

from .classify import KnotReport, analyze
from .freefactor import Budget, FFVerdict, Outcome, decide, decide_in_ambient
from .intmat import IntMatrix, determinant, hermite_form, quotient, smith_invariants
from .knots import PretzelKnot, alexander, boundary_generators, normalize, parse_knot, seifert_matrices
from .nielsen import WordPair, is_primitive_small, nielsen_ball
from .schreier import SchreierSystem, build, expand, from_generators, rewrite
from .stallings import SubgroupGraph, generates_whole
from .words import Alphabet, Word

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Word", "IntMatrix", "determinant", "hermite_form", "quotient", "smith_invariants",
    "SchreierSystem", "build", "rewrite", "expand", "from_generators",
    "SubgroupGraph", "generates_whole", "WordPair", "nielsen_ball", "is_primitive_small",
    "Budget", "FFVerdict", "Outcome", "decide", "decide_in_ambient",
    "PretzelKnot", "parse_knot", "normalize", "seifert_matrices", "alexander", "boundary_generators",
    "KnotReport", "analyze",
]
