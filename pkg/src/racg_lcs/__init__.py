"""Lower central series tools for right-angled Coxeter groups RC_K."""

from .complexes import Complex1Skeleton, ComplexError, parse_complex
from .lcs import GeneratorSet, commutant_generators, l4_generators, lk_basis
from .magnus import Certificate, TruncatedSeries, mu, not_in_gamma
from .words import NestedCommutator, build_nested, normalize

__all__ = [
    "Certificate", "Complex1Skeleton", "ComplexError", "GeneratorSet", "NestedCommutator",
    "TruncatedSeries", "build_nested", "commutant_generators", "l4_generators", "lk_basis",
    "mu", "normalize", "not_in_gamma", "parse_complex",
]
