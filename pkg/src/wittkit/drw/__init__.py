"""De Rham-Witt complexes of small F_p-algebras at bounded depth."""

from .axioms import (AxiomReport, WittComplexInstance, axioms_check, de_rham_instance,
                     degenerate_instance, mutated_instance, presentation_instance)
from .identities import (dlog, eta_evaluate, fd_power_reduce, koszul_check, lambda_injectivity,
                         level1_dimensions, unit_inverse)
from .kahler import KahlerModule, kahler_differentials
from .parse import ExpressionSyntaxError, parse_expression
from .presentation import (DISTINCT, EQUAL, INCONCLUSIVE, BoundedPresentation, OutsideGenerators,
                           PresentationEngine, Verdict, build_presentation, level1_restriction,
                           separate, to_kahler, words_of)
from .words import DRWExpression, MonomialAlgebra, expression_to_witt

__all__ = [
    "AxiomReport", "WittComplexInstance", "axioms_check", "de_rham_instance", "degenerate_instance",
    "mutated_instance", "presentation_instance", "dlog", "eta_evaluate", "fd_power_reduce",
    "koszul_check", "lambda_injectivity", "level1_dimensions", "unit_inverse", "KahlerModule",
    "kahler_differentials", "ExpressionSyntaxError", "parse_expression", "DISTINCT", "EQUAL",
    "INCONCLUSIVE", "BoundedPresentation", "OutsideGenerators", "PresentationEngine", "Verdict",
    "build_presentation", "level1_restriction", "separate", "to_kahler", "words_of",
    "DRWExpression", "MonomialAlgebra", "expression_to_witt",
]
