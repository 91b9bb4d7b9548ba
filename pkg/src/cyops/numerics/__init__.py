"""High-precision evaluation on top of the exact series: critical points, levels, ell-numbers."""

from .context import DEFAULT, PrecisionContext, evaluate_series, mpf
from .ell import (BAD_CASE, CriticalPoint, EllNumbers, LevelResult, critical_q, ell_numbers,
                  level_from_qc, level_order3, order5_pipeline)
from .hyper import (ClosedForm, Expansion, GeometricInvariants, conjecture_transform,
                    expansion_coefficients, hypergeometric_ell, hypergeometric_invariants)
from .reconstruct import ReconstructionError, convergents, rational_reconstruct
from .roots import RootError, real_roots, smallest_positive_root
from .zeta import bernoulli, hurwitz_zeta, zeta3

__all__ = [
    "BAD_CASE", "DEFAULT", "ClosedForm", "CriticalPoint", "EllNumbers", "Expansion",
    "GeometricInvariants", "LevelResult", "PrecisionContext", "ReconstructionError", "RootError",
    "bernoulli", "conjecture_transform", "convergents", "critical_q", "ell_numbers",
    "evaluate_series", "expansion_coefficients", "hurwitz_zeta", "hypergeometric_ell",
    "hypergeometric_invariants", "level_from_qc", "level_order3", "mpf", "order5_pipeline",
    "rational_reconstruct", "real_roots", "smallest_positive_root", "zeta3",
]
