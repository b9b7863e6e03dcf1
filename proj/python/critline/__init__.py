"""Critical-strip numerics: zeta, gamma and completed-xi evaluation,
identity verification, zero bracketing and strip scanning.

The heavy lifting lives in the compiled extension `_critline`; this package
just re-exports it.
"""

try:
    from ._critline import *  # noqa: F401,F403  (installed-wheel layout)
    from ._critline import __version__  # noqa: F401
except ImportError:  # build-tree layout used by ctest
    from _critline import *  # noqa: F401,F403
    from _critline import __version__  # noqa: F401

__all__ = [
    "cexp", "ccos", "csin", "ccosh", "csinh", "clog", "cpow_real_base",
    "cgamma", "reflection_residual",
    "zeta_direct", "zeta_eta", "zeta_strip", "is_trivial_zero",
    "xi_eval", "xi_on_line", "functional_eq_residual", "symmetry_residuals",
    "bracket_line", "refine", "scan_strip", "extract_curves",
    "verify_functional_eq", "verify_reflection", "verify_line_real", "verify_symmetry",
    "EvalResult", "Bracket", "ZeroRecord", "Region", "GridReport",
    "CurveSegment", "CurveReport", "SuiteResult",
    "CritlineError", "DomainError", "OverflowError", "PoleError",
    "DegenerateError", "ConvergenceError", "InternalError",
]
