"""Exact checks for WDVV prepotentials, Lenard complexes, and Frobenius data.

Thin wrapper over the compiled ``_core`` module. All arithmetic is exact:
polynomials over arbitrary-precision rationals in and out as canonical
strings, curve counts as Python integers.
"""

try:
    from ._core import (
        parse,
        diff,
        eval_at,
        kontsevich,
        kontsevich_from_pde,
        pde_certified,
        check_wdvv,
        check_lenard,
        check_frobenius,
        haantjes_zero,
        run,
    )
except ImportError:  # running against a build tree, module next to the package
    from _core import (
        parse,
        diff,
        eval_at,
        kontsevich,
        kontsevich_from_pde,
        pde_certified,
        check_wdvv,
        check_lenard,
        check_frobenius,
        haantjes_zero,
        run,
    )

__all__ = [
    "parse",
    "diff",
    "eval_at",
    "kontsevich",
    "kontsevich_from_pde",
    "pde_certified",
    "check_wdvv",
    "check_lenard",
    "check_frobenius",
    "haantjes_zero",
    "run",
]
