"""Saturated strongly stable ideals with a given Hilbert polynomial.

Thin wrapper over the compiled extension. Polynomials are passed as strings
in the variable t (e.g. "4*t", "t^2+3*t-1", "(1/2)*t^2+(1/2)*t"); ideals are
Ideal objects over variables x0 < x1 < ... indexed from the smallest.
"""

try:
    from ._ssi import (
        Ideal,
        gotzmann_decomposition,
        gotzmann_number,
        growth_vector,
        is_gen_segment,
        is_hilb_segment,
        is_hilbert_polynomial,
        is_reg_segment,
        is_strongly_stable,
        lex_ideal,
        macaulay_decomposition,
        saturate,
        strongly_stable_ideals,
    )
except ImportError:  # in-tree build: extension next to this package
    from _ssi import (  # noqa: F401
        Ideal,
        gotzmann_decomposition,
        gotzmann_number,
        growth_vector,
        is_gen_segment,
        is_hilb_segment,
        is_hilbert_polynomial,
        is_reg_segment,
        is_strongly_stable,
        lex_ideal,
        macaulay_decomposition,
        saturate,
        strongly_stable_ideals,
    )

__all__ = [
    "Ideal",
    "gotzmann_decomposition",
    "gotzmann_number",
    "growth_vector",
    "is_gen_segment",
    "is_hilb_segment",
    "is_hilbert_polynomial",
    "is_reg_segment",
    "is_strongly_stable",
    "lex_ideal",
    "macaulay_decomposition",
    "saturate",
    "strongly_stable_ideals",
]

__version__ = "0.1.0"
