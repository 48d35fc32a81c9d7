"""Exact-arithmetic toolkit for rank-3 bundles on projective 3-space.

Everything runs over the rationals: Chern characters live in a truncated
polynomial ring, Euler characteristics come from the Todd pairing, root
counts come from Sturm chains, and no floating point appears anywhere.
The ``verify`` module replays the full checklist of published reference
values; the ``cli`` module exposes the same machinery on the command line.
"""

from __future__ import annotations

from .binomials import binom3, binom3_poly
from .chern import (
    ChernData,
    ChiPolynomial,
    chern_character,
    chern_from_character,
    chi_curve_form,
    chi_endomorphisms,
    chi_endomorphisms_closed_form,
    chi_polynomial,
    dual,
    euler_characteristic,
    twist,
    validate_parity,
)
from .chowring import ONE, ChowClass, add, degree, exp_line, mul, todd_p3
from .cohomtable import (
    CohomTable,
    MonadType,
    instanton_check,
    monad_chern,
    natural_table,
    serre_symmetry_check,
)
from .cubics import CubicSignAnalysis
from .curvelink import (
    CurveInvariants,
    bundle_to_curve,
    chi_f1_charge,
    chi_ideal_sheaf,
    curve_to_bundle,
    generated_by_two_sections,
    rational_normal_twist_degree,
    thooft_threshold,
)
from .errors import (
    DomainError,
    MissingHypothesis,
    MissingRows,
    NonIntegralChernClass,
    NonIntegralChi,
    NotNaturalizable,
    OutOfValidityRange,
    ParityViolation,
    RankUnsupported,
    ToolkitError,
)
from .moduli import (
    DerivationStep,
    ModuliReport,
    charge2_dimension_chain,
    ext_difference,
    smooth_dimension,
)
from .spectrum import (
    BALANCED_BUNDLE,
    Spectrum,
    SpectrumContext,
    enumerate_spectra,
    h0_p1,
    h1_from_spectrum,
    h1_p1,
    h2_from_spectrum,
    is_instanton_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BALANCED_BUNDLE",
    "ChernData",
    "ChiPolynomial",
    "ChowClass",
    "CohomTable",
    "CubicSignAnalysis",
    "CurveInvariants",
    "DerivationStep",
    "DomainError",
    "MissingHypothesis",
    "MissingRows",
    "ModuliReport",
    "MonadType",
    "NonIntegralChernClass",
    "NonIntegralChi",
    "NotNaturalizable",
    "ONE",
    "OutOfValidityRange",
    "ParityViolation",
    "RankUnsupported",
    "Spectrum",
    "SpectrumContext",
    "ToolkitError",
    "add",
    "binom3",
    "binom3_poly",
    "bundle_to_curve",
    "charge2_dimension_chain",
    "chern_character",
    "chern_from_character",
    "chi_curve_form",
    "chi_endomorphisms",
    "chi_endomorphisms_closed_form",
    "chi_f1_charge",
    "chi_ideal_sheaf",
    "chi_polynomial",
    "curve_to_bundle",
    "degree",
    "dual",
    "enumerate_spectra",
    "euler_characteristic",
    "ext_difference",
    "exp_line",
    "generated_by_two_sections",
    "h0_p1",
    "h1_from_spectrum",
    "h1_p1",
    "h2_from_spectrum",
    "instanton_check",
    "is_instanton_spectrum",
    "monad_chern",
    "mul",
    "natural_table",
    "rational_normal_twist_degree",
    "serre_symmetry_check",
    "smooth_dimension",
    "thooft_threshold",
    "todd_p3",
    "twist",
    "validate_parity",
]
