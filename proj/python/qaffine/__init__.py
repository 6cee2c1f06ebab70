"""Root vectors, PBW bases and identity checks in the positive part of
quantum affine sl(n+1)."""

from ._qaffine import (
    Algebra,
    Caps,
    CartanDatum,
    CheckRecord,
    CheckStatus,
    RationalFunction,
    SuiteReport,
    UElem,
    Weight,
    commutator,
    divided_power,
    inner,
    parse_json_report,
    qcomm,
    run_suite,
    suite_names,
    translation_word,
)

q = RationalFunction.q_pow

__all__ = [
    "Algebra",
    "Caps",
    "CartanDatum",
    "CheckRecord",
    "CheckStatus",
    "RationalFunction",
    "SuiteReport",
    "UElem",
    "Weight",
    "commutator",
    "divided_power",
    "inner",
    "parse_json_report",
    "q",
    "qcomm",
    "run_suite",
    "suite_names",
    "translation_word",
]
