"""Exact level-n Jones, HOMFLY-PT and KR invariants of 2-strand braid closures."""

from ._moykr import (
    ParseError,
    StuckError,
    UsageError,
    adm_prediction,
    evaluate_closure,
    homfly,
    homfly_specializes,
    jones,
    jones_braid,
    jones_terms,
    kr_complex,
    kr_homology,
    kr_poincare,
    kr_poincare_closed_form,
    kr_poincare_terms,
)

__all__ = [
    "ParseError",
    "StuckError",
    "UsageError",
    "adm_prediction",
    "evaluate_closure",
    "homfly",
    "homfly_specializes",
    "jones",
    "jones_braid",
    "jones_terms",
    "kr_complex",
    "kr_homology",
    "kr_poincare",
    "kr_poincare_closed_form",
    "kr_poincare_terms",
]
