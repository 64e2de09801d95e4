"""Lower bounds on the Hamming distance from an APN function to any other APN function."""

from __future__ import annotations

from dataclasses import dataclass

from ..exclude import FULL_TABLE_MAX_N, exclude_spectrum_fast
from ..spectral import is_ab, plateau_profile, walsh_spectrum
from ..vbf import VectorialFunc, is_3to1, is_apn
from .kloosterman import inverse_distance_bound, kloosterman_table
from .triplicate import three_to_one_bound

AB = "AB"
PLATEAUED = "plateaued APN"
THREE_TO_ONE = "3-to-1 plateaued"
INVERSE = "inverse"
GENERIC = "generic"


@dataclass(frozen=True)
class BoundRow:
    family: str
    formula_value: int | None
    exact_value: int | None
    source: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    rows: tuple

    @property
    def best(self) -> int:
        vals = [v for r in self.rows for v in (r.formula_value, r.exact_value) if v is not None]
        return max(vals)

    def as_dicts(self) -> list[dict]:
        return [
            {"family": r.family, "formula_value": r.formula_value, "exact_value": r.exact_value, "source": r.source}
            for r in self.rows
        ]


def ab_bound(n: int) -> int:
    return ((1 << (n - 1)) + 2) // 3


def plateaued_bound(n: int) -> int:
    return 1 << (n // 2 - 1)


def is_inverse_function(F: VectorialFunc) -> bool:
    """Keyed on the literal exponent: d = -1 modulo 2^n - 1."""
    return F.exponent is not None and F.exponent % ((1 << F.n) - 1) == (1 << F.n) - 2


def bound_report(F: VectorialFunc, exact: bool = True, histogram_only: bool | None = None, exclude=None) -> BoundReport:
    """Every applicable closed-form bound, plus e_min + 1 when ``exact``.

    A precomputed ExcludeSpectrum may be passed as ``exclude``.
    """
    if not is_apn(F):
        raise ValueError("distance bounds need an APN function")
    n = F.n
    exact_value = None
    if exclude is not None:
        exact_value = exclude.e_min + 1
    elif exact:
        if histogram_only is None:
            histogram_only = n > FULL_TABLE_MAX_N
        exact_value = exclude_spectrum_fast(F, histogram_only=histogram_only).e_min + 1
    rows = []
    spectrum = walsh_spectrum(F) if n <= FULL_TABLE_MAX_N else None
    if spectrum is not None:
        if is_ab(spectrum):
            rows.append(BoundRow(AB, ab_bound(n), exact_value, "uniform multiplicity (2^n - 2) / 6"))
        plateaued = plateau_profile(spectrum).is_plateaued
        if plateaued and n >= 4 and n % 2 == 0:
            rows.append(BoundRow(PLATEAUED, plateaued_bound(n), exact_value, "non-bent components in every hyperplane"))
            if is_3to1(F):
                rows.append(BoundRow(THREE_TO_ONE, three_to_one_bound(n), exact_value, "two-valued spectrum alpha(n), beta(n)"))
    if is_inverse_function(F) and n % 2 == 1 and n >= 3:
        table = kloosterman_table(F.field)
        rows.append(BoundRow(INVERSE, inverse_distance_bound(table), exact_value, "Kloosterman sum range"))
    if not rows:
        rows.append(BoundRow(GENERIC, None, exact_value, "exclude spectrum"))
    report = BoundReport(n, tuple(rows))
    for r in report.rows:
        if r.formula_value is not None and r.exact_value is not None and r.formula_value > r.exact_value:
            raise ArithmeticError(f"{r.family} bound {r.formula_value} exceeds the exact value {r.exact_value}")
    return report
