"""Catalog scans for questions that are open in general; they report, never assert."""

from __future__ import annotations

from ..catalog import build, catalog_specs
from ..exclude import exclude_spectrum_fast
from ..field import FieldSpec
from ..spectral import plateau_profile, walsh_spectrum
from ..vbf import from_monomial, is_apn, is_quadratic
from .ortho import ortho_derivative


def odd_mults_scan(ns) -> list[dict]:
    """Even exclude multiplicities of plateaued APN catalog functions (none known)."""
    out = []
    for n in ns:
        for spec in catalog_specs(n):
            F = build(spec)
            if not plateau_profile(walsh_spectrum(F)).is_plateaued:
                continue
            hist = exclude_spectrum_fast(F).histogram
            out.append({"function": spec.label(), "n": n, "even_mults": [k for k in hist if k % 2 == 0]})
    return out


def ortho_nl_scan(ns) -> list[dict]:
    """Nonlinearity of the ortho-derivative of each quadratic APN catalog function."""
    out = []
    for n in ns:
        for spec in catalog_specs(n):
            F = build(spec)
            if not is_quadratic(F):
                continue
            od = ortho_derivative(F)
            out.append({"function": spec.label(), "n": n, "nl_ortho": od.nonlinearity()})
    return out


def power_axis_scan(ns) -> list[dict]:
    """mult(0, 1), mult(1, 0) for each APN power function against mult(0, 1) of x^3."""
    out = []
    for n in ns:
        cube = from_monomial(FieldSpec.default(n), 3)
        ref = int(exclude_spectrum_fast(cube).mult[0, 1])
        for spec in catalog_specs(n):
            F = build(spec)
            if F.exponent is None or not is_apn(F):
                continue
            mult = exclude_spectrum_fast(F).mult
            m01, m10 = int(mult[0, 1]), int(mult[1, 0])
            out.append({
                "function": spec.label(), "n": n, "mult_0_1": m01, "mult_1_0": m10,
                "cube_mult_0_1": ref, "equal": m01 == m10 == ref,
            })
    return out


EXPERIMENTS = {
    "odd-mults": odd_mults_scan,
    "ortho-nl": ortho_nl_scan,
    "power-axis": power_axis_scan,
}
