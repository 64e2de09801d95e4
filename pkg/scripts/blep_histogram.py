"""Exclude histogram of the sporadic n = 6 function for every admissible u, plus the verdict."""

from apnforge.catalog import blep, blep_roots
from apnforge.exclude import exclude_spectrum_fast
from apnforge.field import FieldSpec
from apnforge.theory.plateaued import plateaued_nonequivalence_test
from apnforge.vbf import algebraic_degree, is_apn


def main():
    fs = FieldSpec.default(6)
    for u in blep_roots(fs):
        F = blep(fs, u)
        hist = exclude_spectrum_fast(F).histogram
        verdict = plateaued_nonequivalence_test(F)
        print(f"u={u:>2} apn={is_apn(F)} degree={algebraic_degree(F)} hist={hist}")
        print(f"      {verdict.label}, witness (k, m_k) = {verdict.witness}, modulus {verdict.modulus}")


if __name__ == "__main__":
    main()
