"""Exclude multiplicities of graphs of APN functions, and the invariants built on them."""

import os

# numba otherwise probes an outdated TBB on import and warns
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")

from .field import FieldSpec  # noqa: E402
from .vbf import VectorialFunc, is_apn  # noqa: E402

__version__ = "0.1.0"
__all__ = ["FieldSpec", "VectorialFunc", "is_apn"]
