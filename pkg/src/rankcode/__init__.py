"""Gabidulin (MRD) codes in the rank metric, with exhaustive oracles, the
decoder-error-probability bound chain and a Monte Carlo channel simulator."""

from rankcode.gfq import GF, FieldElement, field
from rankcode.gabidulin import Decoded, Failure, GabidulinCode, build_code, decode, encode
from rankcode.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Decoded",
    "Failure",
    "FieldElement",
    "GF",
    "GabidulinCode",
    "build_code",
    "decode",
    "encode",
    "field",
]
