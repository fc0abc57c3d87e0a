"""Primitive arithmetic progressions of squares: enumeration and counting
asymptotics, Pell-orbit support, dihedral Hecke eigenvalues over Z[sqrt 2],
and numerical verification of the single and double shifted-convolution
spectral identities."""

from . import ap_enumerate, arith_core, lfun_special, quad_field, spectral_verify

__version__ = "0.1.0"

__all__ = [
    "arith_core",
    "quad_field",
    "lfun_special",
    "spectral_verify",
    "ap_enumerate",
    "__version__",
]
