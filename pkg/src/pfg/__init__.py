"""Exact spectra of the k-point fixing Cayley graphs F(n, k) on S_n."""

from .errors import DomainError, InternalConsistencyError, TableInvariantError
from .spectra import SpectrumEntry, SpectrumTable, d_n, degree, eta_direct, eta_k, spectrum

__all__ = [
    "DomainError",
    "InternalConsistencyError",
    "TableInvariantError",
    "SpectrumEntry",
    "SpectrumTable",
    "d_n",
    "degree",
    "eta_direct",
    "eta_k",
    "spectrum",
]
