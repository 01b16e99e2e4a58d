"""Exact reconstruction of the CPT, Dirac and W(E8) three-qubit groups."""

__version__ = "0.1.0"
