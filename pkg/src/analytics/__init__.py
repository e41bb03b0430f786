"""Hypercomplex function theory: Appell polynomials, Fueter-Sce maps, Hilbert modules."""
