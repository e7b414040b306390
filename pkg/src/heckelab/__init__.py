"""Exact Hecke-algebra and L-function computations for Siegel modular forms."""
