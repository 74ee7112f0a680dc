"""Exact computations with affine Hecke algebras, Macdonald polynomials and qKZ equations."""
