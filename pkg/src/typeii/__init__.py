"""Exact verification toolkit for extremal Type II binary codes.

Submodules:
  exact          rationals, polynomials in s, rational functions, determinants
  gf2            words, codes, duals, shells, cosets over GF(2)
  harmonic       discrete zonal harmonic polynomials (numeric and symbolic)
  designs        t-design / t-half-design certification on Hamming spheres
  gleason        extremality bounds and extremal weight enumerators
  catalog        constructions of the concrete codes used for verification
  configuration  intersection-count systems, their determinants, and verdicts
  cli            command-line front end
"""

__version__ = "0.1.0"
