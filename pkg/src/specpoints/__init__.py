"""Desk-scale numerics for spectral moment sums at special points.

Subpackages cover elementary arithmetic kernels, complete exponential sums,
two large-sieve inequalities, an oscillatory weight function and its Fourier
analysis, approximate-functional-equation machinery, coefficient models for
degree-2 and degree-3 forms, spectral moment pipelines, and a dual-sum
negligibility test. Brute-force cross-checks live in `specpoints.oracles` and
are imported only by the test surface and the verification CLI.
"""

__version__ = "0.1.0"
