"""Two large-sieve inequalities: Farey-fraction form and oscillatory form.

The classical form bounds a quadratic form in additive characters e(xm/b) by
(B^2 + M) times the sequence norm. The oscillatory extension integrates an
extra phase e(t f(m)) over |t| <= T and is bounded by (B^2 T + X) with
X = sup 1/|f'|; its implied constant is the fitted C_SIEVE frozen in
`specpoints.frozen`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .arith import units_with_inverses


@dataclass(frozen=True)
class Sequence:
    """Finite complex vector a_m on m in [start, start + M)."""

    start: int
    values: np.ndarray
    norm2: float = field(init=False)

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("start must be positive")
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.ndim != 1 or len(vals) < 1:
            raise ValueError("values must be a nonempty vector")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "norm2", float(np.sum(np.abs(vals) ** 2)))

    @property
    def length(self) -> int:
        return len(self.values)

    @property
    def indices(self) -> np.ndarray:
        return self.start + np.arange(self.length)


@dataclass(frozen=True)
class PhaseFunction:
    """Real phase with nonvanishing derivative on [lo, hi].

    Nonvanishing is checked by sign constancy on a dense sample (10 points
    per unit index plus endpoints); a detected sign change is a hard error,
    since the oscillatory bound's hypothesis is structural.
    """

    f: Callable[[np.ndarray], np.ndarray]
    fprime: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float

    def __post_init__(self):
        if not self.hi > self.lo:
            raise ValueError("empty phase domain")
        d = self.fprime(self._samples())
        if np.any(d == 0) or (np.max(np.sign(d)) != np.min(np.sign(d))):
            raise ValueError("phase derivative changes sign on the domain")

    def _samples(self) -> np.ndarray:
        n = max(int(10 * (self.hi - self.lo)), 10) + 2
        return np.linspace(self.lo, self.hi, n)

    @property
    def x_parameter(self) -> float:
        """X = sup 1/|f'| over the domain, by dense sampling."""
        return float(1.0 / np.min(np.abs(self.fprime(self._samples()))))


def _character_matrix(seq: Sequence, B: int) -> np.ndarray:
    """Rows a_m e(xm/b) for every primitive fraction x/b with b <= B."""
    m = seq.indices
    rows = []
    for b in range(1, B + 1):
        units, _ = units_with_inverses(b)
        phase = np.exp(2j * np.pi * np.outer(units % b, m % b) / b)
        rows.append(phase * seq.values[None, :])
    return np.vstack(rows)


def farey_lhs(seq: Sequence, B: int) -> float:
    """Sum over b <= B and primitive x mod b of |sum_m a_m e(xm/b)|^2."""
    if B < 1:
        raise ValueError("B must be positive")
    P = _character_matrix(seq, B)
    return float(np.sum(np.abs(P.sum(axis=1)) ** 2))


def classical_ratio(seq: Sequence, B: int) -> float:
    """farey_lhs normalized by (B^2 + M) ||a||^2; contract: <= 1."""
    if seq.norm2 == 0:
        raise ValueError("zero sequence has no ratio")
    return farey_lhs(seq, B) / ((B**2 + seq.length) * seq.norm2)


def _panels(T: float, step: float) -> tuple[np.ndarray, np.ndarray]:
    """Composite 16-node Gauss-Legendre nodes/weights on [-T, T].

    Panel width is 8 quadrature steps, so a step resolving the fastest
    oscillation gives ~2 nodes per shortest period within each panel.
    """
    width = 8.0 * step
    n_panels = max(1, int(math.ceil(2 * T / width)))
    x16, w16 = np.polynomial.legendre.leggauss(16)
    edges = np.linspace(-T, T, n_panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    ts = (mid[:, None] + half[:, None] * x16[None, :]).ravel()
    ws = (half[:, None] * w16[None, :]).ravel()
    return ts, ws


def oscillatory_lhs(seq: Sequence, B: int, T: float, phase: PhaseFunction,
                    quadrature_step: float) -> float:
    """Integral over |t| <= T of the Farey quadratic form with extra phase
    e(t f(m)) on each term, by composite panel quadrature in t."""
    if T <= 0:
        raise ValueError("T must be positive")
    fm = phase.f(seq.indices.astype(float))
    fmax = float(np.max(np.abs(fm)))
    if quadrature_step > 0.1 / max(fmax, 1e-300):
        raise ValueError("quadrature step does not resolve the oscillation")
    P = _character_matrix(seq, B)
    ts, ws = _panels(T, quadrature_step)
    E = np.exp(2j * np.pi * np.outer(fm, ts))
    Z = P @ E
    return float(np.sum(ws * np.sum(np.abs(Z) ** 2, axis=0)))


def oscillatory_ratio(seq: Sequence, B: int, T: float,
                      phase: PhaseFunction) -> float:
    """oscillatory_lhs over (B^2 T + X) ||a||^2, step chosen automatically."""
    if seq.norm2 == 0:
        raise ValueError("zero sequence has no ratio")
    fm = phase.f(seq.indices.astype(float))
    step = 0.1 / max(float(np.max(np.abs(fm))), 1e-9)
    step = min(step, T / 4)
    lhs = oscillatory_lhs(seq, B, T, phase, step)
    X = phase.x_parameter
    return lhs / ((B**2 * T + X) * seq.norm2)


def linear_phase(lo: float, hi: float) -> PhaseFunction:
    return PhaseFunction(lambda y: y, lambda y: np.ones_like(y), lo, hi)


def log_phase(lo: float, hi: float) -> PhaseFunction:
    """f(y) = log(y)/2pi, the phase of m^{it}."""
    return PhaseFunction(lambda y: np.log(y) / (2 * np.pi),
                         lambda y: 1.0 / (2 * np.pi * y), lo, hi)


def cuberoot_phase(lo: float, hi: float) -> PhaseFunction:
    return PhaseFunction(lambda y: np.cbrt(y),
                         lambda y: 1.0 / (3.0 * np.cbrt(y) ** 2), lo, hi)
