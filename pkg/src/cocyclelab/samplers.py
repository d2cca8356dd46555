"""Deterministic point sets for torus quadrature and strip audits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .errors import BudgetExceeded
from .series import torus_grid

# Hard cap on sample-set sizes produced here.
SAMPLE_BUDGET = 2**24


@dataclass(frozen=True)
class SamplerSpec:
    """Quadrature rule: equispaced grid or low-discrepancy sequence.

    ``resolution`` is points per dimension; both kinds produce
    resolution**d points.  Equispaced grids integrate trigonometric
    polynomials of degree < resolution exactly; the Halton sequence is the
    low-discrepancy alternative for d >= 2.
    """

    kind: str = "grid"
    resolution: int = 1024

    def __post_init__(self):
        if self.kind not in ("grid", "qmc"):
            raise ValueError(f"sampler kind must be 'grid' or 'qmc', got {self.kind!r}")
        if self.resolution < 1:
            raise ValueError(f"resolution must be >= 1, got {self.resolution}")

    def count(self, dimension):
        return self.resolution**dimension

    def points(self, dimension):
        """Sample points as an (n, d) float array in [0,1)^d."""
        n = self.count(dimension)
        if n > SAMPLE_BUDGET:
            raise BudgetExceeded(
                f"sampler would produce {n} points, budget is {SAMPLE_BUDGET}"
            )
        if self.kind == "grid":
            return torus_grid(dimension, self.resolution)
        return halton_points(n, dimension)

    def to_dict(self):
        return {"kind": self.kind, "resolution": self.resolution}


def halton_points(n, dimension):
    """First n unscrambled Halton points in [0,1)^d (fully deterministic)."""
    engine = qmc.Halton(d=dimension, scramble=False)
    return engine.random(n)


def strip_points(dimension, rho, samples):
    """Strip sample set: Halton real parts, stratified imaginary parts.

    Imaginary parts cover [-rho, rho] by one point per stratum (max-norm
    coordinate pattern fixed by further Halton dims for d >= 2), so the
    sample max over a smooth function of Im z is a controlled estimate.
    Returns (xs (n,d), ys (n,d)).
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if rho < 0:
        raise ValueError(f"rho must be >= 0, got {rho}")
    if samples > SAMPLE_BUDGET:
        raise BudgetExceeded(f"{samples} strip samples exceed budget {SAMPLE_BUDGET}")
    pts = halton_points(samples, 2 * dimension)
    xs = pts[:, :dimension]
    levels = -rho + 2.0 * rho * (np.arange(samples) + 0.5) / samples
    if dimension == 1:
        ys = levels.reshape(-1, 1)
    else:
        # Scale each point's direction pattern so its max-norm hits the
        # stratified level exactly.
        raw = 2.0 * pts[:, dimension:] - 1.0
        sup = np.max(np.abs(raw), axis=1)
        sup[sup == 0] = 1.0
        ys = raw * (np.abs(levels) / sup)[:, None]
        ys[levels < 0] *= -1.0
    return xs, ys
