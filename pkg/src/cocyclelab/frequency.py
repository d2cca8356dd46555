"""Torus distance, resonance scans, and the scale couplings K0 <-> N.

A frequency omega in [0,1)^d satisfies a (kappa, b) resonance condition up
to scale K0 when ||k.omega|| > kappa |k|^(-b) for all 0 < |k| <= K0, with
||.|| the distance to the nearest integer and |k| the max-norm.  Scans are
exhaustive over the lattice box; at desk scale this beats continued
fractions for transparency and covers d up to 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded

# Exhaustive-scan budget: number of enumerated lattice points.
SCAN_BUDGET = 10**9

# Guard against 10.000000000000002-style pow artifacts before ceil.
_CEIL_SLACK = 1e-12


@dataclass(frozen=True)
class Frequency:
    """Rotation vector on T^d, components reduced to [0,1)."""

    omega: tuple

    def __post_init__(self):
        if isinstance(self.omega, (int, float)):
            om = (float(self.omega),)
        else:
            om = tuple(float(v) for v in self.omega)
        if len(om) == 0:
            raise ValueError("frequency must have at least one component")
        object.__setattr__(self, "omega", tuple(v % 1.0 for v in om))

    @property
    def dimension(self):
        return len(self.omega)

    def as_array(self):
        return np.asarray(self.omega, dtype=np.float64)


GOLDEN_MEAN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class DiophantineReport:
    """Outcome of a resonance scan up to lattice scale K0.

    ``worst_value`` = min over 0 < |k| <= K0 of ||k.omega|| attained at
    ``worst_k``; ``kappa`` is the empirically tightest constant for the
    given b, min_k ||k.omega|| |k|^b.  ``satisfied`` refers to the
    requested condition, and ``delta`` = requested_kappa * K0^(-b) is the
    flat resonance floor the restricted condition implies.
    """

    k0: int
    worst_k: tuple
    worst_value: float
    kappa: float
    b: float
    satisfied: bool
    requested_kappa: float
    delta: float

    def to_dict(self):
        return {
            "k0": self.k0,
            "worst_k": list(self.worst_k),
            "worst_value": self.worst_value,
            "kappa": self.kappa,
            "b": self.b,
            "satisfied": self.satisfied,
            "requested_kappa": self.requested_kappa,
            "delta": self.delta,
        }


def torus_norm(t):
    """Distance from t to the nearest integer, in [0, 1/2]."""
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"torus_norm requires a finite argument, got {t}")
    return abs(t - round(t))


def torus_norm_array(values):
    values = np.asarray(values, dtype=np.float64)
    return np.abs(values - np.round(values))


def _half_lattice(dimension, k0):
    """Representatives of {0 < |k| <= K0} modulo k ~ -k.

    The first nonzero component is positive; ||k.omega|| = ||-k.omega||,
    so scanning representatives and doubling covers the whole box.
    """
    if dimension == 1:
        yield np.arange(1, k0 + 1, dtype=np.int64).reshape(-1, 1)
        return
    rng = np.arange(-k0, k0 + 1, dtype=np.int64)
    if dimension == 2:
        # k1 > 0 slabs, plus the k1 = 0, k2 > 0 line.
        for k1 in range(1, k0 + 1):
            slab = np.empty((rng.size, 2), dtype=np.int64)
            slab[:, 0] = k1
            slab[:, 1] = rng
            yield slab
        line = np.zeros((k0, 2), dtype=np.int64)
        line[:, 1] = np.arange(1, k0 + 1)
        yield line
        return
    # d = 3: k1 > 0 slabs, then the k1 = 0 plane handled as a 2-d problem.
    for k1 in range(1, k0 + 1):
        grid = np.stack(np.meshgrid(rng, rng, indexing="ij"), axis=-1).reshape(-1, 2)
        slab = np.empty((grid.shape[0], 3), dtype=np.int64)
        slab[:, 0] = k1
        slab[:, 1:] = grid
        yield slab
    for plane in _half_lattice(2, k0):
        slab = np.zeros((plane.shape[0], 3), dtype=np.int64)
        slab[:, 1:] = plane
        yield slab


def diophantine_scan(omega, k0, kappa, b):
    """Exhaustive resonance scan over 0 < |k| <= K0.

    Returns a DiophantineReport with the worst resonance, the empirically
    tightest kappa for the requested b, and the pass flag for the
    requested (kappa, b).
    """
    omega = omega if isinstance(omega, Frequency) else Frequency(omega)
    k0 = int(k0)
    if k0 < 1:
        raise ValueError(f"K0 must be >= 1, got {k0}")
    if kappa <= 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b}")
    d = omega.dimension
    total = (2 * k0 + 1) ** d - 1
    if total > SCAN_BUDGET:
        raise BudgetExceeded(
            f"scan over {total} lattice points exceeds budget {SCAN_BUDGET}"
        )

    om = omega.as_array()
    worst_value = math.inf
    worst_k = None
    tightest = math.inf
    satisfied = True
    for slab in _half_lattice(d, k0):
        vals = torus_norm_array(slab @ om)
        norms = np.max(np.abs(slab), axis=1).astype(np.float64)
        keep = norms <= k0
        if not np.all(keep):
            slab, vals, norms = slab[keep], vals[keep], norms[keep]
        if vals.size == 0:
            continue
        i = int(np.argmin(vals))
        if vals[i] < worst_value:
            worst_value = float(vals[i])
            worst_k = tuple(int(c) for c in slab[i])
        products = vals * norms**b
        tightest = min(tightest, float(np.min(products)))
        if satisfied and np.any(vals <= kappa * norms ** (-b)):
            satisfied = False

    return DiophantineReport(
        k0=k0,
        worst_k=worst_k,
        worst_value=worst_value,
        kappa=tightest,
        b=float(b),
        satisfied=bool(satisfied),
        requested_kappa=float(kappa),
        delta=float(kappa) * k0 ** (-float(b)),
    )


def _ceil_guarded(x):
    return int(math.ceil(x - abs(x) * _CEIL_SLACK))


def k0_for_scale(n, b):
    """Lattice scale K0 = ceil(N^(1/(1+b))) coupled to the iterate count."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b}")
    return _ceil_guarded(float(n) ** (1.0 / (1.0 + b)))


def n_for_k0(k0, b):
    """Inverse coupling N = ceil(K0^(1+b))."""
    if k0 < 1:
        raise ValueError(f"K0 must be >= 1, got {k0}")
    if b < 0:
        raise ValueError(f"b must be >= 0, got {b}")
    return _ceil_guarded(float(k0) ** (1.0 + b))
