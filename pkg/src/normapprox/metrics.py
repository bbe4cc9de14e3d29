"""Evaluation grids, MXAE/MAE reports, signed error curves and the quantile
comparison table.

Reductions run sequentially in grid order (absolute-error sums through
``math.fsum``), so identical inputs always reproduce bit-identical reports.
Grid evaluation is embarrassingly parallel in principle; this implementation
keeps it single-threaded for exact reproducibility.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import inverse
from .approximations import Phi9Coefficients, eval_cdf_approx
from .errors import DomainError
from .reference import ref_cdf


@dataclass(frozen=True)
class GridSpec:
    """Inclusive arithmetic progression of abscissae.

    ``step`` must evenly divide ``stop - start`` (to rounding), so the last
    generated point equals ``stop`` up to one rounding unit.
    """

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.start, self.stop, self.step)):
            raise DomainError("grid bounds and step must be finite")
        if self.step <= 0.0:
            raise DomainError("grid step must be positive")
        if self.stop <= self.start:
            raise DomainError("grid stop must exceed start")
        ratio = (self.stop - self.start) / self.step
        if abs(ratio - round(ratio)) > 1e-6 * max(1.0, abs(ratio)):
            raise DomainError("grid step must evenly divide stop - start")

    @property
    def count(self) -> int:
        return round((self.stop - self.start) / self.step) + 1

    def points(self) -> list[float]:
        # start + i*step rather than cumulative addition, to avoid drift
        return [self.start + i * self.step for i in range(self.count)]


GRID_A = GridSpec(0.0, 4.0, 0.01)      # 401-point default
GRID_B = GridSpec(0.0, 5.0, 0.001)     # 5001-point default (accuracy tables)

DEFAULT_INVERSE_GRID = GridSpec(0.0, 4.8, 0.4)


@dataclass(frozen=True)
class ErrorReport:
    """MXAE with its argmax location plus MAE for one approximation on one
    grid.  Ties at the maximum resolve to the smallest abscissa."""

    approx: int
    grid: GridSpec
    mxae: float
    mxae_location: float
    mae: float


@dataclass(frozen=True)
class InverseRow:
    """One row of the quantile comparison: z, p = Phi(z), the three
    approximations and their signed differences."""

    z: float
    p: float
    zhat1: float
    zhat2: float
    zhat3: float
    delta1: float
    delta2: float
    delta3: float


def build_grid(spec: GridSpec) -> list[float]:
    """The grid points of ``spec`` (validation happens in the GridSpec)."""
    return spec.points()


@lru_cache(maxsize=32)
def _ref_values(spec: GridSpec) -> tuple[float, ...]:
    return tuple(ref_cdf(z) for z in spec.points())


def _check_grid_domain(approx_id: int, spec: GridSpec) -> None:
    if spec.start < 0.0:
        raise DomainError("approximation grids require z >= 0")
    if approx_id == 2 and spec.stop >= 9.0:
        raise DomainError("Lin's form is bounded to 0 <= z < 9")


def compute_error_report(approx_id: int, spec: GridSpec,
                         coeffs: Phi9Coefficients | None = None) -> ErrorReport:
    """Grid MXAE (with argmax, first-of-ties) and MAE against the oracle."""
    _check_grid_domain(approx_id, spec)
    pts = build_grid(spec)
    refs = _ref_values(spec)
    mxae = -1.0
    mxae_location = pts[0]
    errs = []
    for z, r in zip(pts, refs):
        e = abs(eval_cdf_approx(approx_id, z, coeffs) - r)
        errs.append(e)
        if e > mxae:
            mxae = e
            mxae_location = z
    return ErrorReport(approx=approx_id, grid=spec, mxae=mxae,
                       mxae_location=mxae_location, mae=math.fsum(errs) / len(errs))


def error_curve(approx_id: int, spec: GridSpec,
                coeffs: Phi9Coefficients | None = None) -> list[tuple[float, float]]:
    """Signed differences (approximation - reference) in grid order."""
    _check_grid_domain(approx_id, spec)
    refs = _ref_values(spec)
    return [(z, eval_cdf_approx(approx_id, z, coeffs) - r)
            for z, r in zip(build_grid(spec), refs)]


def inverse_table(z_values=None) -> list[InverseRow]:
    """Quantile comparison rows at the given true abscissae (all >= 0).

    Defaults to z = 0 .. 4.8 step 0.4.  Probabilities are computed at full
    precision from the oracle; restricted to (p, delta3) over a dense range
    this doubles as the delta3-versus-p figure dataset.
    """
    if z_values is None:
        z_values = build_grid(DEFAULT_INVERSE_GRID)
    rows = []
    for z in z_values:
        z = float(z)
        if not math.isfinite(z) or z < 0.0:
            raise DomainError("inverse_table requires z >= 0")
        p = ref_cdf(z)
        zh1 = inverse.z1_schmeiser(p)
        zh2 = inverse.z2_shore(p)
        zh3 = inverse.z3_proposed(p)
        rows.append(InverseRow(z=z, p=p, zhat1=zh1, zhat2=zh2, zhat3=zh3,
                               delta1=zh1 - z, delta2=zh2 - z, delta3=zh3 - z))
    return rows
