"""The input-simplex curve t_lambda(r) = H(Y_r) - lambda * H(r) for a fixed channel.

For a channel p(y|x) with reference input p(x), two thresholds in lambda
characterize the dependence measures of this package:

* the Hessian of t_lambda at p(x) becomes positive semidefinite exactly at
  lambda = rho^2 (the squared maximal correlation), and
* t_lambda first touches its lower convex envelope at p(x) exactly at
  lambda = s*, the strong data-processing constant.

This module evaluates the curve, its Hessian on the simplex tangent space,
the lower convex envelope over a 1-D grid (binary inputs), and the envelope
touch threshold ``lambda_dagger`` by bisection.  It also scans binary input
distributions to compare max-over-inputs of rho^2 and of s*, which agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import entr, rel_entr

from .distributions import (
    Channel,
    LogBase,
    PMF,
    entropy,
    push_forward,
)
from .errors import (
    BoundaryPoint,
    LambdaOutOfRange,
    NotBinaryInput,
    NumericalError,
    ValidationError,
)

__all__ = [
    "TCurveSample",
    "Envelope1D",
    "t_lambda",
    "hessian_t_lambda",
    "lower_envelope_1d",
    "touches_envelope",
    "lambda_dagger",
    "scan_inputs",
]

#: default grid resolution (number of intervals) for envelope work
ENVELOPE_GRID_N = 2**12
#: default gap tolerance, in bits, for declaring an envelope touch
TOUCH_TOL = 1e-6
#: tighter touch tolerance used inside the lambda_dagger bisection, where the
#: declared tolerance would otherwise bias the threshold low (the gap shrinks
#: roughly linearly in lambda, so a loose touch test fires early)
DAGGER_TOUCH_TOL = 1e-8
#: KL neighborhood of r = p treated as "no movement" in ratio scans (nats)
RATIO_EXCLUSION = 1e-9


@dataclass(frozen=True)
class TCurveSample:
    """One evaluation of the curve: input distribution and t_lambda value."""

    r: PMF
    value: float


@dataclass(frozen=True)
class Envelope1D:
    """Curve and lower convex envelope sampled on a grid of P(X=0) values.

    Invariants: ``hull <= curve`` pointwise (up to 1e-12), the hull second
    differences are nonnegative (convexity), and hull = curve at both
    endpoints.
    """

    grid: np.ndarray
    curve: np.ndarray
    hull: np.ndarray


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise LambdaOutOfRange(f"lambda must be in [0, 1], got {lam!r}")
    return lam


def t_lambda(c: Channel, r: PMF, lam: float, base: LogBase = LogBase.BITS) -> float:
    """H(Y_r) - lambda * H(r), where Y_r is the channel output under input r."""
    lam = _check_lambda(lam)
    return entropy(push_forward(c, r), base) - lam * entropy(r, base)


def hessian_t_lambda(c: Channel, r: PMF, lam: float) -> np.ndarray:
    """Hessian of t_lambda at r, restricted to the simplex tangent space.

    Returned as a (|X|-1) x (|X|-1) symmetric matrix in the tangent basis
    e_i - e_n (i = 1..|X|-1), in natural-log units; the log base scales the
    matrix by a positive constant, so definiteness is base-independent.

    In full coordinates the second partials are
    d2/dr_x dr_x' = -sum_y p(y|x) p(y|x') / r_y + lambda * [x = x'] / r_x,
    and the quadratic form along a multiplicative direction d = r * f with
    E_r[f] = 0 evaluates to lambda * E[f^2] - E[E[f|Y]^2].  Interior points
    only: a zero coordinate of r raises :class:`BoundaryPoint`.
    """
    if r.labels != c.x_labels:
        raise ValidationError("r is not on the channel input alphabet")
    rx = r.probs
    if rx.min() <= 0.0:
        raise BoundaryPoint("Hessian needs a strictly positive input point")
    W = c.pyx
    ry = rx @ W
    with np.errstate(divide="ignore", invalid="ignore"):
        inv_ry = np.where(ry > 0.0, 1.0 / np.maximum(ry, 1e-300), 0.0)
    full = -(W * inv_ry[None, :]) @ W.T + float(lam) * np.diag(1.0 / rx)
    n = rx.shape[0]
    basis = np.vstack([np.eye(n - 1), -np.ones(n - 1)])  # columns e_i - e_n
    reduced = basis.T @ full @ basis
    return 0.5 * (reduced + reduced.T)


def _curve_values(W: np.ndarray, p0: np.ndarray, lam: float, scale: float) -> np.ndarray:
    """Vectorized t_lambda over binary inputs (p0, 1-p0), in the chosen base."""
    R = np.column_stack([p0, 1.0 - p0])
    RY = R @ W
    return (entr(RY).sum(axis=1) - lam * entr(R).sum(axis=1)) * scale


def _lower_hull(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Lower convex envelope of the sampled points, evaluated back on xs.

    Monotone-chain scan keeping counterclockwise turns: the surviving
    vertices have nondecreasing chord slopes, i.e. they trace the largest
    convex function lying on or below every sample.
    """
    keep: list[int] = []
    for i in range(xs.shape[0]):
        while len(keep) >= 2:
            a, b = keep[-2], keep[-1]
            cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (
                xs[i] - xs[a]
            )
            if cross <= 0.0:
                keep.pop()
            else:
                break
        keep.append(i)
    return np.interp(xs, xs[keep], ys[keep])


def lower_envelope_1d(c: Channel, lam: float, grid_n: int = ENVELOPE_GRID_N) -> Envelope1D:
    """Sample t_lambda on a uniform grid of P(X=0) and its lower convex envelope.

    ``grid_n`` counts intervals: the grid has grid_n + 1 points including
    both endpoints, so even values keep P(X=0) = 1/2 exactly on the grid.
    Binary input alphabets only.
    """
    lam = _check_lambda(lam)
    if len(c.x_labels) != 2:
        raise NotBinaryInput(
            f"1-D envelope needs |X| = 2, got |X| = {len(c.x_labels)}"
        )
    grid_n = int(grid_n)
    if grid_n < 64:
        raise ValidationError(f"grid_n must be at least 64, got {grid_n}")
    p0 = np.linspace(0.0, 1.0, grid_n + 1)
    curve = _curve_values(c.pyx, p0, lam, LogBase.BITS.from_nats)
    hull = _lower_hull(p0, curve)
    for a in (p0, curve, hull):
        a.setflags(write=False)
    return Envelope1D(p0, curve, hull)


def touches_envelope(
    c: Channel,
    lam: float,
    tol: float = TOUCH_TOL,
    grid_n: int = ENVELOPE_GRID_N,
) -> bool:
    """Whether curve and envelope meet at the channel's reference input.

    True iff curve - hull <= tol (bits) at the grid point nearest
    P(X=0) = c.input.probs[0].
    """
    env = lower_envelope_1d(c, lam, grid_n)
    i = int(np.argmin(np.abs(env.grid - c.input.probs[0])))
    return bool(env.curve[i] - env.hull[i] <= tol)


def lambda_dagger(
    c: Channel,
    tol: float = 1e-5,
    grid_n: int = ENVELOPE_GRID_N,
    touch_tol: float = DAGGER_TOUCH_TOL,
) -> float:
    """The smallest lambda at which t_lambda touches its envelope at c.input.

    Bisection on lambda in [0, 1], valid because touching is monotone in
    lambda: adding a convex function (lambda' - lambda) * (-H) to t_lambda
    preserves an existing touch point.  The returned threshold equals the
    strong data-processing constant s*(X;Y) of the channel at its reference
    input.  At lambda = 1 the curve is convex, so the bracket is always
    valid; the answer is reported to absolute tolerance ``tol``.
    """
    if touches_envelope(c, 0.0, touch_tol, grid_n):
        return 0.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if touches_envelope(c, mid, touch_tol, grid_n):
            hi = mid
        else:
            lo = mid
    return hi


def _binary_rho2_of(pxy: np.ndarray, px: np.ndarray, py: np.ndarray) -> float:
    outer = np.outer(px, py)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(outer > 0.0, pxy**2 / np.maximum(outer, 1e-300), 0.0)
    return float(min(max(terms.sum() - 1.0, 0.0), 1.0))


def _binary_sstar_1d(W: np.ndarray, px: np.ndarray, py: np.ndarray, rho2: float) -> float:
    """Best KL ratio over binary inputs r != px, refined around the grid max.

    The local limit of the ratio as r -> px equals rho^2 (the only approach
    direction in 1-D), so rho2 enters the candidate set as an analytically
    known limit value; the grid handles everything away from px.
    """

    def vals(r0: np.ndarray) -> np.ndarray:
        R = np.column_stack([r0, 1.0 - r0])
        den = rel_entr(R, px).sum(axis=1)
        num = rel_entr(R @ W, py).sum(axis=1)
        # numerators below the float noise floor are exact zeros; dividing
        # the noise by a small admitted denominator would fabricate ratios
        ratios = np.where(num < 1e-13, 0.0, num / np.maximum(den, 1e-300))
        return np.where(den > RATIO_EXCLUSION, ratios, -np.inf)

    xs = np.linspace(0.0, 1.0, 513)
    v = vals(xs)
    i = int(np.argmax(v))
    best_x, best = float(xs[i]), float(v[i])
    h = 1.0 / 512.0
    for _ in range(3):
        xs = np.clip(np.linspace(best_x - h, best_x + h, 65), 0.0, 1.0)
        v = vals(xs)
        i = int(np.argmax(v))
        if v[i] > best:
            best, best_x = float(v[i]), float(xs[i])
        h /= 32.0
    return float(min(max(best, rho2), 1.0))


def scan_inputs(rows, grid_n: int = 128) -> tuple[float, float]:
    """Max over binary channel inputs of rho^2 and of s*, as a pair.

    ``rows`` is the bare 2 x |Y| row-stochastic matrix; the scan sweeps
    P(X=0) over the interior grid [1/grid_n, 1 - 1/grid_n] and computes both
    dependence measures at each input.  The two maxima agree (a result this
    function also enforces at tolerance 1e-3, raising
    :class:`NumericalError` otherwise, since disagreement can only come from
    optimizer failure).
    """
    W = np.asarray(rows, dtype=float)
    if W.ndim != 2 or W.shape[0] != 2:
        raise NotBinaryInput(f"input scan needs 2 channel rows, got shape {W.shape}")
    if W.min() < -1e-12:
        raise ValidationError("channel rows must be nonnegative")
    W = np.maximum(W, 0.0)
    sums = W.sum(axis=1)
    if np.abs(sums - 1.0).max() > 1e-9:
        raise ValidationError("channel rows must each sum to 1")
    W = W / sums[:, None]
    grid_n = int(grid_n)
    if grid_n < 4:
        raise ValidationError(f"grid_n must be at least 4, got {grid_n}")

    max_rho2 = 0.0
    max_sstar = 0.0
    for p0 in np.linspace(1.0 / grid_n, 1.0 - 1.0 / grid_n, grid_n - 1):
        px = np.array([p0, 1.0 - p0])
        pxy = px[:, None] * W
        py = pxy.sum(axis=0)
        rho2 = _binary_rho2_of(pxy, px, py)
        sstar = _binary_sstar_1d(W, px, py, rho2)
        max_rho2 = max(max_rho2, rho2)
        max_sstar = max(max_sstar, sstar)
    if abs(max_rho2 - max_sstar) > 1e-3:
        raise NumericalError(
            "max-over-inputs of rho^2 and s* should agree within 1e-3; "
            f"got {max_rho2!r} vs {max_sstar!r}"
        )
    return max_rho2, max_sstar
