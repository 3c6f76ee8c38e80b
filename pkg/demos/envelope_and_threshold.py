"""
The entropy curve, its convex envelope, and the touch threshold
===============================================================

For a binary-input channel W, consider the curve t_lambda(r) = H(Y_r) -
lambda * H(r) over inputs r = (p0, 1 - p0).  For small lambda the curve sits
strictly above its lower convex envelope at the channel's own input; as
lambda grows there is a first value — lambda-dagger — where curve and
envelope touch there.  That threshold recovers the strong data-processing
constant s*, while the *local* convexity threshold at the input (where the
Hessian turns positive semidefinite) recovers rho^2.  The gap between the
two numbers is exactly the content of the counterexample walkthrough.
"""

import numpy as np

from infodep import (
    PMF,
    binary_rho_squared,
    builtin,
    channel_of,
    hessian_t_lambda,
    lambda_dagger,
    lower_envelope_1d,
    sstar,
    t_lambda,
    touches_envelope,
)

j = builtin("fig2")
c = channel_of(j)
uniform = PMF((0, 1), np.array([0.5, 0.5]))

# the curve at a few lambdas, sampled coarsely
print("t_lambda(r) on a coarse grid of p0 = P(X=0):")
grid = np.linspace(0.0, 1.0, 6)
for lam in (0.0, 0.6, 1.0):
    vals = [t_lambda(c, PMF((0, 1), np.array([p, 1 - p])), lam) for p in grid]
    print(f"  lambda = {lam:<4}" + "  ".join(f"{v:.4f}" for v in vals))

# local convexity at the channel input flips exactly at lambda = rho^2
rho2 = binary_rho_squared(j)
print(f"\nHessian of t_lambda at the uniform input (1x1 matrix, nats):")
for lam in (0.59, rho2, 0.61):
    h = hessian_t_lambda(c, uniform, lam)[0, 0]
    verdict = "PSD" if h >= -1e-12 else "not PSD"
    print(f"  lambda = {lam:<5} hessian = {h:+.4f}  ({verdict})")
print(f"local threshold = rho^2 = {rho2}")

# the global touch happens later: the envelope at the input stays strictly
# below the curve until lambda-dagger ~ s*, not rho^2
print("\ncurve-vs-envelope gap at the input, by lambda:")
for lam in (0.6, 0.62, 0.631, 0.632, 0.64):
    env = lower_envelope_1d(c, lam, grid_n=2**12)
    i = int(np.argmin(np.abs(env.grid - 0.5)))
    gap = env.curve[i] - env.hull[i]
    touch = touches_envelope(c, lam)
    print(f"  lambda = {lam:<6} gap = {gap:.3e}  touches: {touch}")
# note the touch persists for every larger lambda: raising lambda adds a
# multiple of the convex function -H(r), which can only pull the curve down
# onto its envelope harder

ld = lambda_dagger(c)
s = sstar(j).value
print(f"\nlambda_dagger       = {ld:.9f}")
print(f"s*(X;Y) directly    = {s:.9f}")
print(f"difference          = {ld - s:+.2e}")
print(f"\nthe two thresholds bracket the story: rho^2 = {rho2:.6f} (local) "
      f"< s* = {s:.6f} (global)")
