"""
A dependence ratio that beats squared maximal correlation
=========================================================

A natural conjecture says that for any summary U of X (so U - X - Y is a
Markov chain), the information ratio I(U;Y)/I(U;X) should be bounded by the
squared maximal correlation rho^2 of the pair (X, Y).  This walkthrough
builds the asymmetric-erasure joint bundled as ``fig2``, for which rho^2
equals 0.6 exactly, and then exhibits binary summaries whose ratios climb
past 0.6 all the way toward the true ceiling: the strong data-processing
constant s* = 0.631517...
"""

import numpy as np

from infodep import (
    PMF,
    binary_rho_squared,
    binary_u_from_conditionals,
    builtin,
    kl_ratio,
    marginals,
    maximal_correlation,
    mutual_information,
    perturbation_sequence,
    ratio_for_u,
    sstar,
)

# the joint: X uniform on {0,1}; Y erases or keeps X with asymmetric rates
j = builtin("fig2")
px, py = marginals(j)
print("joint p(x,y):")
print(np.array_str(j.pxy, precision=6))
print(f"p(x) = {px.probs},  I(X;Y) = {mutual_information(j):.6f} bits")

# two independent routes to rho^2: the closed binary form and the SVD route
rho2 = binary_rho_squared(j)
witness = maximal_correlation(j)
print(f"\nrho^2 closed form   = {rho2:.12f}")
print(f"rho^2 via spectrum  = {witness.rho ** 2:.12f}")

# a family of binary summaries U, parameterized by P(U=1|X=0), P(U=1|X=1);
# the weight of U = 1 shrinks row by row, and the ratio keeps climbing
pairs = (
    (0.1, 0.4),
    (0.01, 0.23),
    (0.001, 0.102),
    (0.0001, 0.04),
    (0.00001, 0.01474),
)
print(f"\n{'P(U=1|X=0)':>12} {'P(U=1|X=1)':>12} {'I(U;Y)':>12} "
      f"{'I(U;X)':>12} {'ratio':>10}")
for a, b in pairs:
    u = binary_u_from_conditionals(j, a, b)
    st = ratio_for_u(j, u)
    flag = "  > rho^2" if st.ratio > rho2 else ""
    print(f"{a:>12g} {b:>12g} {st.i_uy:>12.8f} {st.i_ux:>12.8f} "
          f"{st.ratio:>10.6f}{flag}")

# the same climb, seen as two-point perturbations toward the vertex r* = (0,1):
# mix p(x) with a shrinking step toward r*, and the ratio approaches the
# KL-divergence ratio at r* itself
r_star = PMF((0, 1), np.array([0.0, 1.0]))
print("\ntwo-point perturbations toward r* = (0, 1):")
for eps, st in zip((0.4, 0.01, 1e-5), perturbation_sequence(j, r_star, [0.4, 0.01, 1e-5])):
    print(f"  eps = {eps:<8g} ratio = {st.ratio:.9f}")
print(f"  kl_ratio at r*    = {kl_ratio(j, r_star):.9f}")

# the ceiling itself: maximizing the KL ratio over all inputs r finds the
# vertex and the value s* = (1/2) log2(12/5)
res = sstar(j)
print(f"\ns*(X;Y) = {res.value:.12f}  at r = {res.maximizer.probs}")
print(f"exact    {0.5 * np.log2(12 / 5):.12f}  = (1/2) log2(12/5)")
print(f"\nconclusion: ratios exceed rho^2 = {rho2:.1f} by up to "
      f"{res.value - rho2:.6f}; rho^2 does not bound I(U;Y)/I(U;X), s* does.")
