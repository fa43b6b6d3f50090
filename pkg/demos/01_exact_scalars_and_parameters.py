"""Exact scalars and admissible parameter tuples.

Everything in this workbench runs over GF(p) or Q with exact arithmetic.
A parameter tuple (q, rho, u_1..u_r) is admissible when rho^{-1} equals
alpha * u_1...u_r for one of the two allowed alphas; the gamma weights
then generate the whole two-sided omega sequence.
"""

from cycbmw import GF, QQ, ParameterSet, check_admissible, gamma_weights, omega

# A rational example, small enough to follow by hand: q = 2, u_1 = 3,
# rho = 1/3 (so alpha = 1).
p = ParameterSet(QQ, 2, "1/3", [3], admissible=True)
print("delta      =", p.delta)
print("omega_0    =", p.omega0, "(preamble identity 1 - delta^{-1}(rho - rho^{-1}))")
print("gamma      =", [str(g) for g in gamma_weights(p)])
print("omega_1    =", omega(p, 1), "   omega_{-1} =", omega(p, -1))
print("witness    =", check_admissible(p).detail)
print()

# The same machinery over GF(101).  Note the failure report when rho is
# not matched to the roots: admissibility is checked, never assumed.
F = GF(101)
# r even allows alpha in {q^{-1}, -q}; take alpha = q^{-1}, rho = (alpha u1 u2)^{-1}
good = ParameterSet(F, 3, F(3) * (F(4) * F(5)).inv(), [4, 5], admissible=True)
print("GF(101) admissible r=2:", good, "alpha =", good.alpha)
bad = ParameterSet(F, 3, 7, [4, 5], admissible=False, omegas=[0])
print("mismatched rho report: ", check_admissible(bad).detail)
