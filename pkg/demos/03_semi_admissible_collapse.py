"""The semi-admissible regime: partial collapse of the e_1 column.

Extending an admissible level-d tuple by extra cyclotomic roots while
keeping its omega sequence produces a quotient where {e_1, e_1 x_1, ...,
e_1 x_1^d} first becomes dependent at d < r.  The dimension then follows
d^n (2n-1)!! + r^n n! - d^n n!, and the two-sided ideal <e_1> has the
dimension of the admissible level-d ideal, d^n (2n-1)!! - d^n n!.
"""

from cycbmw import GF, ParameterSet, build_algebra, ideal_generated_by, \
    semi_admissibility_degree
from cycbmw.presentation import E

F = GF(101)
q = F(2)
u1 = (q * q) ** 1
base = ParameterSet(F, q, u1.inv(), [u1], admissible=True)   # admissible, d = 1
semi = ParameterSet.semi_admissible(base, [F(16)])           # r = 2 roots

d = semi_admissibility_degree(semi)
print("semi-admissibility degree d =", d, "(r =", semi.r, ")")
print("for comparison, the admissible base has d =",
      semi_admissibility_degree(base))

for n in (2, 3):
    A = build_algebra(n, semi)
    e1 = A.nf_word(bytes((E(1, n),)))
    ideal_dim, _ = ideal_generated_by(A, e1)
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    dblf = 1
    for k in range(1, 2 * n, 2):
        dblf *= k
    want = d**n * dblf + semi.r**n * fact - d**n * fact
    print(f"n={n}: dim {A.dim} (formula {want}); dim<e_1> = {ideal_dim} "
          f"(formula {d**n * dblf - d**n * fact})")
