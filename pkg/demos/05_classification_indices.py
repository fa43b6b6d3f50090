"""Index sets for the simple modules.

Two combinatorial languages describe the same classification: Kleshchev
multipartitions (per cyclotomic quotient, via the good-node crystal
recursion) and aperiodic multisegments (for the ambient affine algebra).
The pair (f, -) tracks how many contractions e_1 the label carries.
"""

from cycbmw import (GF, Multicharge, ParameterSet, classify_affine,
                    classify_cyclotomic, enumerate_aperiodic, is_kleshchev)
from cycbmw.combinatorics import multipartition_str, segments_str

# Aperiodic multisegments at quantum characteristic 2
print("M_2^2 =", [segments_str(ms) for ms in enumerate_aperiodic(2, 2)])
print("affine index pairs, n = 2:")
for ent in classify_affine(2, 2, omega_all_zero=False):
    note = "" if ent.established else "   (necessary label only)"
    print(f"  f={ent.f}  {segments_str(ent.segments):14s}{note}")
print("with the whole omega sequence zero the f = n/2 entry drops out:")
for ent in classify_affine(2, 2, omega_all_zero=True):
    print(f"  f={ent.f}  {segments_str(ent.segments)}")

# Kleshchev multipartitions through a concrete cyclotomic quotient
F = GF(101)
q = F(10)                       # q^2 = -1, so e = 2
p = ParameterSet(F, q, (q * q).inv(), [q * q], admissible=True)
mc = Multicharge.from_parameters(p)
print(f"\ncyclotomic side at e = {p.e}, multicharge {mc.charges}:")
for ent in classify_cyclotomic(p, mc, 2):
    print(f"  f={ent.f}  lambda = {multipartition_str(ent.lam)}")
print("((2)) is e-restricted only for e > 2:",
      is_kleshchev(((2,),), mc), "at e = 2")
