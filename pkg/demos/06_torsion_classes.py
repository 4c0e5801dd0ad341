#!/usr/bin/env python3
# Torsion-class bookkeeping over F_ell: zero-sum sets, multiplicity functions,
# and the constructive decomposition witnesses.

from matgroups import torsion

ell = 7
print("mu3 =", torsion.mu3(ell), "(the cube roots of 1 mod", str(ell) + ")")

for k in (2, 3, 4):
    sets = torsion.b_k(ell, k)
    print(f"B_{k} over F_{ell}: {len(sets)} sets -> {sets}")

# torsion conjugacy classes of the two ambient groups
free = torsion.torsion_classes("free-product", ell)
print(f"\nZ/{ell} * Z/{ell}: {len(free.representatives)} torsion classes")
quad = torsion.torsion_classes("quadrilateral", 19)
print(f"quadrilateral group at ell=19: {len(quad.representatives)} torsion classes")

# A_n: near-constant multiplicity functions with excess support in B_(n mod ell)
n = 9
print(f"\nA_{n} over F_{ell}:")
for fn in torsion.a_n(ell, n):
    print("  ", fn.values, " excess:", fn.excess_set)

# witnesses decompose f as (smaller member) + (translated singleton or pair);
# rebuild() confirms the decomposition reproduces f exactly
f = torsion.a_n(ell, n)[0]
w2 = torsion.decomposition_witness(ell, n, f, "cond2")
print("\ncond2:", f.values, "=", w2.f_prime.values, "+ singleton at",
      w2.singleton, "shift", w2.shift, "| rebuilds:", w2.rebuild() == f)

w3 = torsion.decomposition_witness(ell, n, f, "cond3")
print("cond3:", f.values, "= f1", w3.f1.values, "+ f2", w3.f2.values,
      "shifts", (w3.shift1, w3.shift2), "| rebuilds:", w3.rebuild() == f)

# multiplicities stay below ceil(n/ell), and for ell >= 19 the exact
# fraction chain a+1 <= ... <= n/10 holds whenever ell does not divide n
rep = torsion.class_multiplicity_check(19, 20, torsion.a_n(19, 20)[0])
print(f"\nell=19, n=20: max multiplicity {rep.max_multiplicity},"
      f" ceiling {rep.ceiling}, chain holds: {rep.chain_holds}")
