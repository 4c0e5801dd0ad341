#!/usr/bin/env python3
"""Fixed-subspace counts on Grassmannians and semisimple character bounds."""

from matgroups import charbound, chartab, ff, matgrp

# Gaussian binomials count subspaces: 35 planes inside F_2^4
print("gauss(4, 2, 2) =", charbound.gaussian_binomial(4, 2, 2))

# fixed s-dimensional subspaces of a semisimple matrix, formula vs brute force
fld = ff.field_make(3)
T = matgrp.matrix_element(fld, [[0, 0, 0], [0, 1, 0], [0, 0, 2]])
for s in range(4):
    formula = charbound.fixed_subspace_count(T, s)
    brute = charbound.fixed_subspace_bruteforce(T, s)
    print(f"diag(0,1,2) fixed {s}-subspaces: formula {formula}, brute force {brute}")

# the count is at most q^(m*s + slack) where m is the largest eigenvalue
# multiplicity; the check reports the exponent against the bound
fb = charbound.fixed_subspace_bound_check(T, 1)
print(f"exponent {fb.exponent:.2f} <= bound {fb.bound:.2f}: {fb.holds}")

# one representative per semisimple class, straight from factor multisets
reps = charbound.semisimple_representatives(ff.field_make(2), 3)
print(f"\nGL_3(F_2) has {len(reps)} semisimple classes:")
for factors, M in reps:
    desc = " * ".join(
        f"({ff.poly_str(p)})^{m}" if m > 1 else f"({ff.poly_str(p)})"
        for p, m in factors
    )
    print("  ", desc)

# character bound |chi(x)| <= chi(1)^beta on low-multiplicity semisimple
# classes; small fields can violate it, large ones do not
for q in (3, 5, 7, 11):
    ctx = matgrp.group_build("GL", 2, ff.field_make_q(q))
    table = chartab.character_table(ctx, seed=0)
    rep = charbound.character_bound_check(ctx, table, 0.45, 0.99)
    print(
        f"GL_2(F_{q:>2}): {len(rep.rows)} classes checked,"
        f" {len(rep.violations)} violations,"
        f" within theorem range: {rep.params_within_theorem}"
    )
