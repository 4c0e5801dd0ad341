#!/usr/bin/env python3
"""Word maps: evaluation, fibers, growth-rate fits, and pair statistics."""

from matgroups import ff, homcount, matgrp, wordmap
from matgroups.homcount import parse_word

f = ff.field_make(3)
ctx = matgrp.group_build("SL", 2, f)

# evaluate a word at an explicit tuple
w = parse_word("[x1,x2]")
a = matgrp.matrix_element(f, [[1, 1], [0, 1]])
b = matgrp.matrix_element(f, [[1, 0], [1, 1]])
print("[a,b] =", wordmap.eval_word(w, (a, b)).codes)

# fiber of the commutator map over the identity
print("|{(x,y) : [x,y] = 1}| =", wordmap.fiber_count(w, ctx, ctx.identity))

# fitted dimension of the representation variety across growing fields;
# for the genus-2 surface group and SL_2 the expected dimension is
# (2g - 1) * dim SL_2 = 9
prof = wordmap.dimension_estimate(
    homcount.surface_presentation(2), ("SL", 2), (3, 5, 7, 11, 13)
)
print("\nsamples:", prof.samples)
print(
    f"fitted dimension {prof.fitted_dimension:.3f},"
    f" leading coefficient {prof.fitted_leading_coefficient:.3f},"
    f" irreducibility consistent: {prof.irreducibility_consistent}"
)

# a free group of rank 2 fits 2 * dim SL_2 = 6
free = wordmap.dimension_estimate(homcount.Presentation(2, ()), ("SL", 2), (3, 5, 7))
print(f"free rank 2: fitted dimension {free.fitted_dimension:.3f}")

# the double word map ([x1,x2][x3,x4], x1): its image is trapped in
# (derived subgroup) x G, which for SL_2(F_3) is only a third of G x G
image, fraction = wordmap.double_word_stats(
    parse_word("[x1,x2][x3,x4]"), parse_word("x1"), ctx
)
print(f"\ndouble word image: {image} pairs = {fraction:.3f} of |G|^2")

# away from the center, commuting is transitive in SL_2 over odd fields
for q in (3, 5, 7):
    c = matgrp.group_build("SL", 2, ff.field_make_q(q))
    print(f"commutative transitivity, SL_2(F_{q}):",
          wordmap.commutative_transitivity_check(c))
