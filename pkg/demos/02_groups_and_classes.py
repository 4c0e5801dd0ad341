#!/usr/bin/env python3
"""Build small matrix groups and inspect their conjugacy class structure."""

from matgroups import ff, matgrp

ctx = matgrp.group_build("SL", 2, ff.field_make(3))
print(f"SL_2(F_3): order {ctx.order}, {len(ctx.classes)} conjugacy classes\n")

print(f"{'class':>5} {'size':>5} {'|C(x)|':>7} {'ord':>4}  {'char poly':<14} ss")
for c in ctx.classes:
    print(
        f"{c.index:>5} {c.size:>5} {c.centralizer_order:>7} {c.element_order:>4}"
        f"  {ff.poly_str(c.char_poly):<14} {c.is_semisimple}"
    )

# class sizes always sum to the group order, centralizer * size = |G|
assert sum(c.size for c in ctx.classes) == ctx.order

# element arithmetic round trip
u = ctx.element([[1, 1], [0, 1]])
v = ctx.element([[1, 0], [1, 1]])
w = u @ v
print("\n[[1,1],[0,1]] @ [[1,0],[1,1]] =", w.codes, "-> class", ctx.class_index_of(w))
print("inverse:", matgrp.mat_inv(w).codes)

# regular semisimple classes are pinned down by their characteristic polynomial
gl = matgrp.group_build("GL", 2, ff.field_make(5))
info = matgrp.semisimple_class_from_charpoly(gl, (2, 0, 1))  # x^2 + 2
print(
    f"\nGL_2(F_5) class with char poly x^2 + 2: size {info.size},"
    f" element order {info.element_order}"
)

# the second build of the same group comes from the in-process table cache
# when cache_dir (or MATGROUPS_CACHE) is set it round-trips through disk
again = matgrp.group_build("GL", 2, ff.field_make(5))
print("rebuild consistent:", again.order == gl.order)
