#!/usr/bin/env python3
# Walk through the finite field layer: prime fields, extensions, polynomials.

from matgroups import ff

# prime field arithmetic
f5 = ff.field_make(5)
a = f5.element(3)
b = f5.element(4)
print("F_5:", a, "+", b, "=", a + b)
print("F_5:", a, "*", b, "=", a * b)
print("F_5: 3^-1 =", a.inverse())

# an extension field F_9 = F_3[x]/(modulus); elements are coded 0..8
f9 = ff.field_make(3, 2)
print("\nF_9 modulus:", ff.poly_str(f9.modulus))
g = f9.primitive_code()
print("primitive element code:", g, "with multiplicative order", f9.code_order(g))

# Frobenius x -> x^3 fixes exactly the prime subfield
fixed = [c for c in range(9) if f9.pow_code(c, 3) == c]
print("fixed points of x -> x^3:", fixed)

# polynomial utilities over F_2
f2 = ff.field_make(2)
quot, rem = ff.poly_divmod(f2, (1, 1, 0, 1, 1), (1, 1, 1))
print("\ndivision over F_2: quotient", ff.poly_str(quot), " remainder", ff.poly_str(rem))

for poly in ff._monic_polys(f2, 3):
    if ff.poly_is_irreducible(f2, poly):
        print("irreducible cubic over F_2:", ff.poly_str(poly))

print("\nfactor x^4 + x^2 over F_2:")
for base, mult in ff.poly_factor(f2, (0, 0, 1, 0, 1)):
    print("  ", ff.poly_str(base), "^", mult)

# q = 81 splits as 3^4
print("\nsplit_prime_power(81) =", ff.split_prime_power(81))
