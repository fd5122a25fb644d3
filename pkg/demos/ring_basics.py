"""
Finite ring construction and element structure
==============================================

Rings are built from expressions; elements are plain integer ids.
"""

from zdalliance import (build_ring, local_structure, nilradical, units,
                        zero_divisors)

# modular integers, Galois fields, products, idealizations
for expr in ["Z12", "GF(8)", "Z2 x Z4", "Id(Z3, 1)"]:
    ring = build_ring(expr)
    print(f"{ring.label}: order {ring.order}, identity id {ring.one}")

# element sets of Z12
r = build_ring("Z12")
print("\nZ12 zero divisors (0 included):", sorted(zero_divisors(r)))
print("Z12 units:", sorted(units(r)))
print("Z12 nilradical:", sorted(nilradical(r)))

# arithmetic works directly on ids
print("\n8 + 9 =", r.add(8, 9), "  8 * 9 =", r.mul(8, 9), "  -5 =", r.neg(5))

# product components read off from the label
p = build_ring("Z2 x Z4")
print("\nZ2 x Z4 element 6 is", p.element_label(6))
print("(1,2) * (0,2) =", p.element_label(p.mul(6, 2)))

# local rings carry their maximal ideal and its nilpotency index
for expr in ["Z8", "Z9", "Id(Z3, 1)", "Z12"]:
    s = local_structure(build_ring(expr))
    if s is None:
        print(f"{expr}: not local")
    else:
        print(f"{expr}: local, |M| = {len(s.maximal_ideal)}, "
              f"M^{s.nilpotency_index} = 0")
