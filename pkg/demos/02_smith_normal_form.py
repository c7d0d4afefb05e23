#!/usr/bin/env python3
"""Smith normal form and what it tells you about a finitely presented group.

A presentation is a relation matrix over named generators; unimodular row
and column operations diagonalize it without changing the group.  The
diagonal (the invariant factors) hands us the structure: free rank plus
prime-power cyclic factors, and with them a definitive order-4 verdict.
"""

from fourfree import (
    Presentation,
    adjoin_divisor,
    canonical_decomposition,
    has_order_four,
    smith_normal_form,
)

A = [[4, 6], [2, 8]]
res = smith_normal_form(A)
print("A =", A)
print("S = U A V with diagonal", res.diagonal)
print("U =", [list(r) for r in res.U])
print("V =", [list(r) for r in res.V])

print("\nstructure of some groups:")
for label, pres in [
    ("Z^2 (no relations)", Presentation(2)),
    ("Z4 = <g | 4g>", Presentation(1, ((4,),))),
    ("Z2 + Z6", Presentation(2, ((2, 0), (0, 6)))),
    ("coker [[4,6],[2,8]]", Presentation(2, ((4, 6), (2, 8)))),
]:
    dec = canonical_decomposition(pres)
    print(f"  {label:22s} -> free rank {dec.free_rank}, factors "
          f"{['%d^%d' % f for f in dec.primary_factors]}, "
          f"order-4 element? {has_order_four(dec)}")

print("\nAdjoining a divisor: make x divisible by an odd prime p by adding a")
print("generator y with p*y = x.  The group grows but never gains order-4")
print("elements, which is the whole point of restricting to odd p.")

z3 = Presentation(1, ((3,),))
z9 = adjoin_divisor(z3, (1,), 3)
print("  Z3 with g/3 adjoined has relations", z9.relations,
      "->", canonical_decomposition(z9).describe())

free = adjoin_divisor(Presentation(1), (1,), 3)
print("  Z with g/3 adjoined stays free:", canonical_decomposition(free).describe())
