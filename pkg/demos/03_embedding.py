#!/usr/bin/env python3
"""Embedding a 4-free finitely presented group into its ambient group.

Each odd factor Z_{p^k} lands inside its own quasicyclic factor Z(p^inf)
(generator image 1/p^k), each Z_2 factor becomes a t bit, each free
generator a unit rational coordinate.  The map is injective, additive, and
order-preserving, and its image contains no element of order 4.
"""

from fourfree import (
    Presentation,
    build_embedding,
    canonical_decomposition,
    element_order_in,
    embed,
)
from fourfree.embedding import OrderFourPresent

pres = Presentation(2, ((2, 0), (0, 6)))  # Z2 + Z6 = Z2 + Z2 + Z3
dec = canonical_decomposition(pres)
emap = build_embedding(dec)
print("group:", dec.describe())
print("ambient signature:", emap.signature.describe())
print("generator images:")
for (p, e), img in zip(dec.primary_factors, emap.generator_images):
    print(f"  Z_{p**e:<3} generator -> {img.canonical_text()}")

print("\nlinear extension (coefficients follow the canonical generator order):")
for coeffs in [(0, 0, 0), (1, 0, 0), (1, 1, 2), (0, 0, 3)]:
    img = embed(emap, coeffs)
    print(f"  {coeffs} -> {img.canonical_text():28s} order {img.order()}"
          f"  (expected {element_order_in(dec, coeffs)})")

print("\ninjectivity on canonical representatives:")
reps = [(a, b, c) for a in range(2) for b in range(2) for c in range(3)]
images = {embed(emap, r) for r in reps}
print(f"  {len(reps)} representatives -> {len(images)} distinct images")

print("\na group with an order-4 element is refused:")
try:
    build_embedding(canonical_decomposition(Presentation(1, ((4,),))))
except OrderFourPresent as exc:
    print("  OrderFourPresent:", exc)
