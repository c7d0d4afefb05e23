#!/usr/bin/env python3
"""What goes wrong with halvability once order-4 elements are around.

The halvability layer relies on a uniqueness fact: in a 4-free group each
coset of the order-2 part contains at most one halvable element, because two
distinct halves g, h of elements in the same coset would make 2(g-h) a
nonzero order-2 element and hence g-h an element of order 4.  In a group
WITH order-4 elements that rescue fails, and this demo exhibits it.
"""

from fourfree import find_order4_witness, order4_obstruction_demo
from fourfree.sumset import FiniteGroupSpec

print("=" * 64)
demo = order4_obstruction_demo((4, 4))
for line in demo.transcript:
    print(line)

print("=" * 64)
print("the same search in 4-free groups, where it must come up empty:")
for orders in [(2, 2), (3,), (6,), (2, 6), (3, 9), (2, 2, 2)]:
    witness = find_order4_witness(FiniteGroupSpec(orders))
    print(f"  orders {orders}: witness = {witness}")

print("=" * 64)
print("a mixed group with one Z4 factor is already enough:")
demo = order4_obstruction_demo((4, 2))
for line in demo.transcript[3:]:
    print(line)
