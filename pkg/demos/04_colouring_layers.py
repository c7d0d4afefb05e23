#!/usr/bin/env python3
"""The three colour layers and why each one earns its keep.

colour(a) = (profile of the Pruefer part, profile of the free part, is a
halvable?).  For distinct a, b with {2a, 2b, a+b} monochromatic, layer 1
forces equal Pruefer parts, layer 2 equal free parts; that leaves a and b
differing by a nonzero order-2 element, and layer 3 separates 2a (halvable)
from a+b (not halvable, since each coset of the order-2 block contains at
most one halvable element).
"""

from fractions import Fraction

from fourfree import AmbientSignature, colour, colour_encode, element, zero
from fourfree.colouring import halve, is_halvable

sig = AmbientSignature((3, 5), s=2, r=2)

a = element(sig, d={0: Fraction(1, 9), 1: Fraction(2, 5)}, q=(0, Fraction(3, 2)))
print("a          =", a.canonical_text())
print("colour(a)  =", colour_encode(colour(a)))
print("colour(2a) =", colour_encode(colour(a.double())))
print("colour(0)  =", colour_encode(colour(zero(sig))))

print("\nhalvability in the ambient group:")
for x in [a, element(sig, t=(1, 0)), element(sig, d={0: Fraction(1, 3)})]:
    mark = "halvable" if is_halvable(x) else "NOT halvable"
    print(f"  {x.canonical_text():32s} {mark}")
h = halve(element(sig, d={0: Fraction(1, 3)}))
print("  half of d:1/3 is", h.canonical_text(), "(inverse of 2 mod 3 is 2; check: 2*(2/3) = 1/3 mod 1)")

print("\nin integer free mode halvability also needs even coordinates:")
int_sig = AmbientSignature((), 0, 1, free_mode="integer")
for v in (2, 3):
    print(f"  q:({v}) halvable? {is_halvable(element(int_sig, q=(v,)))}")

print("\nwhy layer 3 matters, on the order-2 block (Z_2)^2:")
t_sig = AmbientSignature((), 2, 0)
u = element(t_sig, t=(1, 0))
v = element(t_sig, t=(0, 1))
print("  u =", u.canonical_text(), " v =", v.canonical_text())
print("  2u =", u.double().canonical_text(), " 2v =", v.double().canonical_text(),
      " u+v =", (u + v).canonical_text())
print("  layers 1+2 see no difference (all profiles empty), but:")
print("  halvable(2u) =", is_halvable(u.double()),
      "  halvable(u+v) =", is_halvable(u + v))
print("  so {2u, 2v, u+v} is not monochromatic after all.")
