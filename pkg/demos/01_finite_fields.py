"""Finite fields as integer codes.

An element of GF(p^k) is stored as c0 + c1 p + ... + c_{k-1} p^{k-1}; the
field is fixed by the smallest monic irreducible modulus and the smallest
primitive element.
"""
from fqtrace.gf import build_field, subfield_trace

F = build_field(3, 2)
print(F, "modulus (low to high):", F.modulus, "generator code:", F.generator)

# powers of the generator walk through every nonzero element
print("alpha^i:", F.exp[:8].tolist())
print("log 2 =", F.dlog(2))

x, y = F.element(5), F.element(7)
print(f"{x} * {y} = {x * y},  {x} / {y} = {x / y}")

# the trace down to a subfield lands in that subfield
G = build_field(2, 6)
z = G.element(37)
for d in (1, 2, 3):
    print(f"Tr_(64/2^{d})(37) =", subfield_trace(z, d).value)
