"""The chain ring F_r + uF_r (u^2 = 0) over a subring F_q + uF_q.

``F_q`` is never built on its own: it is the subfield ``{x : x^q = x}`` of
the single tower ``F_r = GF(p^{s m})``.  Elements of the small ring are just
ring elements whose two components pass that membership test.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import Field, FieldElement, FieldError, build_field, is_in_subfield


@dataclass(frozen=True)
class RingElement:
    """``a + u b`` with ``a``, ``b`` in the same field."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.field != self.b.field:
            raise FieldError("ring components live in different fields")

    @property
    def field(self) -> Field:
        return self.a.field

    def __repr__(self):
        return f"({self.a.value} + u*{self.b.value})"

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return RingElement(-self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def __bool__(self):
        return bool(self.a) or bool(self.b)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(x.a + y.a, x.b + y.b)


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    # (a + ub)(c + ud) = ac + u(ad + bc); the u^2 bd term vanishes
    return RingElement(x.a * y.a, x.a * y.b + x.b * y.a)


def is_unit(x: RingElement) -> bool:
    return x.a.value != 0


def ring_inverse(x: RingElement) -> RingElement:
    """``(a + ub)^{-1} = a^{-1} - u b a^{-2}``."""
    if not is_unit(x):
        raise ZeroDivisionError("element of the maximal ideal <u> has no inverse")
    ainv = x.a.inverse()
    return RingElement(ainv, -(x.b * ainv * ainv))


class RingExtension:
    """F_r + uF_r with r = q^m, q = p^s, together with its trace to F_q + uF_q."""

    def __init__(self, p: int, s: int, m: int, max_size: int | None = None):
        if s < 1 or m < 1:
            raise FieldError("s and m must be positive")
        self.p, self.s, self.m = p, s, m
        self.field = build_field(p, s * m) if max_size is None else build_field(p, s * m, max_size)
        self.q = p**s
        self.r = self.q**m

    def __repr__(self):
        return f"RingExtension(p={self.p}, s={self.s}, m={self.m})"

    def __reduce__(self):
        return (RingExtension, (self.p, self.s, self.m))

    def element(self, a, b=0) -> RingElement:
        F = self.field
        a = a if isinstance(a, FieldElement) else F.element(a)
        b = b if isinstance(b, FieldElement) else F.element(b)
        return RingElement(a, b)

    @property
    def u(self) -> RingElement:
        return self.element(0, 1)

    @property
    def one(self) -> RingElement:
        return self.element(1, 0)

    def elements(self):
        for a in range(self.r):
            for b in range(self.r):
                yield self.element(a, b)

    def frobenius(self, x: RingElement, q: int | None = None) -> RingElement:
        """``a^q + u b^q``."""
        q = self.q if q is None else q
        if q != self.q:
            raise FieldError(f"Frobenius exponent {q} is not the base ring order {self.q}")
        return RingElement(x.a**q, x.b**q)

    def trace(self, x: RingElement) -> RingElement:
        """Sum of the first ``m`` Frobenius iterates of ``x``."""
        acc = RingElement(self.field.zero, self.field.zero)
        y = x
        for _ in range(self.m):
            acc = acc + y
            y = self.frobenius(y)
        return acc

    def in_base_ring(self, x: RingElement) -> bool:
        return is_in_subfield(x.a, self.s) and is_in_subfield(x.b, self.s)

    def base_ring_elements(self):
        mask = self.field.subfield_mask(self.s)
        sub = np.flatnonzero(mask)
        for a in sub:
            for b in sub:
                yield self.element(int(a), int(b))

    @property
    def units_count(self) -> int:
        return self.r * self.r - self.r


def frobenius(x: RingElement, q: int) -> RingElement:
    """Raise both components to the ``q``-th power."""
    F = x.field
    if _subfield_degree(F, q) is None:
        raise FieldError(f"{q} is not a subfield order of {F!r}")
    return RingElement(x.a**q, x.b**q)


def ring_trace(x: RingElement, q: int) -> RingElement:
    """Trace of ``x`` from F_r + uF_r down to F_q + uF_q."""
    F = x.field
    d = _subfield_degree(F, q)
    if d is None:
        raise FieldError(f"{q} is not a subfield order of {F!r}")
    acc = RingElement(F.zero, F.zero)
    y = x
    for _ in range(F.k // d):
        acc = acc + y
        y = RingElement(y.a**q, y.b**q)
    return acc


def _subfield_degree(F: Field, q: int):
    d, t = 0, 1
    while t < q:
        t *= F.p
        d += 1
    if t != q or d == 0 or F.k % d:
        return None
    return d
