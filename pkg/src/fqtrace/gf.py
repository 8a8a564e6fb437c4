"""Prime-power finite fields GF(p^k) with log/antilog tables.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_0 + c_1 x + ...`` is the polynomial-basis representation modulo
the field's modulus.  Under this encoding the integer order of codes is the
lexicographic order of the coefficient tuple ``(c_{k-1}, ..., c_0)``, which
is what the deterministic modulus/generator selection relies on.

The :class:`Field` methods are vectorised over numpy integer arrays; the
:class:`FieldElement` wrapper gives scalar operator syntax on top of them.
"""
from __future__ import annotations

import builtins
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_SIZE = 1 << 20
ADD_TABLE_MAX = 1024  # r x r int32 addition table up to 4 MiB


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p, coefficient lists low -> high ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mod(a, f, p):
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = builtins.pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, f, p)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (low -> high) over F_p."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**k, f, p), x, p):
        return False
    for ell in prime_factors(k):
        h = _poly_sub(_poly_powmod(x, p ** (k // ell), f, p), x, p)
        if len(_poly_gcd(f, h, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``k``.

    Returned low -> high with the leading 1 included.  Candidates are ordered
    by the tuple ``(c_{k-1}, ..., c_0)``.
    """
    for tail in itertools.product(range(p), repeat=k):
        f = list(reversed(tail)) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


# -- the field ---------------------------------------------------------------

class Field:
    """GF(p^k) with full exp/log tables.  Build through :func:`build_field`."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.size = p**k
        self.order = self.size - 1
        self.modulus = smallest_irreducible(p, k)
        self._pows = np.array([p**i for i in range(k)], dtype=np.int64)
        self.generator = self._find_generator()
        self.exp = self._build_exp()
        log = np.full(self.size, -1, dtype=np.int64)
        log[self.exp] = np.arange(self.order, dtype=np.int64)
        if (log[1:] < 0).any():
            raise FieldError("generator is not primitive")  # defensive: exp must be a permutation
        self.log = log
        self._trace_tables: dict[int, np.ndarray] = {}
        self._addtab = None
        for arr in (self.exp, self.log):
            arr.flags.writeable = False

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("Field", self.p, self.k))

    def __reduce__(self):
        return (build_field, (self.p, self.k))

    # -- coefficient helpers
    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple((x // self.p**i) % self.p for i in range(self.k))

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        cs = list(coeffs)
        if len(cs) > self.k:
            raise FieldError("too many coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(cs))

    def digits(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self._pows) % self.p

    def undigits(self, d: np.ndarray) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._pows

    # -- construction helpers
    def _mul_poly_codes(self, x: int, y: int) -> int:
        prod = _poly_mulmod(list(self.coeffs(x)), list(self.coeffs(y)), list(self.modulus), self.p)
        return self.from_coeffs(prod)

    def _pow_poly_code(self, x: int, e: int) -> int:
        return self.from_coeffs(_poly_powmod(list(self.coeffs(x)), e, list(self.modulus), self.p))

    def _find_generator(self) -> int:
        if self.order == 1:
            return 1
        cofactors = [self.order // ell for ell in prime_factors(self.order)]
        for g in range(1, self.size):
            if all(self._pow_poly_code(g, c) != 1 for c in cofactors):
                return g
        raise FieldError("no primitive element")  # unreachable

    def _const_mul_matrix(self, c: int) -> np.ndarray:
        # row i: coefficients of x^i * c
        rows = []
        for i in range(self.k):
            rows.append(self.coeffs(self._mul_poly_codes(self.p**i, c)))
        return np.array(rows, dtype=np.int64)

    def _build_exp(self) -> np.ndarray:
        exp = np.empty(self.order, dtype=np.int64)
        exp[0] = 1
        filled = 1
        while filled < self.order:
            step = min(filled, self.order - filled)
            c = self._pow_poly_code(self.generator, filled)
            mat = self._const_mul_matrix(c)
            d = self.digits(exp[:step])
            exp[filled:filled + step] = self.undigits(d @ mat)
            filled += step
        return exp

    # -- vectorised arithmetic on integer codes
    def add(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return x ^ y
        table = self._add_table()
        if table is not None:
            return table[x, y].astype(np.int64)
        return self.undigits(self.digits(x) + self.digits(y))

    def _add_table(self):
        if self.size > ADD_TABLE_MAX:
            return None
        if self._addtab is None:
            allx = np.arange(self.size, dtype=np.int64)
            d = self.digits(allx)
            tab = self.undigits(d[:, None, :] + d[None, :, :]).astype(np.int32)
            tab.flags.writeable = False
            self._addtab = tab
        return self._addtab

    def neg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return x
        return self.undigits(-self.digits(x))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        idx = (self.log[x] + self.log[y]) % self.order
        out = self.exp[idx]
        return np.where((x == 0) | (y == 0), 0, out)

    def mul_poly(self, x: int, y: int) -> int:
        """Scalar product by schoolbook multiplication and reduction."""
        return self._mul_poly_codes(int(x), int(y))

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        if (x == 0).any():
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[x]) % self.order]

    def power(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        if e < 0:
            x = self.inv(x)
            e = -e
        out = self.exp[(self.log[x] * (e % self.order)) % self.order]
        if e == 0:
            return np.ones_like(x)
        return np.where(x == 0, 0, out)

    def alpha_pow(self, i):
        """``generator ** i`` for integer (arrays of) exponents."""
        return self.exp[np.asarray(i, dtype=np.int64) % self.order]

    def dlog(self, x):
        x = np.asarray(x, dtype=np.int64)
        if (x == 0).any():
            raise FieldError("discrete log of zero")
        return self.log[x]

    def trace_table(self, d: int) -> np.ndarray:
        """Tr_{p^k / p^d} of every element, indexed by code."""
        if d < 1 or self.k % d:
            raise FieldError(f"{d} does not divide extension degree {self.k}")
        if d not in self._trace_tables:
            allx = np.arange(self.size, dtype=np.int64)
            acc = np.zeros(self.size, dtype=np.int64)
            q = self.p**d
            for j in range(self.k // d):
                acc = self.add(acc, self.power(allx, q**j))
            acc.flags.writeable = False
            self._trace_tables[d] = acc
        return self._trace_tables[d]

    def subfield_mask(self, d: int) -> np.ndarray:
        if d < 1 or self.k % d:
            raise FieldError(f"{d} does not divide extension degree {self.k}")
        allx = np.arange(self.size, dtype=np.int64)
        return self.power(allx, self.p**d) == allx

    def element(self, x) -> "FieldElement":
        if isinstance(x, (list, tuple)):
            x = self.from_coeffs(x)
        x = int(x)
        if not 0 <= x < self.size:
            raise FieldError(f"code {x} out of range for {self!r}")
        return FieldElement(self, x)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.size)]


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> Field:
    return Field(p, k)


def build_field(p: int, k: int, max_size: int = DEFAULT_MAX_SIZE) -> Field:
    """Return GF(p^k) with its deterministic modulus and generator.

    Fields are cached, so repeated calls hand back the same object.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if p**k > max_size:
        raise FieldError(f"field size {p}^{k} exceeds bound {max_size}")
    return _cached_field(p, k)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def __repr__(self):
        return f"GF({self.field.p}^{self.field.k})[{self.value}]"

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            # integers embed through the prime subfield
            return FieldElement(self.field, other % self.field.p)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, int(self.field.add(self.value, other.value)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, int(self.field.sub(self.value, other.value)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.value)))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, int(self.field.mul(self.value, other.value)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        return FieldElement(self.field, int(self.field.power(self.value, e)))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, int(self.field.inv(self.value)))


# -- module-level operations --------------------------------------------------

def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def pow(x: FieldElement, e: int) -> FieldElement:  # noqa: A001 - mirrors the operation name
    return x**e


def discrete_log(x: FieldElement) -> int:
    """Exponent ``i`` in ``[0, p^k - 1)`` with ``generator**i == x``."""
    if x.value == 0:
        raise FieldError("discrete log of zero")
    return int(x.field.log[x.value])


def subfield_trace(x: FieldElement, d: int) -> FieldElement:
    """Trace from GF(p^k) down to its subfield GF(p^d)."""
    return FieldElement(x.field, int(x.field.trace_table(d)[x.value]))


def absolute_trace(x: FieldElement) -> int:
    """Trace down to F_p, returned as an integer in ``[0, p)``."""
    return int(x.field.trace_table(1)[x.value])


def is_in_subfield(x: FieldElement, d: int) -> bool:
    f = x.field
    if d < 1 or f.k % d:
        raise FieldError(f"{d} does not divide extension degree {f.k}")
    return int(f.power(x.value, f.p**d)) == x.value
