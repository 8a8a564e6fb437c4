"""Characters, Gauss sums, cyclotomic classes and Gaussian periods.

Gaussian periods are sums of p-th roots of unity, so they are computed
exactly in Z[zeta_p] (:class:`CyclotomicInteger`) rather than in floating
point.  Period polynomials are expanded in the same arithmetic and must come
out with rational integer coefficients.

The closed forms for N = 2, 3, 4 and the Diophantine normalisations they
depend on live here too; :func:`closed_form_periods` evaluates every
admissible reading of a closed form and keeps the one whose roots annihilate
the exactly computed period polynomial.
"""
from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .gf import Field, FieldElement, FieldError, build_field, discrete_log


class CaseMismatch(ValueError):
    """The requested closed form does not exist for these parameters."""


# ---------------------------------------------------------------------------
# exact arithmetic in Z[zeta_p]

@dataclass(frozen=True)
class CyclotomicInteger:
    """Element of Z[zeta_p] on the basis 1, zeta, ..., zeta^{p-2}."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coordinates, got {len(self.coords)}")

    @classmethod
    def from_int(cls, p: int, c: int) -> "CyclotomicInteger":
        return cls(p, (int(c),) + (0,) * (p - 2))

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CyclotomicInteger":
        """``sum_k counts[k] * zeta^k`` for ``k = 0..p-1``, canonicalised."""
        counts = [int(c) for c in counts]
        counts += [0] * (p - len(counts))
        top = counts[p - 1]
        # zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        return cls(p, tuple(counts[k] - top for k in range(p - 1)))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "CyclotomicInteger":
        counts = [0] * p
        counts[k % p] = 1
        return cls.from_exponent_counts(p, counts)

    def _coerce(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.p != self.p:
                raise ValueError("cyclotomic integers over different primes")
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInteger.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        acc[(i + j) % p] += a * b
        return CyclotomicInteger.from_exponent_counts(p, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ArithmeticError(f"{self} is not a rational integer")
        return self.coords[0]

    def __int__(self):
        return self.to_int()

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.p)
        return sum(c * z**k for k, c in enumerate(self.coords))

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicInteger({self.coords[0]})"
        return f"CyclotomicInteger(p={self.p}, {self.coords})"


# ---------------------------------------------------------------------------
# characters and Gauss sums

def additive_character(x: FieldElement) -> CyclotomicInteger:
    """Canonical additive character ``zeta_p^{Tr(x)}``."""
    F = x.field
    t = int(F.trace_table(1)[x.value])
    return CyclotomicInteger.zeta(F.p, t)


def multiplicative_character(j: int, x: FieldElement) -> complex:
    F = x.field
    if not 0 <= j <= F.size - 2:
        raise ValueError(f"character index {j} outside [0, {F.size - 2}]")
    if x.value == 0:
        raise FieldError("multiplicative character of zero")
    k = discrete_log(x)
    return cmath.exp(2j * math.pi * j * k / F.order)


def _additive_values(F: Field, codes) -> np.ndarray:
    t = F.trace_table(1)[np.asarray(codes, dtype=np.int64)]
    return np.exp(2j * np.pi * t / F.p)


def gauss_sum_numeric(F: Field, j: int) -> complex:
    """``sum_{c != 0} psi_j(c) chi(c)`` in floating point."""
    if not 0 <= j <= F.size - 2:
        raise ValueError(f"character index {j} outside [0, {F.size - 2}]")
    k = np.arange(F.order)
    c = F.exp[k]
    psi = np.exp(2j * np.pi * j * k / F.order)
    return complex(np.sum(psi * _additive_values(F, c)))


def quadratic_gauss_closed_form(F: Field) -> complex:
    """G(eta, chi_1) for q = p^s odd."""
    p, s = F.p, F.k
    if p == 2:
        raise ValueError("quadratic character needs odd q")
    root = math.sqrt(F.size)
    sign = (-1) ** (s - 1)
    if p % 4 == 1:
        return complex(sign * root)
    return sign * (1j**s) * root


def quadratic_character(x: FieldElement) -> int:
    if x.field.p == 2:
        raise ValueError("quadratic character needs odd q")
    return 1 if discrete_log(x) % 2 == 0 else -1


def quadratic_sum_identity_check(a2: FieldElement, a1: FieldElement, a0: FieldElement,
                                 tol: float = 1e-9) -> bool:
    """Compare ``sum_c chi(a2 c^2 + a1 c + a0)`` with its Gauss-sum evaluation."""
    F = a2.field
    if F.p == 2:
        raise ValueError("identity needs odd q")
    if a2.value == 0:
        raise ValueError("a2 must be nonzero")
    c = np.arange(F.size)
    f = F.add(F.add(F.mul(a2.value, F.mul(c, c)), F.mul(a1.value, c)), a0.value)
    lhs = complex(np.sum(_additive_values(F, f)))
    four = F.element(4 % F.p)
    shift = a0 - a1 * a1 * (four * a2).inverse()
    chi = complex(_additive_values(F, [shift.value])[0])
    rhs = chi * quadratic_character(a2) * gauss_sum_numeric(F, (F.size - 1) // 2)
    return abs(lhs - rhs) < tol


# ---------------------------------------------------------------------------
# cyclotomic classes

def _check_index(F: Field, N: int):
    if N < 1 or F.order % N:
        raise ValueError(f"N={N} does not divide r-1={F.order}")


def cyclotomic_class(x: FieldElement, N: int) -> int:
    """Index ``i`` with ``x`` in ``alpha^i <alpha^N>``."""
    _check_index(x.field, N)
    return discrete_log(x) % N


def class_members(F: Field, N: int, i: int) -> np.ndarray:
    """Codes of C_i^{(N,r)} in the order alpha^i, alpha^{i+N}, ..."""
    _check_index(F, N)
    return F.exp[(i % N) + N * np.arange(F.order // N)]


def multiset_product_check(p: int, s: int, m: int, e: int) -> bool:
    """Enumerate ``{x y : x in F_q^*, y in C_0^{(e,r)}}`` and compare with the
    predicted multiset ``((q-1)/e) gcd(m,e) * C_0^{(gcd(m,e), r)}``."""
    q = p**s
    if e < 1 or (q - 1) % e:
        raise ValueError(f"e={e} does not divide q-1={q - 1}")
    F = build_field(p, s * m)
    order = F.order
    small = (np.arange(q - 1) * (order // (q - 1)))[:, None]
    big = (e * np.arange(order // e))[None, :]
    logs = ((small + big) % order).ravel()
    counts = Counter(logs.tolist())
    N = gcd(m, e)
    mult = (q - 1) // e * N
    expected = set(range(0, order, N))
    return set(counts) == expected and all(v == mult for v in counts.values())


# ---------------------------------------------------------------------------
# Gaussian periods and period polynomials

def gaussian_period_exact(F: Field, N: int, i: int) -> CyclotomicInteger:
    """Sum of the canonical additive character over C_i^{(N,r)}."""
    members = class_members(F, N, i)
    traces = F.trace_table(1)[members]
    counts = np.bincount(traces, minlength=F.p)
    return CyclotomicInteger.from_exponent_counts(F.p, counts)


def gaussian_periods(F: Field, N: int) -> list[CyclotomicInteger]:
    return [gaussian_period_exact(F, N, i) for i in range(N)]


@dataclass(frozen=True)
class PeriodPolynomial:
    N: int
    r: int
    coeffs: tuple[int, ...]  # descending powers, leading 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def integer_roots(self) -> list[int]:
        return integer_roots(self.coeffs)

    def __str__(self):
        return poly_to_str(self.coeffs)


def poly_to_str(coeffs, var: str = "X") -> str:
    deg = len(coeffs) - 1
    parts = []
    for k, c in enumerate(coeffs):
        power = deg - k
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and power) else str(mag)
        if power:
            body += var + (f"^{power}" if power > 1 else "")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def integer_roots(coeffs) -> list[int]:
    """Integer roots (with multiplicity) of a monic integer polynomial."""
    coeffs = [int(c) for c in coeffs]
    roots = []
    while len(coeffs) > 1:
        if coeffs[-1] == 0:
            roots.append(0)
            coeffs = coeffs[:-1]
            continue
        found = None
        for d in _divisors(abs(coeffs[-1])):
            for cand in (d, -d):
                if _horner(coeffs, cand) == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        coeffs = _deflate(coeffs, found)
    return sorted(roots)


def _horner(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deflate(coeffs, root):
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def period_polynomial(F: Field, N: int) -> PeriodPolynomial:
    """Expand ``prod_i (X - eta_i)`` exactly; every coefficient must be an integer."""
    periods = gaussian_periods(F, N)
    one = CyclotomicInteger.from_int(F.p, 1)
    poly = [one]
    for eta in periods:
        nxt = poly + [CyclotomicInteger.from_int(F.p, 0)]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] - eta * poly[k - 1]
        poly = nxt
    coeffs = []
    for c in poly:
        if not c.is_rational():
            raise ArithmeticError(f"non-integer period polynomial coefficient {c}")
        coeffs.append(c.to_int())
    return PeriodPolynomial(N, F.size, tuple(coeffs))


# ---------------------------------------------------------------------------
# Diophantine normalisations

@dataclass(frozen=True)
class DiophantineSolution:
    """``first`` is unique; ``second`` is stored as |second| when both signs solve."""

    kind: str
    p: int
    power: int
    first: int
    second: int
    both_signs: bool

    @property
    def target(self) -> int:
        return _FORMS[self.kind][2] * self.p**self.power

    def holds(self) -> bool:
        weight, modulus, _ = _FORMS[self.kind]
        return (self.first**2 + weight * self.second**2 == self.target
                and self.first % modulus == 1 % modulus)


# kind -> (weight of second^2, modulus of the congruence first = 1, lhs factor)
_FORMS = {
    "c": (27, 3, 4),   # 4 r = c^2 + 27 d^2
    "c1": (27, 3, 4),  # 4 p^{.} = c1^2 + 27 d1^2
    "u": (4, 4, 1),    # r = u^2 + 4 v^2
    "u1": (4, 4, 1),   # p^{.} = u1^2 + 4 v1^2
}


def solve_diophantine(kind: str, p: int, power: int) -> DiophantineSolution:
    """Normalised solution of one of the four quadratic forms.

    ``kind`` is ``"c"`` (4 p^power = c^2 + 27 d^2, c = 1 mod 3), ``"u"``
    (p^power = u^2 + 4 v^2, u = 1 mod 4), or ``"c1"``/``"u1"`` (same forms,
    with p-coprimality of the first component always enforced).  For ``"c"``
    and ``"u"`` coprimality is only enforced when p = 1 modulo 3 resp. 4.
    """
    if kind not in _FORMS:
        raise ValueError(f"unknown Diophantine kind {kind!r}")
    weight, modulus, factor = _FORMS[kind]
    target = factor * p**power
    if kind in ("c1", "u1"):
        coprime = True
    else:
        coprime = p % modulus == 1
    found = set()
    for second in range(isqrt(target) + 2):
        rest = target - weight * second * second
        if rest < 0:
            break
        root = isqrt(rest)
        if root * root != rest:
            continue
        for first in {root, -root}:
            if first % modulus != 1 % modulus:
                continue
            if coprime and gcd(first, p) != 1:
                continue
            found.add((first, second))
    if not found:
        raise ValueError(f"no normalised solution for kind {kind!r} with p={p}, power={power}")
    if len(found) > 1:
        raise ValueError(f"normalisation not unique for kind {kind!r}: {sorted(found)}")
    first, second = found.pop()
    return DiophantineSolution(kind, p, power, first, second, both_signs=second != 0)


def exact_root(n: int, k: int) -> int | None:
    """Integer k-th root of n >= 0, or None."""
    if n < 0:
        return None
    x = round(n ** (1.0 / k))
    for cand in (x - 1, x, x + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def period_polynomial_formula(N: int, r: int, param: int) -> tuple[int, ...]:
    """Coefficients given by the N = 3 (param = c) or N = 4 (param = u) formulas."""
    if N == 3:
        const = (param + 3) * r - 1
        if (r - 1) % 3 or const % 27:
            raise ArithmeticError("N=3 formula is not integral for these inputs")
        return (1, 1, -(r - 1) // 3, -const // 27)
    if N == 4:
        n = (r - 1) // 4
        u = param
        if n % 2 == 0:
            nums = (-(3 * r - 3), (2 * u - 3) * r + 1, r * r - (4 * u * u - 8 * u + 6) * r + 1)
        else:
            nums = ((r + 3), (2 * u + 1) * r + 1, 9 * r * r - (4 * u * u - 8 * u - 2) * r + 1)
        dens = (8, 16, 256)
        if any(a % b for a, b in zip(nums, dens)):
            raise ArithmeticError("N=4 formula is not integral for these inputs")
        return (1, 1) + tuple(a // b for a, b in zip(nums, dens))
    raise ValueError("formula only available for N = 3 or 4")


# ---------------------------------------------------------------------------
# closed forms for N = 2, 3, 4

@dataclass(frozen=True)
class Surd:
    """``(a + b * sqrt(radicand)) / den``."""

    a: int
    b: int
    radicand: int
    den: int

    def numeric(self) -> complex:
        return (self.a + self.b * cmath.sqrt(self.radicand)) / self.den

    def as_int(self) -> int | None:
        root = exact_root(self.radicand, 2)
        if root is None:
            return None
        num = self.a + self.b * root
        return num // self.den if num % self.den == 0 else None


@dataclass
class ClosedForm:
    N: int
    r: int
    case: str
    rational: bool
    roots: list[int] | None = None              # with multiplicity, selected variant
    surd_roots: list[Surd] | None = None
    labelled: bool = False                       # roots[i] is the period of class i
    lemma_variant: str | None = None
    selected_variant: str | None = None
    variants: dict[str, list[int]] = field(default_factory=dict)
    diophantine: dict[str, DiophantineSolution] = field(default_factory=dict)
    factors: list[str] = field(default_factory=list)

    def numeric_roots(self) -> list[complex]:
        if self.roots is not None:
            return [complex(x) for x in self.roots]
        if self.surd_roots is not None:
            return [s.numeric() for s in self.surd_roots]
        raise ValueError("no closed-form roots at this level")


def _int_div(num: int, den: int) -> int | None:
    return num // den if num % den == 0 else None


def _roots_ok(roots, poly: PeriodPolynomial) -> bool:
    if roots is None or any(x is None for x in roots):
        return False
    return sorted(roots) == poly.integer_roots() and len(roots) == poly.N


def _semiprimitive_variants(N: int, sqrt_r: int) -> dict[str, list]:
    # the (N-1)*sqrt(r) root is simple, the other is (N-1)-fold
    even = [_int_div(-1 - (N - 1) * sqrt_r, N)] + [_int_div(-1 + sqrt_r, N)] * (N - 1)
    odd = [_int_div(-1 + (N - 1) * sqrt_r, N)] + [_int_div(-1 - sqrt_r, N)] * (N - 1)
    return {"sm/2 even": even, "sm/2 odd": odd}


def closed_form_periods(N: int, p: int, s: int, m: int,
                        polynomial: PeriodPolynomial | None = None) -> ClosedForm:
    """Closed-form Gaussian periods of order N in GF(p^{sm}) for N in {1, 2, 3, 4}."""
    sm = s * m
    r = p**sm
    if N < 1 or (r - 1) % N:
        raise ValueError(f"N={N} does not divide r-1={r - 1}")
    if polynomial is None:
        polynomial = period_polynomial(build_field(p, sm), N)
    if N == 1:
        return ClosedForm(1, r, "trivial", True, roots=[-1], labelled=True,
                          lemma_variant="trivial", selected_variant="trivial",
                          variants={"trivial": [-1]})
    if N == 2:
        return _closed_form_2(p, sm, r, polynomial)
    if N == 3:
        return _closed_form_3(p, s, m, r, polynomial)
    if N == 4:
        return _closed_form_4(p, s, m, r, polynomial)
    raise CaseMismatch(f"no closed form implemented for N={N}")


def _select(cf: ClosedForm, polynomial: PeriodPolynomial) -> ClosedForm:
    good = [k for k, v in cf.variants.items() if _roots_ok(v, polynomial)]
    if not good:
        raise ArithmeticError(f"no closed-form variant matches the period polynomial ({cf.case})")
    choice = cf.lemma_variant if cf.lemma_variant in good else good[0]
    cf.selected_variant = choice
    cf.roots = list(cf.variants[choice])
    return cf


def _closed_form_2(p, sm, r, polynomial):
    if p % 4 == 1:
        eta0 = Surd(-1, (-1) ** (sm - 1), r, 2)
    elif sm % 2 == 0:
        eta0 = Surd(-1, (-1) ** (sm - 1 + sm // 2), r, 2)
    else:
        eta0 = Surd(-1, (-1) ** ((sm - 1) // 2), -r, 2)
    eta1 = Surd(-2 - eta0.a, -eta0.b, eta0.radicand, 2)
    x0, x1 = eta0.as_int(), eta1.as_int()
    case = f"N=2, p={p % 4} mod 4"
    if x0 is None:
        return ClosedForm(2, r, case, False, surd_roots=[eta0, eta1], labelled=True)
    cf = ClosedForm(2, r, case, True, labelled=True, lemma_variant="lemma",
                    variants={"lemma": [x0, x1]})
    _select(cf, polynomial)
    cf.roots = [x0, x1]  # keep class labelling rather than sorted order
    return cf


def _closed_form_3(p, s, m, r, polynomial):
    sm = s * m
    if p % 3 == 2:
        sqrt_r = exact_root(r, 2)
        variants = _semiprimitive_variants(3, sqrt_r)
        lemma = "sm/2 even" if (sm // 2) % 2 == 0 else "sm/2 odd"
        cf = ClosedForm(3, r, "N=3 (a): p = 2 mod 3", True, lemma_variant=lemma, variants=variants)
        cf.diophantine["c"] = solve_diophantine("c", p, sm)
        return _select(cf, polynomial)
    if p % 3 == 1 and sm % 3:
        raise CaseMismatch("N=3 (b): period polynomial is irreducible over the rationals")
    if p % 3 != 1:
        raise CaseMismatch(f"N=3 needs 3 | r-1; p={p}")
    cbrt_r = exact_root(r, 3)
    cf = ClosedForm(3, r, "N=3 (c): p = 1 mod 3, sm = 0 mod 3", True)
    cf.diophantine["c"] = solve_diophantine("c", p, sm)
    readings = {"4 r^(1/3)": sm // 3}
    if m % 3 == 0:
        readings["4 p^(m/3)"] = m // 3
    for label, power in readings.items():
        sol = solve_diophantine("c1", p, power)
        cf.diophantine[label] = sol
        c1, d1 = sol.first, sol.second
        cf.variants[label] = [
            _int_div(-1 + c1 * cbrt_r, 3),
            _int_div(-2 - (c1 + 9 * d1) * cbrt_r, 6),
            _int_div(-2 - (c1 - 9 * d1) * cbrt_r, 6),
        ]
    cf.lemma_variant = "4 p^(m/3)" if "4 p^(m/3)" in readings else "4 r^(1/3)"
    return _select(cf, polynomial)


def _closed_form_4(p, s, m, r, polynomial):
    sm = s * m
    if p % 4 == 3:
        sqrt_r = exact_root(r, 2)
        variants = _semiprimitive_variants(4, sqrt_r)
        lemma = "sm/2 even" if (sm // 2) % 2 == 0 else "sm/2 odd"
        cf = ClosedForm(4, r, "N=4 (a): p = 3 mod 4", True, lemma_variant=lemma, variants=variants)
        cf.diophantine["u"] = solve_diophantine("u", p, sm)
        return _select(cf, polynomial)
    if p % 4 != 1:
        raise CaseMismatch(f"N=4 needs 4 | r-1; p={p}")
    if sm % 2:
        raise CaseMismatch("N=4 (b): period polynomial is irreducible over the rationals")
    u = solve_diophantine("u", p, sm)
    if sm % 4 == 2:
        sqrt_r = exact_root(r, 2)
        cf = ClosedForm(4, r, "N=4 (c): p = 1 mod 4, sm = 2 mod 4", False)
        cf.diophantine["u"] = u
        cf.factors = [
            f"(4X+1)^2 + 2*{sqrt_r}*(4X+1) - {r} - 2*({u.first})*{sqrt_r}",
            f"(4X+1)^2 - 2*{sqrt_r}*(4X+1) - {r} + 2*({u.first})*{sqrt_r}",
        ]
        cf.surd_roots = _case_c_roots(r, sqrt_r, u.first)
        return cf
    sqrt_r = exact_root(r, 2)
    fourth = exact_root(r, 4)
    cf = ClosedForm(4, r, "N=4 (d): p = 1 mod 4, sm = 0 mod 4", True)
    cf.diophantine["u"] = u
    readings = {"r^(1/2)": sm // 2}
    if m % 2 == 0:
        readings["p^(m/2)"] = m // 2
    for label, power in readings.items():
        sol = solve_diophantine("u1", p, power)
        cf.diophantine[label] = sol
        u1, v1 = sol.first, sol.second
        cf.variants[label] = [
            _int_div(-1 - sqrt_r - 2 * fourth * u1, 4),
            _int_div(-1 - sqrt_r + 2 * fourth * u1, 4),
            _int_div(-1 + sqrt_r - 4 * fourth * v1, 4),
            _int_div(-1 + sqrt_r + 4 * fourth * v1, 4),
        ]
    cf.lemma_variant = "p^(m/2)" if "p^(m/2)" in readings else "r^(1/2)"
    return _select(cf, polynomial)


def _case_c_roots(r, sqrt_r, u):
    # (4X+1) = -sqrt(r) +- sqrt(2r + 2u sqrt(r)) and sqrt(r) +- sqrt(2r - 2u sqrt(r));
    # sqrt(r) is an integer here (sm even), so each root is a single surd over 4
    out = []
    for sign_outer, rad in ((-1, 2 * r + 2 * u * sqrt_r), (1, 2 * r - 2 * u * sqrt_r)):
        for sign_inner in (1, -1):
            out.append(Surd(sign_outer * sqrt_r - 1, sign_inner, rad, 4))
    return out
