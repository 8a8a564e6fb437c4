"""Trace codes C_q(m, e) over F_q + uF_q and their Lee weight spectra.

Coordinates are indexed by the defining set L = C_0^{(e,r)} + uF_r in the
fixed order ``(i, j) -> alpha^{e i} + u * elem(j)`` (row-major), where
``elem(0) = 0`` and ``elem(j) = alpha^{j-1}``.  A codeword is stored as two
arrays of F_r codes (the ``a`` and ``b`` components of each ``a + ub``), both
of which must lie in the subfield F_q.

:func:`brute_force_spectrum` is the enumeration oracle: it evaluates every
codeword literally, Gray-maps it and counts nonzero symbols.  It does not use
any of the character-sum identities that the predictors in
:mod:`fqtrace.theory` rely on.
"""
from __future__ import annotations

import hashlib
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .gf import Field, FieldError, is_prime
from .ring import RingElement, RingExtension

DEFAULT_BUDGET = 10**9
_CHUNK_ELEMENTS = 1 << 20  # coordinates held in memory per evaluation block


class InvalidSpec(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CodeSpec:
    p: int
    s: int
    m: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidSpec(f"p={self.p} must be prime")
        if self.s < 1:
            raise InvalidSpec("s must be a positive integer")
        if self.m < 1:
            raise InvalidSpec("m must be a positive integer")
        if self.e < 1 or (self.q - 1) % self.e:
            raise InvalidSpec(f"e must divide q-1 (e={self.e}, q-1={self.q - 1})")

    @classmethod
    def from_q(cls, q: int, m: int, e: int) -> "CodeSpec":
        for p in range(2, q + 1):
            if q % p == 0:
                s, t = 0, q
                while t % p == 0:
                    t //= p
                    s += 1
                if t != 1:
                    raise InvalidSpec(f"q={q} is not a prime power")
                return cls(p, s, m, e)
        raise InvalidSpec(f"q={q} is not a prime power")

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def r(self) -> int:
        return self.q**self.m

    @property
    def N(self) -> int:
        return gcd(self.e, self.m)

    @property
    def n(self) -> int:
        return (self.r * self.r - self.r) // self.e

    @property
    def gray_length(self) -> int:
        return 2 * self.n

    @property
    def dimension(self) -> int:
        return 2 * self.m

    @property
    def work(self) -> int:
        """Coordinate evaluations needed for the full spectrum."""
        return self.r * self.r * self.n

    def ring(self) -> RingExtension:
        return RingExtension(self.p, self.s, self.m)

    def params(self) -> dict:
        return {"p": self.p, "s": self.s, "m": self.m, "e": self.e, "q": self.q,
                "r": self.r, "n": self.n, "N": self.N}


# ---------------------------------------------------------------------------
# defining set and evaluation

def field_index_codes(F) -> np.ndarray:
    """``elem(j)`` for all j: 0 first, then alpha^0, alpha^1, ..."""
    return np.concatenate(([0], F.exp)).astype(np.int64)


@dataclass(frozen=True)
class DefiningSet:
    spec: CodeSpec
    t: np.ndarray   # C_0^{(e,r)}: alpha^{e i}
    tp: np.ndarray  # F_r in field-index order

    def __len__(self):
        return len(self.t) * len(self.tp)

    def units(self) -> np.ndarray:
        """Unit parts of all coordinates, flattened row-major."""
        return np.repeat(self.t, len(self.tp))

    def nilpotents(self) -> np.ndarray:
        return np.tile(self.tp, len(self.t))

    def elements(self) -> list[RingElement]:
        R = self.spec.ring()
        return [R.element(int(a), int(b)) for a, b in zip(self.units(), self.nilpotents())]


def build_defining_set(spec: CodeSpec) -> DefiningSet:
    F = spec.ring().field
    t = F.exp[spec.e * np.arange((spec.r - 1) // spec.e)].astype(np.int64)
    return DefiningSet(spec, t, field_index_codes(F))


@dataclass(frozen=True)
class Codeword:
    """Word over F_q + uF_q: coordinate k is ``a[k] + u b[k]`` (F_r codes)."""

    field: Field
    a: np.ndarray
    b: np.ndarray

    def __len__(self):
        return len(self.a)


def _lee_weights(F, trq, alphas, betas, t, tp) -> np.ndarray:
    """Lee weights of ev(alpha + u beta) for a batch, evaluated coordinate by coordinate.

    The product (alpha + u beta)(t + u t') = alpha t + u (alpha t' + beta t)
    is formed explicitly for every coordinate before tracing.
    """
    alphas = np.asarray(alphas, dtype=np.int64)
    betas = np.asarray(betas, dtype=np.int64)
    out = np.zeros(len(alphas), dtype=np.int64)
    rows = max(1, _CHUNK_ELEMENTS // max(1, len(alphas) * len(tp)))
    atp = F.mul(alphas[:, None], tp[None, :])                    # (B, r)
    for lo in range(0, len(t), rows):
        tt = t[lo:lo + rows]
        ta = trq[F.mul(alphas[:, None], tt[None, :])]               # (B, rows)
        bt = F.mul(betas[:, None], tt[None, :])                     # (B, rows)
        tb = trq[F.add(atp[:, None, :], bt[:, :, None])]            # (B, rows, r)
        gray_hi = F.add(ta[:, :, None], tb)                         # a + b block
        out += np.count_nonzero(tb, axis=(1, 2))
        out += np.count_nonzero(gray_hi, axis=(1, 2))
    return out


def evaluate(a: RingElement, L: DefiningSet) -> Codeword:
    """``(Tr(a x))_{x in L}`` as a word over F_q + uF_q."""
    spec = L.spec
    R = spec.ring()
    F = R.field
    if a.field != F:
        raise FieldError("element is not in the extension ring of this code")
    trq = F.trace_table(spec.s)
    t, tp = L.units(), L.nilpotents()
    prod_a = F.mul(a.a.value, t)
    prod_b = F.add(F.mul(a.a.value, tp), F.mul(a.b.value, t))
    word = Codeword(F, trq[prod_a], trq[prod_b])
    sub = F.subfield_mask(spec.s)
    if not (sub[word.a].all() and sub[word.b].all()):
        raise ArithmeticError("trace left the base ring")
    return word


def gray_map(w: Codeword) -> np.ndarray:
    """``a + ub -> (b, a + b)``, blockwise: all b-components first."""
    return np.concatenate((np.asarray(w.b), w.field.add(w.a, w.b)))


def lee_weight(w: Codeword) -> int:
    """``w_H(b) + w_H(a + b)``; computed per symbol, not through the Gray image."""
    b = np.asarray(w.b)
    apb = w.field.add(w.a, w.b)
    return int(np.count_nonzero(b)) + int(np.count_nonzero(apb))


def hamming_weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


# ---------------------------------------------------------------------------
# spectra

@dataclass
class WeightDistribution:
    counts: dict[int, int]

    def __post_init__(self):
        self.counts = {int(w): int(f) for w, f in sorted(self.counts.items()) if f}

    def __eq__(self, other):
        return isinstance(other, WeightDistribution) and self.counts == other.counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_distance(self) -> int | None:
        nz = [w for w in self.counts if w]
        return min(nz) if nz else None

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w]

    def enumerator(self) -> list[int]:
        """Coefficients A_0, A_1, ..., A_max of the weight enumerator."""
        top = max(self.counts) if self.counts else 0
        out = [0] * (top + 1)
        for w, f in self.counts.items():
            out[w] = f
        return out

    def enumerator_str(self) -> str:
        terms = []
        for w, f in self.counts.items():
            terms.append(str(f) if w == 0 else f"{f}z^{w}")
        return "+".join(terms)

    def to_list(self) -> list[dict]:
        return [{"weight": w, "frequency": f} for w, f in self.counts.items()]


@dataclass
class SpectrumResult:
    spec: CodeSpec
    distribution: WeightDistribution
    codeword_count: int
    strata: dict[str, dict[int, int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "params": self.spec.params(),
            "gray_length": self.spec.gray_length,
            "dimension": self.spec.dimension,
            "distribution": self.distribution.to_list(),
            "min_distance": self.distribution.min_distance,
            "codeword_count": self.codeword_count,
        }


def stratum_of(alpha: int, beta: int, F, N: int) -> str:
    if alpha:
        return "unit"
    if beta:
        return f"class {int(F.log[beta]) % N}"
    return "zero"


def _spectrum_chunk(spec: CodeSpec, start: int, stop: int):
    R = spec.ring()
    F = R.field
    L = build_defining_set(spec)
    trq = F.trace_table(spec.s)
    elem = field_index_codes(F)
    hist: Counter = Counter()
    strata: dict[str, Counter] = {}
    digests = set()
    batch = max(1, _CHUNK_ELEMENTS // max(1, spec.n))
    for lo in range(start, stop, batch):
        idx = np.arange(lo, min(stop, lo + batch))
        alphas = elem[idx // spec.r]
        betas = elem[idx % spec.r]
        weights = _lee_weights(F, trq, alphas, betas, L.t, L.tp)
        for al, be, w in zip(alphas.tolist(), betas.tolist(), weights.tolist()):
            hist[w] += 1
            strata.setdefault(stratum_of(al, be, F, spec.N), Counter())[w] += 1
        digests.update(_digests(F, trq, alphas, betas, L))
    return hist, strata, digests


def _digests(F, trq, alphas, betas, L: DefiningSet) -> list[bytes]:
    # codeword identity: the a-block depends only on the row i, the b-block on (i, j)
    ta = trq[F.mul(alphas[:, None], L.t[None, :])]
    tb = trq[F.add(F.mul(alphas[:, None], L.tp[None, :])[:, None, :],
                   F.mul(betas[:, None], L.t[None, :])[:, :, None])]
    out = []
    for k in range(len(alphas)):
        h = hashlib.blake2b(digest_size=16)
        h.update(ta[k].astype(np.int32).tobytes())
        h.update(tb[k].astype(np.int32).tobytes())
        out.append(h.digest())
    return out


def brute_force_spectrum(spec: CodeSpec, budget: int = DEFAULT_BUDGET,
                         workers: int | None = 1) -> SpectrumResult:
    """Exact Lee weight distribution by evaluating all r^2 codewords.

    ``workers`` > 1 partitions the a-range over processes; the merged
    histogram does not depend on the partition.
    """
    if spec.work > budget:
        raise BudgetExceeded(
            f"full enumeration needs {spec.work} coordinate evaluations (> budget {budget}); "
            "use representative_spectrum_check")
    total = spec.r * spec.r
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, total))
    bounds = np.linspace(0, total, workers + 1).astype(int).tolist()
    ranges = [(bounds[k], bounds[k + 1]) for k in range(workers) if bounds[k] < bounds[k + 1]]
    if workers == 1:
        parts = [_spectrum_chunk(spec, lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_spectrum_chunk, [spec] * len(ranges),
                                  [lo for lo, _ in ranges], [hi for _, hi in ranges]))
    hist: Counter = Counter()
    strata: dict[str, Counter] = {}
    digests = set()
    for h, st, dg in parts:
        hist.update(h)
        for k, c in st.items():
            strata.setdefault(k, Counter()).update(c)
        digests |= dg
    ordered = {k: dict(sorted(strata[k].items())) for k in sorted(strata, key=_stratum_key)}
    return SpectrumResult(spec, WeightDistribution(dict(hist)), len(digests), ordered)


def _stratum_key(label: str):
    if label == "zero":
        return (0, 0)
    if label == "unit":
        return (1, 0)
    return (2, int(label.split()[1]))


def representative_spectrum_check(spec: CodeSpec) -> list[tuple[str, int]]:
    """Lee weight of one codeword per stratum: a = 1 and a = u alpha^i, i < N."""
    F = spec.ring().field
    L = build_defining_set(spec)
    trq = F.trace_table(spec.s)
    alphas = [1] + [0] * spec.N
    betas = [0] + [int(F.exp[i]) for i in range(spec.N)]
    out = []
    for k, (al, be) in enumerate(zip(alphas, betas)):
        w = int(_lee_weights(F, trq, [al], [be], L.t, L.tp)[0])
        out.append(("unit" if k == 0 else f"class {k - 1}", w))
    return out
