import pytest
from hypothesis import given, settings, strategies as st

from fqtrace import gf
from fqtrace.gf import FieldError, build_field, is_irreducible, smallest_irreducible

SMALL = [(2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (5, 2), (7, 1), (2, 6), (3, 4)]


def _schoolbook(F, x, y):
    # independent product: multiply coefficient lists and reduce by the modulus
    a, b = F.coeffs(x), F.coeffs(y)
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % F.p
    f = F.modulus
    for d in range(len(prod) - 1, F.k - 1, -1):
        c = prod[d]
        if c:
            for i in range(F.k + 1):
                prod[d - F.k + i] = (prod[d - F.k + i] - c * f[i]) % F.p
    return F.from_coeffs(prod[:F.k])


def test_known_moduli():
    assert build_field(3, 2).modulus == (1, 0, 1)          # x^2 + 1
    assert build_field(2, 6).modulus == (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1
    assert build_field(2, 1).modulus == (0, 1)


def test_smallest_irreducible_is_smallest():
    for p, k in [(2, 3), (3, 2), (5, 2), (2, 4)]:
        f = smallest_irreducible(p, k)
        assert is_irreducible(f, p)
        code = sum(c * p**i for i, c in enumerate(f[:-1]))
        for smaller in range(code):
            g = [(smaller // p**i) % p for i in range(k)] + [1]
            assert not is_irreducible(g, p)


def test_generator_is_primitive_and_smallest():
    for p, k in SMALL:
        F = build_field(p, k)
        assert len(set(F.exp.tolist())) == F.order
        for g in range(1, F.generator + 1):
            seen, x = set(), 1
            for _ in range(F.order):
                x = _schoolbook(F, x, g)
                seen.add(x)
            assert (len(seen) == F.order) == (g == F.generator)


def test_f9_generator_and_log():
    F = build_field(3, 2)
    assert F.generator == 4
    assert F.dlog(2) == 4


@pytest.mark.parametrize("p,k", SMALL[:7])
def test_mul_matches_schoolbook_exhaustively(p, k):
    F = build_field(p, k)
    for x in range(F.size):
        for y in range(F.size):
            assert F.mul(x, y) == _schoolbook(F, x, y)


@pytest.mark.parametrize("p,k", SMALL)
def test_add_matches_digits(p, k):
    F = build_field(p, k)
    for x in range(0, F.size, max(1, F.size // 16)):
        for y in range(F.size):
            want = F.from_coeffs([(a + b) % p for a, b in zip(F.coeffs(x), F.coeffs(y))])
            assert F.add(x, y) == want


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_field_axioms(pk, data):
    F = build_field(*pk)
    x, y, z = (F.element(data.draw(st.integers(0, F.size - 1))) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x
    assert x * y == y * x
    if x:
        assert x * x.inverse() == F.one
        assert x ** F.order == F.one


def test_inverse_of_zero():
    F = build_field(5, 1)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_trace_is_additive_and_lands_in_prime_field():
    for p, k in SMALL:
        F = build_field(p, k)
        tr = F.trace_table(1)
        assert tr.max() < p
        for x in range(0, F.size, max(1, F.size // 20)):
            for y in range(0, F.size, max(1, F.size // 20)):
                assert tr[F.add(x, y)] == (tr[x] + tr[y]) % p


def test_subfield_trace_and_membership():
    F = build_field(2, 6)
    for d in (1, 2, 3):
        mask = F.subfield_mask(d)
        assert mask.sum() == 2**d
        assert all(mask[F.trace_table(d)])
        x = F.element(37)
        assert gf.is_in_subfield(gf.subfield_trace(x, d), d)
    with pytest.raises(FieldError):
        F.trace_table(4)


def test_module_level_ops():
    F = build_field(7, 1)
    a, b = F.element(3), F.element(5)
    assert gf.add(a, b).value == 1
    assert gf.mul(a, b).value == 1
    assert gf.inv(a).value == 5
    assert gf.pow(a, 6).value == 1
    assert F.gen ** gf.discrete_log(a) == a
    assert gf.absolute_trace(a) == 3


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        build_field(3, 1).element(1) + build_field(5, 1).element(1)


def test_invalid_parameters():
    with pytest.raises(FieldError):
        build_field(4, 1)
    with pytest.raises(FieldError):
        build_field(2, 30)
