import random
from fractions import Fraction

import pytest

from gmnrep.cyclo import (
    CycRat,
    all_roots,
    cyclotomic_polynomial,
    root_index,
    root_of_unity,
    scalar_inverse,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_basic():
    assert root_of_unity(1, 1) == 1
    z = root_of_unity(2, 2)
    assert z * z == 1
    assert z != 1
    # canonical form identifies zeta with -1 for m=2
    assert z.coeffs == (Fraction(-1), Fraction(0))
    w = root_of_unity(4, 3)  # zeta^2 for m=4
    assert w * w == 1
    assert w == -CycRat.one(4)


def test_root_of_unity_range_errors():
    with pytest.raises(ValueError):
        root_of_unity(3, 0)
    with pytest.raises(ValueError):
        root_of_unity(3, 4)


def test_root_multiplication_index_law():
    for m in (1, 2, 3, 4, 6):
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                expected = root_of_unity(m, ((k + l - 2) % m) + 1)
                assert root_of_unity(m, k) * root_of_unity(m, l) == expected


def test_roots_are_distinct():
    for m in (1, 2, 3, 4, 5, 6):
        roots = all_roots(m)
        assert len(set(roots)) == m
        for k, r in enumerate(roots, start=1):
            assert root_index(r) == k
            assert r ** m == 1


def _random_elements(m, count, rng):
    out = []
    for _ in range(count):
        out.append(CycRat(m, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m)]))
    return out


def test_ring_axioms_on_random_triples():
    rng = random.Random(20240817)
    for m in (1, 2, 3, 4, 6):
        triples = zip(*(iter(_random_elements(m, 30, rng)),) * 3)
        for a, b, c in triples:
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert a + b == b + a
            assert a + (-a) == 0
            assert a - b == a + (-b)


def test_conjugate_is_ring_involution():
    rng = random.Random(7)
    for m in (1, 2, 3, 4, 6):
        elems = _random_elements(m, 12, rng)
        for a in elems:
            assert a.conjugate().conjugate() == a
        for a, b in zip(elems[::2], elems[1::2]):
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_conjugate_examples():
    for m in (1, 2, 3, 4):
        r = CycRat.from_rational(m, Fraction(5, 3))
        assert r.conjugate() == r
    for m in (3, 4, 6):
        z = root_of_unity(m, 2)
        assert z.conjugate() == z ** (m - 1)
    assert root_of_unity(2, 2).conjugate() == root_of_unity(2, 2)


def test_scalar_inverse():
    for m in (1, 2, 3, 4):
        z = root_of_unity(m, m)
        a = Fraction(1, 2) * z
        assert a * scalar_inverse(a) == 1
        assert scalar_inverse(a) == 2 * z ** (m - 1)
        three = CycRat.from_rational(m, 3)
        assert scalar_inverse(three) == Fraction(1, 3)
    with pytest.raises(ValueError):
        scalar_inverse(CycRat.zero(3))


def test_general_field_inverse():
    rng = random.Random(99)
    for m in (2, 3, 4, 6):
        for a in _random_elements(m, 10, rng):
            if not a:
                continue
            assert a * a.inverse() == 1
            assert (1 / a) * a == 1


def test_to_complex_values():
    assert CycRat.one(5).to_complex() == pytest.approx(1.0)
    assert root_of_unity(2, 2).to_complex() == pytest.approx(-1.0)
    z4 = root_of_unity(4, 2).to_complex()
    assert z4.real == pytest.approx(0.0, abs=1e-12)
    assert z4.imag == pytest.approx(1.0, abs=1e-12)


def test_to_complex_is_ring_homomorphism():
    rng = random.Random(4242)
    for m in (2, 3, 4, 6):
        elems = _random_elements(m, 10, rng)
        for a, b in zip(elems[::2], elems[1::2]):
            lhs = (a * b).to_complex()
            rhs = a.to_complex() * b.to_complex()
            assert abs(lhs - rhs) < 1e-12
            assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12


def test_pow_and_bool():
    z = root_of_unity(6, 2)
    assert z ** 0 == 1
    assert z ** 6 == 1
    assert z ** -1 == z ** 5
    assert not CycRat.zero(6)
    assert z


def test_mixed_order_rejected():
    with pytest.raises(ValueError):
        root_of_unity(2, 1) + root_of_unity(3, 1)
    with pytest.raises(ValueError):
        root_of_unity(2, 1) * root_of_unity(3, 1)
