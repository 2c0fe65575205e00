import random
from itertools import product

import pytest

from ccodes import (
    IntPolynomial,
    NonExactDivision,
    poly_add,
    poly_div_exact,
    poly_mul,
    poly_scale,
    residue_product,
)

P = IntPolynomial

# === IntPolynomial basics ===


def test_trailing_zeros_stripped():
    assert P([1, 0, 2, 0, 0]).coeffs == (1, 0, 2)
    assert P([0, 0, 0]).coeffs == ()
    assert P().coeffs == ()


def test_degree():
    assert P().degree == -1
    assert P([5]).degree == 0
    assert P([0, 0, 1]).degree == 2


def test_add_mul_scale():
    one_plus_z = P([1, 1])
    assert poly_mul(one_plus_z, one_plus_z) == P([1, 2, 1])
    assert poly_add(P([1, 2]), P([0, -2, 3])) == P([1, 0, 3])
    assert poly_scale(P([1, 0, 2]), 3) == P([3, 0, 6])
    assert poly_scale(P([1, 0, 2]), 0) == P()
    assert poly_mul(P([1, 2]), P()) == P()
    assert 2 * P([1, 1]) == P([2, 2])


def test_sub_neg():
    assert P([3, 1]) - P([1, 1]) == P([2])
    assert -P([1, -2]) == P([-1, 2])


def test_evaluate():
    w = P([1, 0, 2, 0, 1])
    assert w(1) == 4
    assert w(-1) == 4
    assert w(2) == 1 + 8 + 16
    assert P()(5) == 0


def test_equality_and_hash():
    assert P([1, 2]) == P((1, 2, 0))
    assert hash(P([1, 2])) == hash(P((1, 2)))
    assert P([1]) != P([2])


def test_pretty():
    assert P([1, 0, 2, 0, 1]).pretty() == "1 + 2z^2 + z^4"
    assert P().pretty() == "0"
    assert P([0, 1]).pretty() == "z"
    assert P([1, -1]).pretty() == "1 - z"
    assert P([-2, 0, 3]).pretty() == "-2 + 3z^2"
    assert P([0, 1]).pretty("x") == "x"


# === exact division ===


def test_div_exact_examples():
    assert poly_div_exact(P([1, 0, -1]), P([1, 1])) == P([1, -1])
    assert poly_div_exact(P([2, 4]), 2) == P([1, 2])
    z1 = P([1, 1])
    pow5 = z1 * z1 * z1 * z1 * z1
    combined = pow5 + 4 * P([1, 0, 0, 0, 0, 1])
    quotient = poly_div_exact(poly_div_exact(combined, z1), 5)
    assert quotient == P([1, 0, 2, 0, 1])


def test_div_exact_failures():
    with pytest.raises(NonExactDivision):
        poly_div_exact(P([1, 1]), P([1, 2]))  # leading coefficient 2 does not divide
    with pytest.raises(NonExactDivision):
        poly_div_exact(P([1, 1, 1]), P([1, 1]))  # remainder
    with pytest.raises(NonExactDivision):
        poly_div_exact(P([3]), 2)
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(P([1]), P())


def test_div_exact_roundtrip():
    rng = random.Random(3)
    for _ in range(100):
        a = P([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        b = P([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
        if not b:
            continue
        assert poly_div_exact(a * b, b) == a


# === residue_product ===


def brute_slots(coeffs, n):
    k = len(coeffs)
    slots = [[0] * (k + 1) for _ in range(n)]
    for bits in product((0, 1), repeat=k):
        s = sum(a * c for a, c in zip(coeffs, bits)) % n
        slots[s][sum(bits)] += 1
    return [P(row) for row in slots]


def test_residue_product_two_coefficients():
    rp = residue_product([1, 2], 3)
    assert rp.slot(0) == P([1, 0, 1])
    assert rp.slot(1) == P([0, 1])
    assert rp.slot(2) == P([0, 1])


def test_residue_product_empty_fold():
    rp = residue_product([], 5)
    assert rp.slot(0) == P([1])
    assert all(not rp.slot(r) for r in range(1, 5))


def test_residue_product_vt_shape():
    rp = residue_product([1, 2, 3, 4], 5)
    assert rp.slot(0) == P([1, 0, 2, 0, 1])


def test_residue_product_zero_coefficients():
    # every zero coefficient just doubles each slot by (1 + z)
    rp = residue_product([0, 0, 0], 4)
    assert rp.slot(0) == P([1, 3, 3, 1])
    assert all(not rp.slot(r) for r in range(1, 4))


def test_residue_product_mass_and_oracle():
    rng = random.Random(4)
    for _ in range(40):
        k = rng.randint(0, 9)
        n = rng.randint(1, 12)
        coeffs = [rng.randint(-20, 20) for _ in range(k)]
        rp = residue_product(coeffs, n)
        assert sum(p(1) for p in rp.slots) == 2**k
        expected = brute_slots(coeffs, n)
        assert list(rp.slots) == expected


def test_residue_product_order_invariant():
    rng = random.Random(5)
    for _ in range(20):
        k = rng.randint(1, 8)
        n = rng.randint(1, 10)
        coeffs = [rng.randint(-15, 15) for _ in range(k)]
        shuffled = coeffs[:]
        rng.shuffle(shuffled)
        assert residue_product(coeffs, n) == residue_product(shuffled, n)


def test_residue_product_reduces_mod_n():
    assert residue_product([-2, 5], 3) == residue_product([1, 2], 3)


def test_residue_product_bad_modulus():
    with pytest.raises(ValueError):
        residue_product([1], 0)


def test_residue_slot_range_check():
    rp = residue_product([1], 2)
    with pytest.raises(ValueError):
        rp.slot(2)
    with pytest.raises(ValueError):
        rp.slot(-1)
