from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qfoulkes.qpoly import NotDivisible, QPoly, exact_divide, q_factorial, q_int

from strategies import qpolys

ints = st.integers(-6, 6)


def naive_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@given(qpolys(), qpolys())
def test_multiplication_matches_schoolbook(a, b):
    assert (a * b).coeffs == QPoly(naive_mul(a.coeffs, b.coeffs)).coeffs


@given(qpolys(), qpolys(), qpolys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPoly()


@given(qpolys(), st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, v):
    b = QPoly([1, v, 2])
    assert (a * b).eval(v) == a.eval(v) * b.eval(v)
    assert (a + b).eval(v) == a.eval(v) + b.eval(v)


@given(qpolys())
def test_divide_by_one_minus_q_round_trip(a):
    p = a * QPoly([1, -1])
    assert p.divide_by_one_minus_q() * QPoly([1, -1]) == p
    assert p.divide_by_one_minus_q() == a


def test_not_divisible():
    with pytest.raises(NotDivisible):
        QPoly([1, 1]).divide_by_one_minus_q()
    with pytest.raises(NotDivisible):
        exact_divide(QPoly([1, 0, 1]), QPoly([1, 1]))


@given(qpolys(), qpolys(lo=1, hi=4, max_len=3, min_len=1))
def test_exact_divide(a, d):
    assert exact_divide(a * d, d) == a


def test_rational_coefficients_and_large_integers():
    half = QPoly([Fraction(1, 2), Fraction(3, 4)])
    assert (half * 4).coeffs == (2, 3)
    big = QPoly([10**40, -(10**39)])
    assert (big * big)[0] == 10**80
    assert (big * big)[2] == 10**78


def test_q_integers():
    assert q_int(3) == QPoly([1, 1, 1])
    assert q_factorial(3) == QPoly([1, 2, 2, 1])
    assert q_factorial(5).at_one() == 120
    assert q_factorial(0) == QPoly([1])


@given(qpolys(), st.integers(1, 4))
def test_substitute_power(a, k):
    assert a.substitute_power(k).eval(2) == a.eval(2**k)


@given(qpolys())
def test_json_round_trip(a):
    assert QPoly.from_json(a.to_json()) == a


def test_string_form():
    assert str(QPoly([1, 2, 0, 1])) == "1 + 2*q + q^3"
    assert str(QPoly([0, -1])) == "-q"
    assert str(QPoly()) == "0"


def test_natural_and_degree():
    assert QPoly([1, 0, 2]).is_natural()
    assert not QPoly([1, -1]).is_natural()
    assert not QPoly([Fraction(1, 2)]).is_natural()
    assert QPoly().degree == -1
    assert QPoly([0, 0, 3]).degree == 2


def test_immutable_and_picklable():
    import pickle
    a = QPoly([1, 2])
    with pytest.raises(AttributeError):
        a.nums = (3,)
    assert pickle.loads(pickle.dumps(a)) == a
    assert hash(QPoly([1, 2])) == hash(a)


def test_reversal():
    assert QPoly([1, 2]).reversed_in(3) == QPoly([0, 0, 2, 1])
