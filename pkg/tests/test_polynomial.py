from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cxkit.polynomial import QPolynomial

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)


def test_format():
    assert str(QPolynomial((1, 2, 2, 1))) == "1 + 2*q + 2*q^2 + q^3"
    assert str(QPolynomial((1, 0, 0, 0, 1))) == "1 + q^4"
    assert str(QPolynomial(())) == "0"
    assert str(QPolynomial((0, -1, 3))) == "-q + 3*q^2"


def test_trailing_zeros_stripped():
    assert QPolynomial((1, 0, 0)) == QPolynomial((1,))


def test_evaluate():
    p = QPolynomial((1, 2, 2, 1))
    assert p(2) == 21
    assert p(1) == 6
    assert p(Fraction(1, 2)) == Fraction(21, 8)


def test_evaluate_root_power():
    # q = sqrt(2)^3 = 2*sqrt(2): q^4 = 64
    v = QPolynomial((1, 0, 0, 0, 1)).evaluate_root_power(2, 3)
    assert v.is_rational and v.rational == 65
    # 1 + q at q = 2*sqrt(2)
    v = QPolynomial((1, 1)).evaluate_root_power(2, 3)
    assert (v.rational, v.sqrt_coeff) == (1, 2)


def test_palindromic():
    assert QPolynomial((1, 2, 2, 1)).is_palindromic()
    assert not QPolynomial((1, 3, 2, 1)).is_palindromic()
    assert QPolynomial((1,)).is_palindromic(0)
    assert not QPolynomial((1, 1)).is_palindromic(0)


@given(coeff_lists)
def test_parse_roundtrip(c):
    p = QPolynomial(tuple(c))
    assert QPolynomial.parse(str(p)) == p


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_ring_homomorphism(a, b, q):
    p, r = QPolynomial(tuple(a)), QPolynomial(tuple(b))
    assert (p + r)(q) == p(q) + r(q)
    assert (p * r)(q) == p(q) * r(q)


@given(coeff_lists)
def test_dict_roundtrip(c):
    p = QPolynomial(tuple(c))
    assert QPolynomial.from_dict({int(k): v for k, v in p.to_dict().items()}) == p
