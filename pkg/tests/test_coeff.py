import random
from fractions import Fraction

import pytest

from countqm.coeff import (
    INT_DOMAIN,
    INT_ZERO,
    RAT_DOMAIN,
    RAT_ZERO,
    CoefficientError,
    IntCode,
    RatCode,
    format_coeff,
    int_add,
    int_equal,
    int_size,
    int_sub,
    nat_from_bits,
    nat_to_bits,
    parse_coeff,
    rat_add,
    rat_equal,
    rat_literal_length,
    rat_size,
    rat_sub,
)


def test_nat_bits_round_trip():
    assert nat_from_bits("0") == 0
    assert nat_from_bits("111") == 7
    assert nat_to_bits(7) == "111"
    with pytest.raises(CoefficientError):
        nat_from_bits("011")
    with pytest.raises(CoefficientError):
        nat_from_bits("")


def test_int_add_examples():
    assert int_add(IntCode.from_literal("+101"),
                   IntCode.from_literal("-11")).literal() == "+10"
    assert int_add(INT_ZERO, INT_ZERO) is INT_ZERO
    s = int_add(IntCode.from_literal("+1"), IntCode.from_literal("+1"))
    assert s.literal() == "+10"
    # the size exceeds max of the input sizes by one
    assert int_size(s) == 3 == max(2, 2) + 1


def test_int_sub_examples():
    x = IntCode.from_literal("+11")
    assert int_sub(x, x).value == 0
    assert int_sub(INT_ZERO, IntCode.from_literal("+111")).literal() == "-111"
    assert int_sub(IntCode.from_literal("-101"),
                   IntCode.from_literal("+1")).literal() == "-110"


def test_int_equal_identifies_zero_codes():
    assert int_equal(IntCode(1, 0), INT_ZERO)
    assert int_equal(IntCode(-1, 0), IntCode(1, 0))
    assert not int_equal(IntCode.from_literal("+10"),
                         IntCode.from_literal("-10"))
    assert int_equal(IntCode.from_literal("+101"),
                     IntCode.from_literal("+101"))


def test_int_size_examples():
    assert int_size(IntCode.from_literal("-111")) == 4
    assert IntCode.from_literal("-111").value == -7
    assert int_size(INT_ZERO) == 0
    assert int_size(IntCode.from_literal("+10")) == 3
    assert int_size(IntCode(1, 0)) == 1   # "+0" is one sign plus one digit


def test_rat_add_examples():
    a = RatCode.from_literal("+1/1/10")   # 3/2
    s = rat_add(a, a)
    assert s.literal() == "+11/0/100"     # 3 + 0/4, denominator 2*2
    x = RatCode.from_literal("-11/10/101")
    assert rat_add(RAT_ZERO, x) is x
    h = RatCode.from_literal("+0/1/10")
    assert rat_add(h, h).literal() == "+1/0/100"


def test_rat_add_denominator_is_product():
    rng = random.Random(5)
    for _ in range(300):
        x1 = RatCode(rng.choice((1, -1)), rng.randint(0, 9), 0, 1)
        d1, d2 = rng.randint(2, 30), rng.randint(2, 30)
        x1 = RatCode(x1.sign, x1.k, rng.randint(0, d1 - 1), d1)
        x2 = RatCode(rng.choice((1, -1)), rng.randint(0, 9),
                     rng.randint(0, d2 - 1), d2)
        out = rat_add(x1, x2)
        if out.sign != 0:
            assert out.n == d1 * d2
        assert out.value == x1.value + x2.value


def test_rat_sub_examples():
    x = RatCode.from_literal("+11/10/101")
    assert rat_sub(x, x) is RAT_ZERO
    assert rat_sub(RatCode.from_literal("+10/1/10"),
                   RatCode.from_literal("+1/0/10")).literal() == "+1/10/100"
    assert rat_sub(RAT_ZERO,
                   RatCode.from_literal("+1/1/10")).literal() == "-1/1/10"


def test_rat_equal_examples():
    assert rat_equal(RatCode.from_literal("-11/10/101"),
                     RatCode.from_literal("-11/100/1010"))
    assert RatCode.from_literal("-11/10/101").value == Fraction(-17, 5)
    assert rat_equal(RatCode.from_literal("+0/1/10"),
                     RatCode.from_literal("+0/10/100"))
    assert not rat_equal(RatCode.from_literal("+0/1/10"),
                         RatCode.from_literal("+0/1/11"))


def test_rat_size_examples():
    assert rat_size(RatCode.from_literal("-11/10/101")) == 11
    assert rat_size(RAT_ZERO) == 0
    assert rat_size(RatCode.from_literal("+1/1/10")) == 8


def test_size_against_stored_length():
    # the size and the stored word length agree within a factor of two
    rng = random.Random(11)
    for _ in range(500):
        den = rng.randint(1, 1 << 20)
        x = RatCode(rng.choice((1, -1)), rng.randint(0, 1 << 20),
                    rng.randint(0, den - 1), den)
        lit = rat_literal_length(x)
        assert lit <= rat_size(x) <= 2 * lit


def test_parse_coeff_examples():
    c = parse_coeff("-3/2/5", "rat")
    assert c.value == Fraction(-17, 5)
    assert parse_coeff("0", "int") is INT_ZERO
    with pytest.raises(CoefficientError):
        parse_coeff("-2/3/2", "rat")
    with pytest.raises(CoefficientError):
        parse_coeff("+1/1/0", "rat")
    with pytest.raises(CoefficientError):
        parse_coeff("007", "int")
    with pytest.raises(CoefficientError):
        parse_coeff("1/2/3", "rat")   # rationals need an explicit sign


def test_format_coeff_examples():
    assert format_coeff(INT_ZERO) == "0"
    assert format_coeff(RatCode.from_value(Fraction(17, 5))) == "+3/2/5"
    assert format_coeff(IntCode.from_value(-7)) == "-7"


def test_format_parse_round_trip():
    rng = random.Random(3)
    for _ in range(400):
        i = IntCode.from_value(rng.randint(-10**12, 10**12))
        assert int_equal(parse_coeff(format_coeff(i), "int"), i)
        den = rng.randint(1, 10**6)
        r = RatCode(rng.choice((1, -1)), rng.randint(0, 10**6),
                    rng.randint(0, den - 1), den)
        assert rat_equal(parse_coeff(format_coeff(r), "rat"), r)


def test_arithmetic_matches_reference_and_size_bounds():
    rng = random.Random(17)
    for _ in range(3000):
        a = rng.randint(-2**40, 2**40)
        b = rng.randint(-2**40, 2**40)
        xa, xb = IntCode.from_value(a), IntCode.from_value(b)
        assert int_add(xa, xb).value == a + b
        assert int_sub(xa, xb).value == a - b
        assert int_size(int_add(xa, xb)) <= max(int_size(xa), int_size(xb)) + 1
    for _ in range(3000):
        d1, d2 = rng.randint(1, 999), rng.randint(1, 999)
        r1 = RatCode(rng.choice((1, -1)), rng.randint(0, 999),
                     rng.randint(0, d1 - 1), d1)
        r2 = RatCode(rng.choice((1, -1)), rng.randint(0, 999),
                     rng.randint(0, d2 - 1), d2)
        s = rat_add(r1, r2)
        assert s.value == r1.value + r2.value
        assert rat_size(s) <= rat_size(r1) + rat_size(r2)
        d = rat_sub(r1, r2)
        assert d.value == r1.value - r2.value
        assert rat_size(d) <= rat_size(r1) + rat_size(r2)


def test_equivalence_is_scaling_invariant():
    rng = random.Random(23)
    for _ in range(300):
        den = rng.randint(1, 99)
        x = RatCode(rng.choice((1, -1)), rng.randint(0, 99),
                    rng.randint(0, den - 1), den)
        k = rng.randint(2, 9)
        y = RatCode(x.sign, x.k, x.m * k, x.n * k)
        assert rat_equal(x, y)


def test_domain_contract():
    for domain in (INT_DOMAIN, RAT_DOMAIN):
        zero = domain.zero
        assert domain.is_zero(zero)
        assert domain.size(zero) == 0
        five = domain.from_value(5)
        assert domain.value(domain.neg(five)) == -5
        assert domain.equal(domain.add(five, domain.neg(five)), zero)
        assert domain.parse(domain.format(five)).value == domain.value(five)
