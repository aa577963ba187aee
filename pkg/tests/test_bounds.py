from decimal import Decimal
from fractions import Fraction

import pytest

from abundancy.bounds import BoundInterval, enclose, fraction_in, interval_to_fractions


def test_enclose_basic_log():
    b = enclose(lambda ctx: ctx.log(ctx.mpf(3)), 30)
    assert b.lo < b.hi
    assert b.width <= Fraction(1, 10**28)
    assert Fraction(10986, 10000) < b.lo  # ln 3 = 1.0986...
    assert b.hi < Fraction(10987, 10000)


def test_width_invariant_across_precisions():
    for digits in (10, 25, 50, 100):
        b = enclose(lambda ctx: ctx.exp(ctx.mpf(1)), digits)
        assert b.width <= Fraction(1, 10 ** (digits - 2)), digits
        assert b.precision_digits == digits


def test_enclosure_contains_known_value():
    b = enclose(lambda ctx: ctx.mpf(2) / ctx.mpf(3), 40)
    assert Fraction(2, 3) in b


def test_endpoints_ordering_enforced():
    with pytest.raises(ValueError):
        BoundInterval(Fraction(2), Fraction(1), 10)


def test_decimal_rendering_is_outward():
    b = enclose(lambda ctx: ctx.log(ctx.mpf(2)), 25)
    lo_dec = Fraction(Decimal(b.lo_decimal()))
    hi_dec = Fraction(Decimal(b.hi_decimal()))
    assert lo_dec <= b.lo and b.hi <= hi_dec
    assert str(lo_dec)  # parses back


def test_contains_interval_and_intersects():
    wide = enclose(lambda ctx: ctx.log(ctx.mpf(7)), 15)
    narrow = enclose(lambda ctx: ctx.log(ctx.mpf(7)), 60)
    assert wide.contains_interval(narrow)
    assert wide.intersects(narrow) and narrow.intersects(wide)
    other = enclose(lambda ctx: ctx.log(ctx.mpf(8)), 15)
    assert not wide.intersects(other)


def test_fraction_in_roundtrip():
    b = enclose(lambda ctx: fraction_in(ctx, Fraction(355, 113)), 30)
    assert Fraction(355, 113) in b


def test_interval_endpoints_are_plain_ints():
    b = enclose(lambda ctx: ctx.log(ctx.mpf(5)), 20)
    assert type(b.lo.numerator) is int and type(b.hi.denominator) is int


def test_big_integer_inputs_are_enclosed():
    big = 10**80 + 12345
    b = enclose(lambda ctx: ctx.log(ctx.mpf(big)), 40)
    # ln(1e80) = 80 ln 10 = 184.2068...
    assert Fraction(184) < b.lo < b.hi < Fraction(185)


def test_enclose_rejects_nonpositive_precision():
    with pytest.raises(ValueError):
        enclose(lambda ctx: ctx.mpf(1), 0)
