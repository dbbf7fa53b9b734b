import pytest
from conftest import dvr_ring, fp_ring, zp_ring

from ramjac import InputError, PreconditionError


def test_uniformizer_expression():
    R = dvr_ring(2, 2, "x")
    f = R.parse("x^2 - pi")
    assert f == R.gen("x") ** 2 - R.constant(R.scalars.uniformizer)


def test_basic_grammar():
    R = zp_ring(5, "x", "y")
    assert R.parse("3*x*y - 2") == 3 * R.gen("x") * R.gen("y") - R.from_int(2)
    assert R.parse("(x+y)^2") == (R.gen("x") + R.gen("y")) ** 2
    assert R.parse("-x^2") == -(R.gen("x") ** 2)
    assert R.parse("- - x") == R.gen("x")
    assert R.parse("  x  +  y ") == R.gen("x") + R.gen("y")


def test_juxtaposition_integer_identifier():
    R = zp_ring(5, "x", "y")
    assert R.parse("3x") == 3 * R.gen("x")
    assert R.parse("3x^2*y") == 3 * R.gen("x") ** 2 * R.gen("y")
    R2 = dvr_ring(3, 2, "x")
    assert R2.parse("2pi") == R2.constant(R2.scalars.uniformizer) * 2


def test_juxtaposition_between_identifiers_rejected():
    R = zp_ring(5, "x", "y")
    with pytest.raises(InputError):
        R.parse("x y")


def test_rational_literal():
    R = zp_ring(5, "x")
    f = R.parse("1/2*x")
    from fractions import Fraction

    assert f == R.gen("x").scale(R.scalars.from_fraction(Fraction(1, 2)))
    with pytest.raises(InputError, match="division by zero"):
        R.parse("1/0")


def test_rational_literal_locality_enforced():
    R = zp_ring(5, "x")
    with pytest.raises(PreconditionError, match="not p-local"):
        R.parse("1/5")


def test_syntax_errors_carry_position():
    R = fp_ring(5, "x")
    with pytest.raises(InputError, match="position 4"):
        R.parse("x + ")
    with pytest.raises(InputError, match="position 2"):
        R.parse("x @ 1")
    with pytest.raises(InputError, match="trailing input"):
        R.parse("x) + 1")


def test_pi_requires_dvr():
    R = fp_ring(5, "x")
    with pytest.raises(InputError, match="requires DVR coefficients"):
        R.parse("x - pi")


def test_unknown_identifier():
    R = fp_ring(5, "x")
    with pytest.raises(InputError, match="unknown identifier 'q'"):
        R.parse("x + q")


def test_exponent_must_be_nonnegative_integer():
    R = fp_ring(5, "x")
    with pytest.raises(InputError):
        R.parse("x^-2")
    with pytest.raises(InputError):
        R.parse("x^(2)")
    assert R.parse("x^0") == R.one


def test_variable_named_pi_wins_over_uniformizer():
    # a ring variable called pi shadows the constant; the DVR rings never
    # declare one, but the parser prefers variables by construction
    R = fp_ring(5, "pi")
    assert R.parse("pi^2") == R.gen("pi") ** 2
