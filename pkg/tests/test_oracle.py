import pytest
from conftest import eisenstein_dvr

from ramjac import (
    FpElement,
    PreconditionError,
    RingPresentation,
    cotangent_matrix_at_point,
    fp_matrix_rank,
    on_special_fiber,
    oracle_is_regular_at_point,
    scan_rational_points,
)


def _pres(p, e, variables, gens, height=None):
    return RingPresentation(eisenstein_dvr(p, e), variables, gens, height=height)


def test_fp_matrix_rank():
    one, zero = FpElement(1, 3), FpElement(0, 3)
    assert fp_matrix_rank([[one, zero], [zero, one]]) == 2
    assert fp_matrix_rank([[one, one], [one, one]]) == 1
    assert fp_matrix_rank([[zero, zero]]) == 0
    assert fp_matrix_rank([]) == 0
    # rank respects the modulus: [[1,2],[2,4]] is rank 1 mod 3
    two = FpElement(2, 3)
    four = FpElement(4, 3)
    assert fp_matrix_rank([[one, two], [two, four]]) == 1


def test_cotangent_matrix_examples():
    pres = _pres(2, 2, ("x",), ["x - pi"])
    [row] = cotangent_matrix_at_point(pres, (0,))
    assert row == [FpElement(-1, 2), FpElement(1, 2)]

    pres3 = _pres(3, 2, ("x", "y"), ["x^2 - pi^2*y"])
    [row3] = cotangent_matrix_at_point(pres3, (0, 0))
    assert row3 == [FpElement(0, 3)] * 3

    pres_pi = _pres(5, 2, ("x",), ["pi"], height=1)
    [row_pi] = cotangent_matrix_at_point(pres_pi, (3,))
    assert row_pi == [FpElement(1, 5), FpElement(0, 5)]


def test_cotangent_rejects_off_fiber_points():
    pres = _pres(2, 2, ("x",), ["x - pi"])
    with pytest.raises(PreconditionError, match="special fiber"):
        cotangent_matrix_at_point(pres, (1,))


def test_oracle_regularity_examples():
    assert oracle_is_regular_at_point(_pres(2, 2, ("x",), ["x - pi"]), (0,))
    pres3 = _pres(3, 2, ("x", "y"), ["x^2 - pi^2*y"])
    assert not oracle_is_regular_at_point(pres3, (0, 0))
    assert not oracle_is_regular_at_point(pres3, (0, 1))


def test_scan_rational_points():
    entries = scan_rational_points(_pres(2, 2, ("x",), ["x - pi"]))
    assert [(e.point, e.on_fiber, e.regular) for e in entries] == [
        ((0,), True, True),
        ((1,), False, None),
    ]

    zero_ideal = _pres(2, 2, ("x",), [])
    assert all(e.on_fiber and e.regular for e in scan_rational_points(zero_ideal))

    pres3 = _pres(3, 2, ("x", "y"), ["x^2 - pi^2*y"])
    fiber_points = [e.point for e in scan_rational_points(pres3) if e.on_fiber]
    assert fiber_points == [(0, 0), (0, 1), (0, 2)]
    assert all(
        e.regular is False for e in scan_rational_points(pres3) if e.on_fiber
    )


def test_scan_order_is_lexicographic():
    pres = _pres(2, 2, ("x", "y"), [])
    points = [e.point for e in scan_rational_points(pres)]
    assert points == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_on_special_fiber():
    pres = _pres(5, 2, ("x",), ["x^2 - pi"])
    assert on_special_fiber(pres, (0,))
    assert not on_special_fiber(pres, (2,))
    # coordinates are reduced mod p first
    assert on_special_fiber(pres, (5,))


def test_scan_guardrail():
    names = tuple(f"x{i}" for i in range(9))
    pres = _pres(5, 2, names, [])
    with pytest.raises(PreconditionError, match="guardrail"):
        scan_rational_points(pres)
