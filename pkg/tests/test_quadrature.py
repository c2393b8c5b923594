import math

import pytest

from cellecon.errors import DomainError, QuadratureError
from cellecon.quadrature import gauss_kronrod_15, integrate


def test_single_panel_is_exact_for_polynomials():
    value, err = gauss_kronrod_15(lambda x: x ** 10, 0.0, 1.0)
    assert value == pytest.approx(1 / 11, abs=1e-14)
    assert err < 1e-12


def test_adaptive_handles_sharp_peak():
    value, _, n = integrate(lambda x: 1.0 / (1e-4 + x * x), -1.0, 1.0, abs_tolerance=1e-9)
    assert value == pytest.approx(2 * math.atan(100.0) / 1e-2, rel=1e-10)
    assert n > 1


def test_non_convergence_carries_partial_estimate():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: 1.0 / math.sqrt(x) if x > 0 else 0.0, 0.0, 1.0,
                  abs_tolerance=1e-14, max_subdivisions=3)
    assert info.value.estimate == pytest.approx(2.0, rel=0.2)
    assert info.value.subdivisions == 3


@pytest.mark.parametrize("a,b,tol,n", [(1.0, 0.0, 1e-6, 10), (0.0, math.inf, 1e-6, 10),
                                       (0.0, 1.0, 0.0, 10), (0.0, 1.0, 1e-6, 0)])
def test_invalid_arguments(a, b, tol, n):
    with pytest.raises(DomainError):
        integrate(math.sin, a, b, abs_tolerance=tol, max_subdivisions=n)
