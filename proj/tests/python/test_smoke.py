import math

import numpy as np
import pytest

import logfcc


def exp5(x):
    return math.cos(4 * x) / (x * x + x + 1)


def test_weights_shape_and_first_entry():
    xi, eta = logfcc.weights(0.0, 0.0, 4)
    assert xi.shape == (5,) and eta.shape == (5,)
    assert xi.dtype == np.complex128
    assert xi[0] == pytest.approx(-4.0, abs=1e-15)
    assert abs(xi[1]) == 0.0


def test_nonosc_endpoint():
    xi, _ = logfcc.nonosc_weights(1.0, 2)
    assert xi[0] == pytest.approx(4 * math.log(2) - 4, abs=1e-15)


def test_conjugate_symmetry():
    xi, _ = logfcc.weights(0.3, 25.0, 30)
    xim, _ = logfcc.weights(0.3, -25.0, 30)
    assert np.max(np.abs(xim - np.conj(xi))) <= 1e-13


def test_integrate_matches_reference():
    for alpha, k in [(0.0, 0.0), (1.0, 100.0), (0.3, 10.0)]:
        r = logfcc.integrate(exp5, alpha, k, 64)
        ref, achieved, converged = logfcc.reference_integral(exp5, alpha, k, bandwidth=8.0)
        assert converged
        assert abs(r["value"] - ref) <= 1e-12
        assert r["evaluations"] == 65


def test_samples_and_refine():
    n = 16
    nodes = np.cos(np.arange(n + 1) * np.pi / n)
    a = logfcc.integrate_samples([complex(exp5(x)) for x in nodes], 0.5, 40.0)
    b = logfcc.integrate(exp5, 0.5, 40.0, n)
    assert abs(a["value"] - b["value"]) <= 1e-14
    r = logfcc.refine(exp5, 0.0, 0.0, 8, 1e-12)
    assert r["converged"] and r["est_error"] <= 1e-12
    assert r["path"] == "folded_nonoscillatory"


def test_parameter_errors():
    with pytest.raises(Exception):
        logfcc.weights(1.5, 10.0, 4)
