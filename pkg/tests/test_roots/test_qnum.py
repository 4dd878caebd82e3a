#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import math

import pytest

import numpy as np
from jax import config

config.update("jax_enable_x64", True)

from fqk.catalog import builtin
from fqk.fusion.fpdim import fpdim_of
from fqk.fusion.module import nonzero_action_check, regular_module
from fqk.fusion.ring import dual, is_nonnegative, is_zero, multiply
from fqk.roots.qnum import NCPolynomial, qnum_free, qnum_in_ring, qnum_on_module, qnum_sequence


def test_free_quantum_numbers():
    assert str(qnum_free(0)) == "0"
    assert str(qnum_free(1)) == "1"
    assert str(qnum_free(2)) == "d"
    assert str(qnum_free(2, "d'")) == "d'"
    assert str(qnum_free(3)) == "dd' - 1"
    assert str(qnum_free(3, "d'")) == "d'd - 1"
    assert str(qnum_free(4)) == "dd'd - 2d"
    assert qnum_free(-3) == -qnum_free(3)
    assert str(qnum_free(-2)) == "-d"
    assert qnum_free(7).degree() == 6


def test_free_recursion():
    d, dp = NCPolynomial.variable("d"), NCPolynomial.variable("d'")
    for k in range(1, 12):
        assert qnum_free(k + 1) == d * qnum_free(k, "d'") - qnum_free(k - 1)
        assert qnum_free(k + 1, "d'") == dp * qnum_free(k) - qnum_free(k - 1, "d'")


def test_free_polynomial_specializes():
    ring = builtin("rep_s3")
    V = ring.simple("V")
    for k in range(8):
        p = qnum_free(k)
        value = p.evaluate(V, dual(ring, V), ring.one(), ring.zero(), lambda a, b: multiply(ring, a, b))
        assert np.array_equal(value, qnum_in_ring(ring, V, k))


def test_fibonacci_quantum_numbers():
    ring = builtin("fibonacci")
    tau = ring.simple("tau")
    assert list(qnum_in_ring(ring, tau, 2)) == [0, 1]
    assert list(qnum_in_ring(ring, tau, 3)) == [0, 1]
    assert list(qnum_in_ring(ring, tau, 4)) == [1, 0]
    assert list(qnum_in_ring(ring, tau, 5)) == [0, 0]
    assert list(qnum_in_ring(ring, tau, 6)) == [-1, 0]
    assert list(qnum_in_ring(ring, tau, -4)) == [-1, 0]


def test_sequence_matches_single_values():
    ring = builtin("verlinde_sl2", level=5)
    Pi = ring.element({"V1": 1, "V2": 1})
    a_seq, b_seq = qnum_sequence(ring, Pi, 10)
    assert len(a_seq) == 11
    for k in range(11):
        assert np.array_equal(a_seq[k], qnum_in_ring(ring, Pi, k, "d"))
        assert np.array_equal(b_seq[k], qnum_in_ring(ring, Pi, k, "d'"))


@pytest.mark.parametrize(
    "key, params, label, m",
    [
        ("fibonacci", {}, "tau", 5),
        ("rep_s2", {}, "S", 3),
        ("vect", {}, "1", 3),
        ("verlinde_sl2", {"level": 3}, "V1", 5),
        ("verlinde_sl2", {"level": 4}, "V1", 6),
        ("verlinde_sl2", {"level": 6}, "V1", 8),
    ],
)
def test_fpdim_of_quantum_numbers(key, params, label, m):
    ring = builtin(key, **params)
    Pi = ring.simple(label)
    a_seq, b_seq = qnum_sequence(ring, Pi, 20)
    q = math.pi / m
    for k in range(21):
        expected = math.sin(k * q) / math.sin(q)
        np.testing.assert_almost_equal(fpdim_of(ring, a_seq[k]), expected, decimal=8)
        np.testing.assert_almost_equal(fpdim_of(ring, b_seq[k]), expected, decimal=8)


def test_verlinde_quantum_numbers_are_simples():
    ring = builtin("verlinde_sl2", level=4)
    V1 = ring.simple("V1")
    for k in range(1, 6):
        assert ring.format(qnum_in_ring(ring, V1, k)) == f"[V{k - 1}]"


def test_quantum_numbers_on_a_module():
    ring = builtin("fibonacci")
    M = regular_module(ring)
    tau = ring.simple("tau")
    for k in range(-3, 9):
        x = qnum_in_ring(ring, tau, k)
        assert np.array_equal(qnum_on_module(M, tau, k), np.tensordot(x, M.act, axes=([0], [0])))

    M = builtin("sl3at5_action")
    X = M.resolve("X")
    assert not np.any(np.asarray(qnum_on_module(M, X, 5) != 0, dtype=bool))
    assert np.array_equal(qnum_on_module(M, X, 2), X.matrix)


def test_bad_color():
    with pytest.raises(ValueError):
        qnum_free(3, "e")


PERIODIC = [
    ("fibonacci", {}, "tau", 5),
    ("rep_s2", {}, "S", 3),
    ("vect", {}, "1", 3),
] + [("verlinde_sl2", {"level": level}, "V1", level + 2) for level in range(2, 7)]

UNBOUNDED = [("rep_s3", {}, "V"), ("rep_s4", {}, "V")]


@pytest.mark.parametrize("key, params, label, m", PERIODIC)
def test_quantum_numbers_are_antisymmetric_about_m(key, params, label, m):
    ring = builtin(key, **params)
    Pi = ring.simple(label)
    for color in ("d", "d'"):
        assert is_zero(qnum_in_ring(ring, Pi, m, color))
        for k in range(2 * m + 1):
            assert np.array_equal(qnum_in_ring(ring, Pi, m + k, color), -qnum_in_ring(ring, Pi, m - k, color))


def test_module_quantum_numbers_are_antisymmetric_about_m():
    M = builtin("sl3at5_action")
    X = M.resolve("X")
    for color in ("d", "d'"):
        for k in range(11):
            assert np.array_equal(qnum_on_module(M, X, 5 + k, color), -qnum_on_module(M, X, 5 - k, color))


@pytest.mark.parametrize(
    "key, params, label, K", [(key, params, label, m) for key, params, label, m in PERIODIC] + [u + (13,) for u in UNBOUNDED]
)
def test_quantum_numbers_below_m_are_positive(key, params, label, K):
    ring = builtin(key, **params)
    a_seq, b_seq = qnum_sequence(ring, ring.simple(label), K)
    for k in range(1, K):
        for x in (a_seq[k], b_seq[k]):
            assert is_nonnegative(x)
            assert not is_zero(x)


MODULES = [("regular", {"ring": key, **params}, label, 2 * m) for key, params, label, m in PERIODIC] + [
    ("regular", {"ring": key}, label, 12) for key, _, label in UNBOUNDED
] + [("verlinde_typeD", {"level": level}, "V1", 2 * level + 4) for level in (2, 4, 6)]


@pytest.mark.parametrize("key, params, label, K", MODULES)
def test_quantum_numbers_vanish_on_a_simple_only_when_zero(key, params, label, K):
    if key == "regular":
        ring = builtin(params["ring"], **{k: v for k, v in params.items() if k != "ring"})
        M = regular_module(ring)
    else:
        M = builtin(key, **params)
        ring = M.ring
    Pi = ring.simple(label)
    for k in range(K + 1):
        x = qnum_in_ring(ring, Pi, k)
        Q = qnum_on_module(M, Pi, k)
        for L in range(M.msize):
            assert is_zero(Q[:, L]) == is_zero(x)
            if is_nonnegative(x) or is_nonnegative(-x):
                assert nonzero_action_check(M, x, M.simple(L)) != is_zero(x)
