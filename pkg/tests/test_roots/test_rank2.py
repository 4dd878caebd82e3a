#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import math

import pytest

import numpy as np
from jax import config

config.update("jax_enable_x64", True)

from fqk.catalog import builtin
from fqk.errors import OutOfRange, SignCoherenceViolation
from fqk.fusion.ring import FusionRing
from fqk.roots.enumerate import enumerate_indecomposables
from fqk.roots.form import unfold_dimvec
from fqk.roots.rank2 import (
    matrix_power_identity_check,
    rank_two_order,
    rank_two_quiver,
    sigma_product,
    sign_coherence,
    x_ell_dimvec,
)

SAFE_LABELS = [
    ("fibonacci", {}, "tau", 5),
    ("rep_s2", {}, "S", 3),
    ("vect", {}, "1", 3),
    ("rep_s3", {}, "V", math.inf),
    ("rep_s4", {}, "V", math.inf),
] + [("verlinde_sl2", {"level": level}, "V1", level + 2) for level in range(2, 7)]


def _sign_pattern(m, K):
    signs = []
    for k in range(1, K + 1):
        if m == math.inf:
            signs.append("+")
        elif k % m == 0:
            signs.append("0")
        else:
            signs.append("+" if math.sin(k * math.pi / m) > 0 else "-")
    return " ".join(signs)


def test_fibonacci_signs():
    ring = builtin("fibonacci")
    report = sign_coherence(ring, ring.simple("tau"), K=12)
    assert report.pattern("d") == "+ + + + 0 - - - - 0 + +"
    assert report.pattern("d'") == report.pattern("d")
    assert report.minimal_m == 5


@pytest.mark.parametrize("key, params, label, m", SAFE_LABELS)
def test_sign_coherence(key, params, label, m):
    ring = builtin(key, **params)
    report = sign_coherence(ring, ring.simple(label), K=20)
    assert report.minimal_m == m
    assert report.pattern("d") == _sign_pattern(m, 20)
    assert report.pattern("d'") == _sign_pattern(m, 20)


def test_sign_coherence_rejects_bad_input():
    ring = builtin("rep_s2")
    with pytest.raises(OutOfRange):
        sign_coherence(ring, ring.simple("S"), K=0)
    # 1 - S has FPdim 0 but is not zero
    with pytest.raises(SignCoherenceViolation):
        sign_coherence(ring, ring.element({"1": 1, "S": -1}), K=4)


@pytest.mark.parametrize("key, params, label, m", SAFE_LABELS)
def test_rank_two_order(key, params, label, m):
    assert rank_two_order(builtin(key, **params), label) == m


def test_rank_two_order_on_a_partial_module():
    assert rank_two_order(builtin("sl3at5_action"), "X") == 5


def test_rank_two_quiver():
    Q, M = rank_two_quiver(builtin("fibonacci"), "tau")
    assert Q.vertices == ("a", "b")
    assert M.mnames == ("1", "tau")
    Q, M = rank_two_quiver(builtin("sl3at5_action"), "X")
    assert Q.is_partial


def test_sigma_product_fibonacci():
    ring = builtin("fibonacci")
    S = sigma_product(ring, ring.simple("tau"))
    # [[d'd - 1, -d'], [d, -1]] with tau^2 - 1 = tau
    assert [list(S[i, j]) for i in range(2) for j in range(2)] == [[0, 1], [0, -1], [0, 1], [-1, 0]]


def _ring_power(ring: FusionRing, S: np.ndarray, k: int) -> np.ndarray:
    P = np.zeros((2, 2, ring.rank), dtype=object)
    P[0, 0], P[1, 1] = ring.one(), ring.one()
    for _ in range(k):
        Q = np.zeros_like(P)
        for i in range(2):
            for j in range(2):
                for n in range(2):
                    Q[i, j] = Q[i, j] + np.tensordot(np.tensordot(S[i, n], ring.N, axes=([0], [0])), P[n, j], axes=([0], [0]))
        P = Q
    return P


def test_sigma_power_fibonacci():
    ring = builtin("fibonacci")
    S = sigma_product(ring, ring.simple("tau"))
    P = _ring_power(ring, S, 2)
    assert [list(P[i, j]) for i in range(2) for j in range(2)] == [[0, 0], [-1, 0], [1, 0], [0, -1]]
    P = _ring_power(ring, S, 5)
    assert [list(P[i, j]) for i in range(2) for j in range(2)] == [[1, 0], [0, 0], [0, 0], [1, 0]]


RINGS = [("vect", {}), ("rep_s2", {}), ("rep_s3", {}), ("rep_s4", {}), ("fibonacci", {})] + [
    ("verlinde_sl2", {"level": level}) for level in range(1, 7)
]


@pytest.mark.parametrize("key, params", RINGS)
def test_matrix_power_identity(key, params):
    ring = builtin(key, **params)
    for label in ring.names:
        for k in range(11):
            assert matrix_power_identity_check(ring, ring.simple(label), k), (label, k)
    assert matrix_power_identity_check(ring, ring.element({n: 1 for n in ring.names}), 6)


def test_matrix_power_identity_rejects_negative_k():
    ring = builtin("fibonacci")
    with pytest.raises(OutOfRange):
        matrix_power_identity_check(ring, ring.simple("tau"), -1)


def test_x_ell_fibonacci():
    ring = builtin("fibonacci")
    expected = {
        ("1", 1): [[1, 0], [0, 0]],
        ("1", 2): [[1, 0], [0, 1]],
        ("1", 3): [[0, 1], [0, 1]],
        ("1", 4): [[0, 1], [1, 0]],
        ("1", 5): [[0, 0], [1, 0]],
        ("tau", 1): [[0, 1], [0, 0]],
        ("tau", 2): [[0, 1], [1, 1]],
        ("tau", 3): [[1, 1], [1, 1]],
        ("tau", 4): [[1, 1], [0, 1]],
        ("tau", 5): [[0, 0], [0, 1]],
    }
    for (L, ell), x in expected.items():
        assert x_ell_dimvec(ring, "tau", L, ell).tolist() == x


@pytest.mark.parametrize("source, label", [("fibonacci", "tau"), ("rep_s2", "S"), ("sl3at5_action", "X")])
def test_x_ell_gives_every_indecomposable(source, label):
    src = builtin(source)
    Q, M = rank_two_quiver(src, label)
    m = rank_two_order(src, label)
    found = {unfold_dimvec(x_ell_dimvec(src, label, L, ell)) for L in range(M.msize) for ell in range(1, m + 1)}
    assert found == {unfold_dimvec(x) for x in enumerate_indecomposables(Q, M)}


def test_x_ell_range():
    ring = builtin("fibonacci")
    for ell in (0, 6):
        with pytest.raises(OutOfRange):
            x_ell_dimvec(ring, "tau", "1", ell)


def test_zero_label_has_order_two():
    ring = builtin("fibonacci")
    report = sign_coherence(ring, ring.zero(), K=6)
    assert report.minimal_m == 2
    assert report.pattern() == "+ 0 - 0 + 0"
