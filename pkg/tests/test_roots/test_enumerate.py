#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import pytest

import numpy as np
from jax import config

config.update("jax_enable_x64", True)

from fqk.catalog import builtin
from fqk.errors import InfiniteType, MissingAction, NotReflectable
from fqk.quiver.core import FusionQuiver
from fqk.roots.enumerate import (
    enumerate_by_coxeter,
    enumerate_indecomposables,
    extended_positive_roots,
    reflection_closure,
    right_multiply,
)
from fqk.roots.form import ReflectionAction, is_positive, unfold_dimvec


def _keys(vectors):
    return {unfold_dimvec(x) for x in vectors}


def test_s2_edge():
    vectors = enumerate_indecomposables(builtin("s2_sign_quiver"))
    assert _keys(vectors) == {
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
    }
    assert [unfold_dimvec(x) for x in vectors] == sorted(_keys(vectors))


@pytest.mark.parametrize(
    "key, params, count",
    [
        ("fib_edge_quiver", {}, 10),
        ("fib_h4_quiver", {}, 120),
        ("s2_sign_chain", {}, 12),
        ("sn_sign_quiver", {"n": 4}, 15),
        ("verlinde_edge_quiver", {"level": 4, "module": "regular"}, 30),
        ("verlinde_edge_quiver", {"level": 4, "module": "typeD"}, 24),
        ("sl3at5_quiver", {}, 30),
    ],
)
def test_counts_and_methods_agree(key, params, count):
    Q = builtin(key, **params)
    vectors = enumerate_indecomposables(Q, check=True)
    assert len(vectors) == count
    assert all(is_positive(x) for x in vectors)
    assert _keys(vectors) == _keys(reflection_closure(Q))
    assert _keys(vectors) == _keys(enumerate_by_coxeter(Q))


def test_fibonacci_edge_vectors():
    vectors = enumerate_indecomposables(builtin("fib_edge_quiver"))
    assert [[1, 1], [1, 1]] in [x.tolist() for x in vectors]
    assert vectors[0].shape == (2, 2)


@pytest.mark.parametrize("key", ["s3_std_quiver", "s4_std_quiver", "vect_kronecker"])
def test_infinite_type(key):
    Q = builtin(key)
    with pytest.raises(InfiniteType):
        enumerate_indecomposables(Q)
    with pytest.raises(InfiniteType):
        enumerate_by_coxeter(Q)


def test_closure_cap():
    Q = builtin("vect_kronecker")
    with pytest.raises(InfiniteType):
        reflection_closure(Q, cap=100)


def test_closure_from_one_seed():
    Q = builtin("fib_edge_quiver")
    W = ReflectionAction(Q)
    orbit = reflection_closure(Q, seeds=[W.simple(0, 0)])
    # the tau-multiples lie in another orbit
    assert len(orbit) == 5
    assert _keys(orbit) < _keys(enumerate_indecomposables(Q))


def test_extended_roots_fibonacci():
    Q = builtin("fib_edge_quiver")
    roots = extended_positive_roots(Q)
    assert len(roots.positive) == 5
    assert len(roots.extended) == 10
    assert len(roots.classes) == 5
    assert all(len(c) == 2 for c in roots.classes)
    # every root times [1] is itself
    for r, c in zip(roots.positive, roots.classes):
        assert np.array_equal(roots.extended[c[0]], r)


def test_extended_roots_overlap():
    roots = extended_positive_roots(builtin("s2_sign_quiver"))
    assert len(roots.positive) == 6
    assert len(roots.extended) == 6


def test_right_multiply():
    Q = builtin("fib_edge_quiver")
    x = np.array([[1, 0], [0, 1]], dtype=object)
    assert right_multiply(Q, x, 1).tolist() == [[0, 1], [1, 1]]
    assert right_multiply(Q, x, 0).tolist() == x.tolist()


def test_extended_roots_need_a_ring():
    with pytest.raises(MissingAction):
        extended_positive_roots(builtin("sl3at5_quiver"))


def test_extended_roots_of_a_single_vertex():
    roots = extended_positive_roots(FusionQuiver(["a"], [], builtin("fibonacci")))
    assert [x.tolist() for x in roots.positive] == [[[1, 0]]]
    assert [x.tolist() for x in roots.extended] == [[[0, 1]], [[1, 0]]]


def test_coxeter_orbits_need_an_acyclic_quiver():
    ring = builtin("vect")
    one = ring.one()
    cycle = FusionQuiver(["a", "b", "c"], [("a", "b", one), ("b", "c", one), ("c", "a", one)], ring)
    with pytest.raises(NotReflectable):
        enumerate_by_coxeter(cycle)
