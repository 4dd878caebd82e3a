#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import math

import pytest

import numpy as np
from jax import config

config.update("jax_enable_x64", True)

from fqk.catalog import builtin
from fqk.errors import InfiniteComponent, InfiniteType, MissingAction
from fqk.fusion.module import ActionLabel, regular_module
from fqk.quiver.core import FusionQuiver
from fqk.quiver.coxeter import classify_coxeter, coxeter_graph
from fqk.quiver.ordinary import OrdinaryQuiver
from fqk.roots.enumerate import reflection_closure
from fqk.unfolding.components import components, positive_roots_simply_laced
from fqk.unfolding.unfold import fp_degree_check, unfold
from fqk.unfolding.verdict import is_finite_type

QUIVERS = [
    ("fib_edge_quiver", {}),
    ("fib_h4_quiver", {}),
    ("s2_sign_quiver", {}),
    ("s2_sign_chain", {}),
    ("sn_sign_quiver", {"n": 3}),
    ("sn_sign_quiver", {"n": 4}),
    ("s3_std_quiver", {}),
    ("s4_std_quiver", {}),
    ("verlinde_edge_quiver", {"level": 2, "module": "regular"}),
    ("verlinde_edge_quiver", {"level": 4, "module": "regular"}),
    ("verlinde_edge_quiver", {"level": 2, "module": "typeD"}),
    ("verlinde_edge_quiver", {"level": 4, "module": "typeD"}),
    ("verlinde_edge_quiver", {"level": 6, "module": "typeD"}),
    ("sl3at5_quiver", {}),
    ("vect_kronecker", {}),
]


def test_fibonacci_edge():
    U = unfold(builtin("fib_edge_quiver"))
    assert U.vertices == (("a", "1"), ("a", "tau"), ("b", "1"), ("b", "tau"))
    assert U.arrows == ((0, 3, 1), (1, 2, 1), (1, 3, 1))
    assert [U.projection(i) for i in range(4)] == [0, 0, 1, 1]


@pytest.mark.parametrize("key, params, num_vertices, num_arrows", [
    ("s3_std_quiver", {}, 6, 5),
    ("s4_std_quiver", {}, 10, 12),
    ("fib_h4_quiver", {}, 8, 7),
    ("sl3at5_quiver", {}, 12, 9),
    ("vect_kronecker", {}, 2, 2),
])
def test_unfolded_sizes(key, params, num_vertices, num_arrows):
    U = unfold(builtin(key, **params))
    assert U.num_vertices == num_vertices
    assert U.num_arrows == num_arrows


@pytest.mark.parametrize("key, params", QUIVERS)
def test_fp_degree_identity(key, params):
    assert fp_degree_check(unfold(builtin(key, **params))) == []


def test_fp_degree_identity_catches_a_wrong_dimension():
    M = builtin("sl3at5_action")
    wrong = ActionLabel(M.labels["X"].matrix, fpdim=1.0, name="X")
    U = unfold(FusionQuiver(["a", "b"], [("a", "b", wrong)], None, M))
    violations = fp_degree_check(U)
    assert len(violations) == 6
    assert {v.invariant for v in violations} == {"fp_degree"}


def test_ring_labels_need_module_action():
    Q = FusionQuiver(["a", "b"], [("a", "b", builtin("fibonacci").simple("tau"))], None, builtin("sl3at5_action"))
    with pytest.raises(MissingAction):
        unfold(Q)


@pytest.mark.parametrize(
    "key, params, finite, gamma, unfolded, h, roots",
    [
        ("fib_edge_quiver", {}, True, "I2(5)", "A4", 5, 10),
        ("fib_h4_quiver", {}, True, "H4", "E8", 30, 120),
        ("s2_sign_quiver", {}, True, "A2", "2 x A2", 3, 6),
        ("s2_sign_chain", {}, True, "A3", "2 x A3", 4, 12),
        ("sn_sign_quiver", {"n": 3}, True, "A2", "3 x A2", 3, 9),
        ("sn_sign_quiver", {"n": 4}, True, "A2", "5 x A2", 3, 15),
        ("verlinde_edge_quiver", {"level": 4, "module": "regular"}, True, "G2", "2 x A5", 6, 30),
        ("verlinde_edge_quiver", {"level": 4, "module": "typeD"}, True, "G2", "2 x D4", 6, 24),
        ("verlinde_edge_quiver", {"level": 2, "module": "regular"}, True, "B2", "2 x A3", 4, 12),
        ("verlinde_edge_quiver", {"level": 2, "module": "typeD"}, True, "B2", "2 x A3", 4, 12),
        ("verlinde_edge_quiver", {"level": 6, "module": "typeD"}, True, "I2(8)", "2 x D5", 8, 40),
        ("sl3at5_quiver", {}, True, "I2(5)", "3 x A4", 5, 30),
    ],
)
def test_finite_verdicts(key, params, finite, gamma, unfolded, h, roots):
    verdict = is_finite_type(builtin(key, **params))
    assert verdict.finite == finite
    assert verdict.gamma.summary() == gamma
    assert verdict.unfolded.summary() == unfolded
    assert set(verdict.unfolded.coxeter_numbers) == {h}
    assert verdict.num_indecomposables == roots


@pytest.mark.parametrize("level", [2, 4, 6])
def test_verdict_does_not_depend_on_the_module(level):
    regular = is_finite_type(builtin("verlinde_edge_quiver", level=level, module="regular"))
    typeD = is_finite_type(builtin("verlinde_edge_quiver", level=level, module="typeD"))
    assert regular.finite and typeD.finite
    assert regular.gamma.summary() == typeD.gamma.summary()
    assert set(regular.unfolded.coxeter_numbers) == set(typeD.unfolded.coxeter_numbers) == {level + 2}


def test_fibonacci_summary():
    verdict = is_finite_type(builtin("fib_edge_quiver"))
    assert verdict.summary() == "finite; Γ_Q = I2(5); Q̌ = A4 (h=5, 10 roots)"
    assert verdict.matching == ((0,),)


@pytest.mark.parametrize("key", ["s3_std_quiver", "s4_std_quiver", "vect_kronecker"])
def test_infinite_verdicts(key):
    verdict = is_finite_type(builtin(key))
    assert not verdict.finite
    assert verdict.gamma.summary() == "I2(∞)"
    assert not verdict.unfolded.finite
    assert verdict.num_indecomposables == math.inf
    assert verdict.summary().startswith("infinite; Γ_Q = I2(∞)")


def test_verdict_agrees_across_modules():
    regular = is_finite_type(builtin("verlinde_edge_quiver", level=4, module="regular"))
    typeD = is_finite_type(builtin("verlinde_edge_quiver", level=4, module="typeD"))
    assert regular.finite == typeD.finite
    assert regular.gamma.summary() == typeD.gamma.summary()
    assert typeD.matching == ((0, 1),)


def test_mixed_components():
    ring = builtin("rep_s3")
    Q = FusionQuiver(["a", "b", "c", "d"], [("a", "b", ring.simple("S")), ("c", "d", ring.simple("V"))], ring)
    verdict = is_finite_type(Q)
    assert not verdict.finite
    assert verdict.gamma.summary() == "A2 + I2(∞)"
    assert [c.finite for c in verdict.gamma.components] == [True, False]


def test_components_of_ordinary_quivers():
    q = OrdinaryQuiver(range(4), [(0, 1, 1), (1, 2, 1), (1, 3, 1)])
    report = components(q)
    assert report.types == ["D4"]
    assert report.total_roots == 12
    assert len(positive_roots_simply_laced(q)) == 12

    with pytest.raises(InfiniteComponent):
        positive_roots_simply_laced(OrdinaryQuiver(range(2), [(0, 1, 2)]))
    with pytest.raises(InfiniteComponent):
        positive_roots_simply_laced(OrdinaryQuiver(range(1), [(0, 0, 1)]))


def test_unfolded_roots_of_e8():
    roots = positive_roots_simply_laced(unfold(builtin("fib_h4_quiver")))
    assert len(roots) == 120
    # highest root of E8 has height 29
    assert max(sum(r) for r in roots) == 29


def test_regular_module_is_the_default():
    Q = builtin("fib_edge_quiver")
    a = unfold(Q)
    b = unfold(Q, regular_module(Q.ring))
    assert a.arrows == b.arrows
    assert np.array_equal(a.quiver.cartan(), b.quiver.cartan())


def _dynkin(kind, n):
    """Arrows of a Dynkin diagram: the path ``0 - ... - (n - 2)`` plus vertex ``n - 1`` hung where the type needs it"""
    path = [(i, i + 1, 1) for i in range(n - 2)]
    if kind == "A":
        return path + [(n - 2, n - 1, 1)]
    if kind == "D":
        return path + [(n - 3, n - 1, 1)]
    # arms of lengths 2, 1 and n - 4 at vertex 2
    return path + [(2, n - 1, 1)]


@pytest.mark.parametrize(
    "kind, n, count",
    [("A", n, n * (n + 1) // 2) for n in range(1, 9)]
    + [("D", n, n * (n - 1)) for n in range(4, 9)]
    + [("E", 6, 36), ("E", 7, 63), ("E", 8, 120)],
)
def test_positive_root_counts(kind, n, count):
    q = OrdinaryQuiver(range(n), _dynkin(kind, n) if n > 1 else [])
    report = components(q)
    assert report.types == [f"{kind}{n}"]
    roots = positive_roots_simply_laced(q)
    assert len(roots) == count == report.total_roots
    assert all(min(r) >= 0 for r in roots)


def _random_tree(rng, ring, n, labels):
    vertices = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        parent = int(rng.integers(0, i))
        s, t = (parent, i) if rng.integers(0, 2) else (i, parent)
        edges.append((s, t, ring.simple(labels[int(rng.integers(0, len(labels)))])))
    return FusionQuiver(vertices, edges, ring)


@pytest.mark.parametrize("key, labels", [("vect", ["1"]), ("fibonacci", ["1", "tau"])])
def test_random_trees_agree_with_the_reflection_closure(key, labels):
    ring = builtin(key)
    rng = np.random.default_rng(2024)
    for _ in range(12):
        Q = _random_tree(rng, ring, int(rng.integers(2, 7)), labels)
        finite = classify_coxeter(coxeter_graph(Q)).finite
        try:
            reflection_closure(Q, cap=3000)
            closed = True
        except InfiniteType:
            closed = False
        assert finite == closed, [(Q.vertices[s], Q.vertices[t], list(l)) for s, t, l in Q.edges]


@pytest.mark.parametrize("key, params", QUIVERS)
def test_unfolded_quivers_are_bipartite(key, params):
    U = unfold(builtin(key, **params))
    assert U.quiver.is_bipartite()
    for s, t, _ in U.arrows:
        assert U.projection(s) != U.projection(t)
