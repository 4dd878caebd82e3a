#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import math

import pytest

import numpy as np
from jax import config

config.update("jax_enable_x64", True)

from fqk.catalog import builtin
from fqk.errors import DimensionMismatch, MissingAction, OutOfRange, SignIncoherentInput
from fqk.fusion.fpdim import fpdim, perron_eigenvalue
from fqk.fusion.module import (
    ActionLabel,
    ModuleCategory,
    act_on,
    label_matrix,
    mckay_quiver,
    module_fpdims,
    nonzero_action_check,
    regular_module,
    validate_module,
)
from fqk.quiver.core import normalize
from fqk.unfolding.unfold import unfold


@pytest.mark.parametrize("key", ["vect", "rep_s2", "rep_s3", "rep_s4", "fibonacci", "verlinde_sl2"])
def test_regular_modules(key):
    report = validate_module(regular_module(builtin(key)))
    assert report.ok, report.invariants()
    assert not report.warnings


@pytest.mark.parametrize("level", [2, 4, 6, 8])
def test_type_d_modules(level):
    M = builtin("verlinde_typeD", level=level)
    assert M.msize == level // 2 + 2
    assert M.mnames[-2:] == ("L+", "L-")
    report = validate_module(M)
    assert report.ok, report.invariants()


def test_type_d_needs_even_level():
    with pytest.raises(OutOfRange):
        builtin("verlinde_typeD", level=3)


def test_broken_module():
    M = builtin("verlinde_typeD", level=4)
    act = M.act.copy()
    act[1, 0, 0] = 1
    report = validate_module(ModuleCategory(M.ring, M.mnames, act))
    assert "action" in report.invariants()
    assert "transpose" not in report.invariants()

    act = M.act.copy()
    act[0, 1, 1] = 0
    assert "unit" in validate_module(ModuleCategory(M.ring, M.mnames, act)).invariants()


def test_decomposable_module_warns():
    M = ModuleCategory(builtin("vect"), ["p", "q"], [[[1, 0], [0, 1]]])
    report = validate_module(M)
    assert report.ok
    assert len(report.warnings) == 1


def test_partial_module():
    M = builtin("sl3at5_action")
    assert M.is_partial
    assert validate_module(M).ok
    X = M.resolve("X")
    np.testing.assert_almost_equal(X.dimension(), 2.0 * math.cos(math.pi / 5.0))
    assert np.array_equal(M.resolve("Y").matrix, X.transpose().matrix)
    assert X.transpose().name == "X*"
    with pytest.raises(MissingAction):
        M.resolve("Z")
    with pytest.raises(MissingAction):
        label_matrix(M, np.array([1, 0], dtype=object))
    with pytest.raises(DimensionMismatch):
        label_matrix(M, ActionLabel(np.eye(2, dtype=object)))


def test_action_on_regular_module():
    ring = builtin("fibonacci")
    M = regular_module(ring)
    tau = ring.simple("tau")
    assert M.format(act_on(M, tau, M.simple("tau"))) == "[1] + [tau]"
    assert M.format(act_on(M, tau, M.element({"1": 2}))) == "2*[tau]"
    with pytest.raises(DimensionMismatch):
        act_on(M, tau, np.array([1, 0, 0], dtype=object))


def test_nonzero_action_check():
    ring = builtin("rep_s3")
    M = regular_module(ring)
    assert nonzero_action_check(M, ring.simple("V"), M.simple("S"))
    assert nonzero_action_check(M, -ring.simple("S"), M.simple("V"))
    with pytest.raises(SignIncoherentInput):
        nonzero_action_check(M, ring.element({"1": 1, "S": -1}), M.simple("V"))
    with pytest.raises(OutOfRange):
        nonzero_action_check(M, ring.simple("V"), M.element([0, 0, 0]))
    with pytest.raises(OutOfRange):
        nonzero_action_check(M, ring.simple("V"), -M.simple("S"))


def test_mckay_quiver():
    ring = builtin("fibonacci")
    q = mckay_quiver(regular_module(ring), ring.simple("tau"))
    assert q.arrow_dict() == {("1", "tau"): 1, ("tau", "1"): 1, ("tau", "tau"): 1}
    assert not q.is_bipartite()

    s = mckay_quiver(regular_module(ring), ring.simple("tau"), separated=True)
    assert s.num_vertices == 4
    assert s.num_arrows == 3
    assert s.is_bipartite()
    assert (("s", "tau"), ("t", "tau")) in s.arrow_dict()


def test_mckay_quiver_of_s4():
    ring = builtin("rep_s4")
    q = mckay_quiver(regular_module(ring), ring.simple("V"))
    assert q.num_arrows == 12
    assert q.arrow_dict()[("V", "V")] == 1


def test_module_fpdims():
    np.testing.assert_almost_equal(module_fpdims(regular_module(builtin("rep_s4"))), [1, 1, 2, 3, 3])
    d = module_fpdims(builtin("verlinde_typeD", level=4))
    np.testing.assert_almost_equal(d / d[0], [1, math.sqrt(3.0), 1, 1])


def test_type_d_action():
    M = builtin("verlinde_typeD", level=4)
    ring = M.ring
    assert M.format(act_on(M, ring.simple("V1"), M.simple("L1"))) == "[L0] + [L+] + [L-]"
    assert M.format(act_on(M, ring.simple("V1"), M.simple("L+"))) == "[L1]"
    assert nonzero_action_check(M, ring.simple("V4"), M.simple("L+"))
    assert not nonzero_action_check(M, ring.zero(), M.simple("L+"))


def test_mckay_quivers_of_the_unfolding_examples():
    M = builtin("sl3at5_action")
    q = mckay_quiver(M, M.resolve("X"))
    assert q.num_vertices == 6
    assert q.num_arrows == 9

    ring = builtin("rep_s3")
    s = mckay_quiver(regular_module(ring), ring.simple("V"), separated=True)
    assert s.num_vertices == 6
    assert s.num_arrows == 5
    # same arrows as the unfolding of a -V-> b
    assert s.relabel(lambda v: ({"s": "a", "t": "b"}[v[0]], v[1])).arrow_dict() == unfold(builtin("s3_std_quiver")).quiver.arrow_dict()


@pytest.mark.parametrize(
    "key, params",
    [
        ("s2_sign_quiver", {}),
        ("sn_sign_quiver", {"n": 3}),
        ("sn_sign_quiver", {"n": 4}),
        ("s3_std_quiver", {}),
        ("s4_std_quiver", {}),
        ("fib_edge_quiver", {}),
        ("verlinde_edge_quiver", {"level": 4, "module": "regular"}),
        ("verlinde_edge_quiver", {"level": 6, "module": "typeD"}),
        ("sl3at5_quiver", {}),
        ("vect_kronecker", {}),
    ],
)
def test_separated_mckay_quiver_is_the_unfolding(key, params):
    Q = normalize(builtin(key, **params))
    M = Q.default_module()
    (s, t, label), = Q.edges
    names = {"s": Q.vertices[s], "t": Q.vertices[t]}
    mckay = mckay_quiver(M, label, separated=True).relabel(lambda v: (names[v[0]], v[1]))
    U = unfold(Q, M)
    assert mckay.vertices == U.vertices
    assert mckay.arrow_dict() == U.quiver.arrow_dict()


@pytest.mark.parametrize(
    "M",
    [regular_module(builtin(key, **params)) for key, params in [
        ("vect", {}), ("rep_s2", {}), ("rep_s3", {}), ("rep_s4", {}), ("fibonacci", {}),
        ("verlinde_sl2", {"level": 3}), ("verlinde_sl2", {"level": 6}),
    ]] + [builtin("verlinde_typeD", level=level) for level in (2, 4, 6)],
)
def test_action_matrices_have_the_fpdim_as_perron_eigenvalue(M):
    dims = fpdim(M.ring).dims
    for i in range(M.ring.rank):
        np.testing.assert_allclose(perron_eigenvalue(M.act[i]), dims[i], rtol=1e-7)


def test_partial_action_has_the_golden_ratio_as_perron_eigenvalue():
    M = builtin("sl3at5_action")
    for name in ("X", "Y"):
        np.testing.assert_allclose(perron_eigenvalue(M.labels[name].matrix), (1.0 + math.sqrt(5.0)) / 2.0, rtol=1e-7)
