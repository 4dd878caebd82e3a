#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import numpy as np

from fqk.catalog.rings import verlinde_sl2
from fqk.errors import OutOfRange
from fqk.fusion.module import ActionLabel, ModuleCategory

SL3_AT_5_SIMPLES = ("1", "X", "Y", "L20", "L11", "L02")

# L -> L' whenever L' is a summand of X (x) L
SL3_AT_5_X_ARROWS = (
    ("1", "X"),
    ("X", "Y"),
    ("X", "L20"),
    ("Y", "1"),
    ("Y", "L11"),
    ("L20", "L11"),
    ("L11", "L02"),
    ("L11", "X"),
    ("L02", "Y"),
)


def verlinde_typeD(level: int) -> ModuleCategory:
    """
    The type-D module over ``verlinde_sl2(level)`` for even ``level``: simples ``L0 .. L_{level/2 - 1}``, ``L+``,
    ``L-``. ``V1`` moves along the D-shaped graph with the fork at ``L_{level/2 - 1}``; the other simples act through
    ``V1 V_k = V_{k-1} + V_{k+1}``.
    """
    level = int(level)
    if level < 2 or level % 2:
        raise OutOfRange(f"the type-D module needs an even level >= 2, got {level}")
    ring = verlinde_sl2(level)
    half = level // 2
    names = [f"L{i}" for i in range(half)] + ["L+", "L-"]
    ms = len(names)
    plus, minus, fork = half, half + 1, half - 1

    V1 = np.zeros((ms, ms), dtype=object)
    for i in range(half - 1):
        V1[i + 1, i] = V1[i, i + 1] = 1
    for end in (plus, minus):
        V1[end, fork] = V1[fork, end] = 1

    act = [np.eye(ms, dtype=object), V1]
    for _ in range(2, ring.rank):
        act.append(V1 @ act[-1] - act[-2])
    return ModuleCategory(ring, names, np.stack(act))


def sl3at5_action() -> ModuleCategory:
    """
    Partial module: the six simples at level 5 together with the action of ``X`` and of its dual ``Y``, no ring
    """
    ms = len(SL3_AT_5_SIMPLES)
    X = np.zeros((ms, ms), dtype=object)
    for src, dst in SL3_AT_5_X_ARROWS:
        X[SL3_AT_5_SIMPLES.index(dst), SL3_AT_5_SIMPLES.index(src)] = 1
    return ModuleCategory.partial(
        SL3_AT_5_SIMPLES, {"X": ActionLabel(X, name="X"), "Y": ActionLabel(X.T, name="Y")}
    )
