#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Builtin fusion rings. The representation rings of S2, S3 and S4 are generated from their character tables.
"""
from typing import Sequence

import numpy as np

from fqk.errors import OutOfRange
from fqk.fusion.ring import FusionRing


def character_ring(names: Sequence[str], class_sizes: Sequence[int], characters: Sequence[Sequence[int]]) -> FusionRing:
    """
    Representation ring of a finite group with real characters:
    ``N[i][j][k] = (1/|G|) sum_c |c| chi_i(c) chi_j(c) chi_k(c)``.

    :param names: irreducible names, trivial first
    :param class_sizes: conjugacy class sizes, identity class first
    :param characters: one row per irreducible
    """
    order = sum(class_sizes)
    chars = [[int(v) for v in row] for row in characters]
    r = len(names)
    N = np.zeros((r, r, r), dtype=object)
    for i in range(r):
        for j in range(r):
            for k in range(r):
                total = sum(s * chars[i][c] * chars[j][c] * chars[k][c] for c, s in enumerate(class_sizes))
                if total % order:
                    raise ValueError(f"character inner product {total}/{order} is not an integer")
                N[i, j, k] = total // order
    return FusionRing(names, N, unit=0)


def vect() -> FusionRing:
    return FusionRing(["1"], [[[1]]])


def rep_s2() -> FusionRing:
    return character_ring(["1", "S"], [1, 1], [[1, 1], [1, -1]])


def rep_s3() -> FusionRing:
    # classes: e, transpositions, 3-cycles
    return character_ring(["1", "S", "V"], [1, 3, 2], [[1, 1, 1], [1, -1, 1], [2, 0, -1]])


def rep_s4() -> FusionRing:
    # classes: e, transpositions, double transpositions, 3-cycles, 4-cycles
    return character_ring(
        ["1", "S", "W", "V", "V'"],
        [1, 6, 3, 8, 6],
        [
            [1, 1, 1, 1, 1],
            [1, -1, 1, 1, -1],
            [2, 0, 2, -1, 0],
            [3, 1, -1, 0, -1],
            [3, -1, -1, 0, 1],
        ],
    )


def rep_sn(n: int) -> FusionRing:
    try:
        return {2: rep_s2, 3: rep_s3, 4: rep_s4}[int(n)]()
    except KeyError as e:
        raise OutOfRange(f"representation rings are built in for n = 2, 3, 4 only, got {n}") from e


def fibonacci() -> FusionRing:
    N = np.zeros((2, 2, 2), dtype=object)
    N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = 1
    N[1, 1, 0] = N[1, 1, 1] = 1
    return FusionRing(["1", "tau"], N)


def _fusion_range(level: int, i: int, j: int) -> range:
    return range(abs(i - j), min(i + j, 2 * level - i - j) + 1, 2)


def verlinde_sl2(level: int) -> FusionRing:
    """
    Truncated sl2 fusion rules at ``level``: simples ``V0..V_level`` and ``V_i V_j = sum V_k`` over
    ``|i - j| <= k <= min(i + j, 2 level - i - j)`` with ``i + j + k`` even.
    """
    level = int(level)
    if level < 1:
        raise OutOfRange(f"level must be at least 1, got {level}")
    r = level + 1
    N = np.zeros((r, r, r), dtype=object)
    for i in range(r):
        for j in range(r):
            for k in _fusion_range(level, i, j):
                N[i, j, k] = 1
    return FusionRing([f"V{i}" for i in range(r)], N)
