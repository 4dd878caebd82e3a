#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Unfolding a fusion quiver over a module category into an ordinary quiver on ``V x Irr(M)``.
"""
from typing import Hashable, List, Tuple

import equinox as eqx
import numpy as np

from fqk.fusion.fpdim import fpdim
from fqk.fusion.module import ActionLabel, ModuleCategory, label_dimension, label_matrix, module_fpdims
from fqk.fusion.ring import Violation
from fqk.quiver.core import FusionQuiver, normalize
from fqk.quiver.ordinary import OrdinaryQuiver


class UnfoldedQuiver(eqx.Module):
    """
    The ordinary quiver Q_M. Vertex ``(v, L)`` sits at index ``v * |Irr(M)| + L``, so a dimension vector of shape
    ``(|V|, |Irr(M)|)`` flattens onto the unfolded vertex order.

    Args:
        quiver: the ordinary quiver on pairs ``(vertex name, module simple name)``
        source: the normalized fusion quiver that was unfolded
        module: the module category it was unfolded over

    """

    quiver: OrdinaryQuiver
    source: FusionQuiver
    module: ModuleCategory

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Tuple[int, int, int], ...]:
        return self.quiver.arrows

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    @property
    def num_arrows(self) -> int:
        return self.quiver.num_arrows

    def projection(self, i: int) -> int:
        """Index of the fusion-quiver vertex under unfolded vertex ``i``"""
        return i // self.module.msize


def unfold(Q: FusionQuiver, M: ModuleCategory = None) -> UnfoldedQuiver:
    """
    Builds Q_M: vertices ``V x Irr(M)`` and, for every edge ``s -> t`` labeled ``Pi``, ``act(Pi)[L', L]`` arrows
    ``(s, L) -> (t, L')``.

    :param Q: fusion quiver; normalized first
    :param M: module category, ``Q.default_module()`` when omitted
    :raises MissingAction: when a label cannot act on ``M``
    """
    Q = normalize(Q)
    M = Q.default_module() if M is None else M
    ms = M.msize

    vertices = [(v, L) for v in Q.vertices for L in M.mnames]
    arrows = []
    for s, t, label in Q.edges:
        A = label_matrix(M, label)
        for Lp, L in np.argwhere(np.asarray(A != 0, dtype=bool)):
            arrows.append((s * ms + int(L), t * ms + int(Lp), int(A[Lp, L])))

    return UnfoldedQuiver(quiver=OrdinaryQuiver(vertices, arrows), source=Q, module=M)


def fp_degree_check(U: UnfoldedQuiver, tol: float = 1e-8) -> List[Violation]:
    """
    Checks ``sum_L' mult((s, L) -> (t, L')) FPdim(L') = FPdim(Pi_e) FPdim(L)`` for every edge and every simple ``L``.
    Module dimensions are only known up to scale, which the identity does not see.
    """
    Q, M = U.source, U.module
    d = module_fpdims(M)
    fp = None if Q.ring is None else fpdim(Q.ring)
    out = []
    for s, t, label in Q.edges:
        A = np.asarray(label_matrix(M, label), dtype=np.float64)
        if isinstance(label, ActionLabel):
            f = label_dimension(label)
        else:
            f = float(np.dot(np.asarray(label, dtype=np.float64), fp.dims))
        lhs = A.T @ d
        for L in np.flatnonzero(np.abs(lhs - f * d) > tol * max(1.0, f)):
            out.append(
                Violation(
                    "fp_degree",
                    (Q.vertices[s], Q.vertices[t], M.mnames[L]),
                    f"weighted out-degree {lhs[L]:.12g} != {f:.12g} * {d[L]:.12g}",
                )
            )
    return out
