#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
The [C]-valued bilinear form of a fusion quiver and the action of its reflection group on dimension vectors.

A dimension vector is a ``(|V|, |Irr(M)|)`` object array: row ``v`` is the class in [M] sitting at ``alpha_v``.
"""
from typing import Dict, List, Sequence, Tuple

import equinox as eqx
import numpy as np

from fqk.errors import DimensionMismatch, MissingAction
from fqk.fusion.fpdim import fpdim
from fqk.fusion.module import ModuleCategory, label_matrix, module_fpdims
from fqk.fusion.ring import FusionRing
from fqk.quiver.core import FusionQuiver, dual_label, normalize
from fqk.quiver.coxeter import labeled_graph
from fqk.quiver.ordinary import OrdinaryQuiver

DimensionVector = np.ndarray


class BilinearForm(eqx.Module):
    """``entries[v, w]`` is the ring element <alpha_v, alpha_w>_Q"""

    entries: np.ndarray
    ring: FusionRing

    def __getitem__(self, vw) -> np.ndarray:
        return self.entries[vw]

    def real(self, tol: float = None) -> np.ndarray:
        """The form pushed through FPdim entrywise"""
        d = fpdim(self.ring, tol).dims
        return np.tensordot(np.asarray(self.entries, dtype=np.float64), d, axes=([2], [0]))


def bilinear_form(Q: FusionQuiver) -> BilinearForm:
    """
    ``2[1]`` on the diagonal; an edge ``v -> w`` labeled ``Pi`` adds ``-[dual Pi]`` at ``(v, w)`` and ``-[Pi]`` at
    ``(w, v)``. Loops contribute nothing.

    :raises MissingAction: in partial mode, where only ``real_form`` exists
    """
    Q = normalize(Q)
    if Q.is_partial:
        raise MissingAction("partial-mode quivers only carry the real form; use real_form")
    ring = Q.ring
    n = Q.num_vertices
    B = np.zeros((n, n, ring.rank), dtype=object)
    for v in range(n):
        B[v, v] = 2 * ring.one()
    for s, t, label in Q.edges:
        if s == t:
            continue
        B[s, t] = B[s, t] - dual_label(Q, label)
        B[t, s] = B[t, s] - label
    return BilinearForm(entries=B, ring=ring)


def real_form(Q: FusionQuiver, tol: float = None) -> np.ndarray:
    """<-,->_{|Q|}: 2 on the diagonal, minus the summed FPdims of the edges between two vertices off it"""
    return labeled_graph(Q, tol).gram_matrix()


class ReflectionMatrix(eqx.Module):
    """
    The matrix of sigma_v over [C]: identity away from row ``v``; row ``v`` holds ``-[1]`` on the diagonal and the
    label classes of the edges at ``v``. ``entries`` has shape ``(|V|, |V|, rank)``.
    """

    vertex: int
    entries: np.ndarray


def reflection_matrix(Q: FusionQuiver, v) -> ReflectionMatrix:
    """Row ``v`` of sigma_v: ``-[1]`` at ``v``, ``[Pi]`` at ``w`` for ``w -> v`` and ``[dual Pi]`` for ``v -> w``"""
    Q = normalize(Q)
    if Q.is_partial:
        raise MissingAction("reflection matrices over [C] need ring-element labels")
    v = Q.index(v)
    ring = Q.ring
    n = Q.num_vertices
    R = np.zeros((n, n, ring.rank), dtype=object)
    for w in range(n):
        R[w, w] = ring.one()
    R[v, v] = -ring.one()
    for s, t, label in Q.edges:
        if s == t:
            continue
        if t == v:
            R[v, s] = R[v, s] + label
        elif s == v:
            R[v, t] = R[v, t] + dual_label(Q, label)
    return ReflectionMatrix(vertex=v, entries=R)


def evaluate(R: ReflectionMatrix, M: ModuleCategory) -> np.ndarray:
    """Block matrix on ``[M]^V`` (flattened vertex-major), block ``(v, w)`` the action of ``R[v, w]``"""
    if M.act is None:
        raise MissingAction("evaluating ring-valued matrices needs a module with full action data")
    n = R.entries.shape[0]
    ms = M.msize
    out = np.zeros((n * ms, n * ms), dtype=object)
    for v in range(n):
        for w in range(n):
            out[v * ms : (v + 1) * ms, w * ms : (w + 1) * ms] = np.tensordot(R.entries[v, w], M.act, axes=([0], [0]))
    return out


class ReflectionAction(eqx.Module):
    """
    W(Q) acting on ``[M]^V``. ``blocks[v]`` maps a neighbour ``w`` to the action matrix that carries ``x_w`` into
    the new coefficient at ``v``.

    Args:
        quiver: normalized quiver
        module: the module the coefficients live in
        blocks: per vertex, ``{w: matrix}``

    """

    quiver: FusionQuiver
    module: ModuleCategory
    blocks: Tuple[Dict[int, np.ndarray], ...]

    def __init__(self, Q: FusionQuiver, M: ModuleCategory = None):
        super(ReflectionAction, self).__init__()
        Q = normalize(Q)
        M = Q.default_module() if M is None else M
        blocks: List[Dict[int, np.ndarray]] = [{} for _ in range(Q.num_vertices)]
        for s, t, label in Q.edges:
            if s == t:
                continue
            A = label_matrix(M, label)
            # x_t picks up act(Pi) x_s; x_s picks up act(dual Pi) x_t, the transpose
            blocks[t][s] = blocks[t][s] + A if s in blocks[t] else A
            blocks[s][t] = blocks[s][t] + A.T if t in blocks[s] else A.T
        self.quiver = Q
        self.module = M
        self.blocks = tuple(blocks)

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    def check(self, x: DimensionVector) -> DimensionVector:
        x = np.asarray(x, dtype=object)
        if x.shape != (self.quiver.num_vertices, self.module.msize):
            raise DimensionMismatch(
                f"dimension vector of shape {x.shape}, expected {(self.quiver.num_vertices, self.module.msize)}"
            )
        return x

    def reflect(self, v: int, x: DimensionVector) -> DimensionVector:
        y = x.copy()
        y[v] = -x[v]
        for w, A in self.blocks[v].items():
            y[v] = y[v] + A @ x[w]
        return y

    def apply(self, word: Sequence[int], x: DimensionVector) -> DimensionVector:
        """Applies ``sigma_{word[0]}`` first"""
        for v in word:
            x = self.reflect(v, x)
        return x

    def simple(self, v: int, L: int) -> DimensionVector:
        """``[L] alpha_v``"""
        x = np.zeros((self.quiver.num_vertices, self.module.msize), dtype=object)
        x[v, L] = 1
        return x

    def matrix(self, v: int) -> np.ndarray:
        """sigma_v as a block matrix on flattened ``[M]^V``"""
        n, ms = self.quiver.num_vertices, self.module.msize
        out = np.eye(n * ms, dtype=object)
        out[v * ms : (v + 1) * ms, v * ms : (v + 1) * ms] = -np.eye(ms, dtype=object)
        for w, A in self.blocks[v].items():
            out[v * ms : (v + 1) * ms, w * ms : (w + 1) * ms] = A
        return out


def reflect_dimvec(Q: FusionQuiver, M: ModuleCategory, v, x: DimensionVector) -> DimensionVector:
    """
    sigma_v on a dimension vector: the coefficient at ``v`` becomes ``-x_v + sum act(Pi) x_w`` over edges ``w -> v``
    plus ``sum act(dual Pi) x_w`` over edges ``v -> w``; the other coefficients are unchanged.
    """
    W = ReflectionAction(Q, M)
    return W.reflect(W.quiver.index(v), W.check(x))


class CoxeterElement(eqx.Module):
    """``c = sigma_{ordering[-1]} ... sigma_{ordering[0]}``"""

    action: ReflectionAction
    ordering: Tuple[int, ...]

    def __call__(self, x: DimensionVector) -> DimensionVector:
        return self.action.apply(self.ordering, x)

    def inverse(self, x: DimensionVector) -> DimensionVector:
        return self.action.apply(self.ordering[::-1], x)


def coxeter_element(Q: FusionQuiver, M: ModuleCategory = None, ordering: Sequence = None) -> CoxeterElement:
    """
    :param Q:
    :param M:
    :param ordering: vertex names or indices, first reflection first; the vertex order of ``Q`` by default
    """
    W = ReflectionAction(Q, M)
    if ordering is None:
        order = tuple(range(W.num_vertices))
    else:
        order = tuple(W.quiver.index(v) for v in ordering)
    if sorted(order) != list(range(W.num_vertices)):
        raise DimensionMismatch(f"ordering {ordering} is not a permutation of the vertices")
    return CoxeterElement(action=W, ordering=order)


def unfold_dimvec(x: DimensionVector) -> Tuple[int, ...]:
    """Coordinates in Z^{V x Irr(M)}, in the unfolded vertex order"""
    return tuple(int(c) for c in np.asarray(x, dtype=object).reshape(-1))


def fold_root(root: Sequence[int], num_vertices: int, msize: int) -> DimensionVector:
    """Inverse of ``unfold_dimvec``: the coefficient of ``alpha_v`` is ``sum_L root[(v, L)] [L]``"""
    return np.array([int(c) for c in root], dtype=object).reshape(num_vertices, msize)


def unfolded_reflection(q: OrdinaryQuiver, i: int, x: Sequence[int]) -> Tuple[int, ...]:
    """Simple reflection of a simply-laced quiver, ``x - <alpha_i, x> alpha_i``"""
    C = q.cartan()
    pairing = sum(int(C[i, j]) * int(x[j]) for j in range(len(x)))
    return tuple(int(c) - (pairing if j == i else 0) for j, c in enumerate(x))


def fpdim_image(x: DimensionVector, M: ModuleCategory) -> np.ndarray:
    """Real vector over V: each coefficient pushed through FPdim on [M] (up to the module's common scale)"""
    return np.asarray(x, dtype=np.float64) @ module_fpdims(M)


def is_positive(x: DimensionVector) -> bool:
    x = np.asarray(x, dtype=object)
    return bool(np.all(np.asarray(x >= 0, dtype=bool))) and bool(np.any(np.asarray(x != 0, dtype=bool)))
