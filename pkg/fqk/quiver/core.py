#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Fusion quivers: directed graphs whose edges carry classes of objects of a fusion category, or (partial mode) bare
action matrices on a module.
"""
from typing import Optional, Sequence, Tuple, Union

import equinox as eqx
import networkx as nx
import numpy as np

from fqk.errors import DimensionMismatch, NotReflectable
from fqk.fusion.module import ActionLabel, Label, ModuleCategory, regular_module
from fqk.fusion.ring import FusionRing, dual, is_zero


class FusionQuiver(eqx.Module):
    """
    A fusion quiver.

    Args:
        vertices: ordered vertex names; this order is the default ordering for Coxeter elements
        edges: ``(source, target, label)`` with vertex names or indices; a label is a ring element or an ``ActionLabel``
        ring: the fusion ring the labels live in, ``None`` in partial mode
        module: the default module for unfolding; the regular module when omitted in full mode

    """

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[int, int, Label], ...]
    ring: Optional[FusionRing]
    module: Optional[ModuleCategory]

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Sequence[Tuple[Union[str, int], Union[str, int], Label]],
        ring: FusionRing = None,
        module: ModuleCategory = None,
    ):
        super(FusionQuiver, self).__init__()
        self.vertices = tuple(str(v) for v in vertices)
        self.ring = ring
        self.module = module

        resolved = []
        for s, t, label in edges:
            s, t = self._vertex_index(s), self._vertex_index(t)
            if not isinstance(label, ActionLabel):
                label = np.asarray(label, dtype=object)
                if ring is not None and label.shape != (ring.rank,):
                    raise DimensionMismatch(f"edge label of shape {label.shape} for a ring of rank {ring.rank}")
            resolved.append((s, t, label))
        self.edges = tuple(resolved)

    def _vertex_index(self, v) -> int:
        if isinstance(v, (int, np.integer)):
            if not 0 <= v < len(self.vertices):
                raise DimensionMismatch(f"vertex index {v} out of range")
            return int(v)
        try:
            return self.vertices.index(str(v))
        except ValueError as e:
            raise DimensionMismatch(f"unknown vertex {v!r}") from e

    def index(self, v) -> int:
        return self._vertex_index(v)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_partial(self) -> bool:
        return any(isinstance(label, ActionLabel) for _, _, label in self.edges) or self.ring is None

    def default_module(self) -> ModuleCategory:
        if self.module is not None:
            return self.module
        if self.ring is None:
            raise DimensionMismatch("a partial-mode quiver needs an explicit module")
        return regular_module(self.ring)

    def with_edges(self, edges) -> "FusionQuiver":
        return FusionQuiver(self.vertices, edges, self.ring, self.module)

    def with_module(self, module: ModuleCategory) -> "FusionQuiver":
        return FusionQuiver(self.vertices, self.edges, self.ring, module)

    def orientation(self) -> nx.MultiDiGraph:
        G = nx.MultiDiGraph()
        G.add_nodes_from(range(self.num_vertices))
        G.add_edges_from((s, t) for s, t, _ in self.edges)
        return G


def _label_is_zero(label: Label) -> bool:
    if isinstance(label, ActionLabel):
        return label.is_zero()
    return is_zero(label)


def _label_sum(a: Label, b: Label) -> Label:
    if isinstance(a, ActionLabel) != isinstance(b, ActionLabel):
        raise DimensionMismatch("cannot merge a ring-element label with an action-matrix label")
    return a + b


def dual_label(Q: FusionQuiver, label: Label) -> Label:
    """Left dual (equal to the right dual in [C]); the transpose in partial mode"""
    if isinstance(label, ActionLabel):
        return label.transpose()
    return dual(Q.ring, label)


def normalize(Q: FusionQuiver) -> FusionQuiver:
    """
    Merges parallel same-direction edges by adding their labels and drops edges with zero label. The result has at
    most one edge per ordered pair, in order of first appearance.
    """
    merged = {}
    for s, t, label in Q.edges:
        merged[(s, t)] = label if (s, t) not in merged else _label_sum(merged[(s, t)], label)
    return Q.with_edges([(s, t, label) for (s, t), label in merged.items() if not _label_is_zero(label)])


def is_sink(Q: FusionQuiver, v) -> bool:
    v = Q.index(v)
    return all(s != v for s, _, _ in Q.edges)


def is_source(Q: FusionQuiver, v) -> bool:
    v = Q.index(v)
    return all(t != v for _, t, _ in Q.edges)


def reflect_quiver(Q: FusionQuiver, v) -> FusionQuiver:
    """
    Reverses every arrow at a sink or source ``v`` and replaces its label by the dual.

    :raises NotReflectable: when ``v`` is neither a sink nor a source
    """
    v = Q.index(v)
    if not (is_sink(Q, v) or is_source(Q, v)):
        raise NotReflectable(f"vertex {Q.vertices[v]!r} is neither a sink nor a source")
    edges = []
    for s, t, label in Q.edges:
        if v in (s, t):
            edges.append((t, s, dual_label(Q, label)))
        else:
            edges.append((s, t, label))
    return Q.with_edges(edges)


def has_oriented_cycle(Q: FusionQuiver) -> bool:
    G = Q.orientation()
    return nx.number_of_selfloops(G) > 0 or not nx.is_directed_acyclic_graph(G)


def admissible_sink_ordering(Q: FusionQuiver) -> Optional[Tuple[str, ...]]:
    """
    An ordering ``v_1, ..., v_n`` such that ``v_i`` is a sink once ``v_1, ..., v_{i-1}`` have been reflected, or
    ``None`` when ``Q`` has a loop or an oriented cycle. Ties go to the vertex listed first.
    """
    if has_oriented_cycle(Q):
        return None

    arrows = [(s, t) for s, t, _ in Q.edges]
    order = []
    remaining = list(range(Q.num_vertices))
    while remaining:
        for v in remaining:
            if all(s != v for s, _ in arrows):
                break
        else:
            raise NotReflectable(f"no sink among {[Q.vertices[v] for v in remaining]}")
        # reflecting at a sink turns it into a source
        arrows = [(t, s) if v in (s, t) else (s, t) for s, t in arrows]
        order.append(v)
        remaining.remove(v)

    return tuple(Q.vertices[v] for v in order)
