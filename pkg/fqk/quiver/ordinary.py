#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
from typing import Dict, Hashable, Sequence, Tuple

import equinox as eqx
import networkx as nx
import numpy as np


class OrdinaryQuiver(eqx.Module):
    """
    A quiver over Vect: vertices plus arrows with multiplicities. Used for McKay quivers and unfoldings.

    Args:
        vertices: hashable vertex names
        arrows: ``(source index, target index, multiplicity)``; repeated pairs are summed, zero multiplicities dropped

    """

    vertices: Tuple[Hashable, ...]
    arrows: Tuple[Tuple[int, int, int], ...]

    def __init__(self, vertices: Sequence[Hashable], arrows: Sequence[Tuple[int, int, int]]):
        super(OrdinaryQuiver, self).__init__()
        self.vertices = tuple(vertices)
        merged: Dict[Tuple[int, int], int] = {}
        for s, t, mult in arrows:
            merged[(int(s), int(t))] = merged.get((int(s), int(t)), 0) + int(mult)
        self.arrows = tuple(sorted((s, t, m) for (s, t), m in merged.items() if m != 0))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return sum(m for _, _, m in self.arrows)

    def arrow_dict(self) -> Dict[Tuple[Hashable, Hashable], int]:
        return {(self.vertices[s], self.vertices[t]): m for s, t, m in self.arrows}

    def relabel(self, mapping) -> "OrdinaryQuiver":
        return OrdinaryQuiver([mapping(v) for v in self.vertices], self.arrows)

    def adjacency(self) -> np.ndarray:
        """Directed arrow counts, ``A[s, t]``"""
        A = np.zeros((self.num_vertices, self.num_vertices), dtype=np.int64)
        for s, t, m in self.arrows:
            A[s, t] += m
        return A

    def cartan(self) -> np.ndarray:
        """Symmetrized form 2I - A - A^T; a loop lowers its diagonal entry by 2"""
        A = self.adjacency()
        return 2 * np.eye(self.num_vertices, dtype=np.int64) - A - A.T

    def to_networkx(self, directed: bool = False) -> nx.Graph:
        """
        Graph on vertex indices. Undirected edges carry the total multiplicity of arrows in both directions as
        ``multiplicity``.
        """
        G = nx.DiGraph() if directed else nx.Graph()
        G.add_nodes_from(range(self.num_vertices))
        for s, t, m in self.arrows:
            if G.has_edge(s, t):
                G[s][t]["multiplicity"] += m
            else:
                G.add_edge(s, t, multiplicity=m)
        return G

    def is_bipartite(self) -> bool:
        G = self.to_networkx()
        if nx.number_of_selfloops(G) > 0:
            return False
        return nx.is_bipartite(G)
