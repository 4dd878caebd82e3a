#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
The labeled graph |Q|, the Coxeter graph Gamma_Q, and recognition of finite Coxeter diagrams.
"""
import math
from numbers import Real
from typing import Dict, Hashable, List, NamedTuple, Sequence, Tuple, Union

import equinox as eqx
import networkx as nx
import numpy as np
from scipy import linalg

from fqk.errors import InconsistentVerdict, MissingAction
from fqk.fusion.fpdim import CoxeterLabel, angle_label, fpdim, two_cos
from fqk.fusion.module import label_dimension
from fqk.quiver.core import FusionQuiver, normalize
from fqk.utils.misc import get_tol


class _Graph:
    """Undirected graph on ordered vertices backed by ``networkx``; edge values live in the ``weight`` attribute"""

    _zero_value: Real = 0

    def __init__(self, vertices: Sequence[Hashable], definition: Dict[Tuple[int, int], Real], loops: Sequence[int] = ()):
        self._vertices = tuple(vertices)
        for start, stop in definition:
            if not (0 <= start < len(self._vertices) and 0 <= stop < len(self._vertices)):
                raise ValueError(f"edge {(start, stop)} uses a vertex outside 0..{len(self._vertices) - 1}")
            if start == stop:
                raise ValueError("loops are passed separately")
            if (stop, start) in definition and definition[(stop, start)] != definition[(start, stop)]:
                raise ValueError(f"Multiple values given for edge {(start, stop)}")

        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(len(self._vertices)))
        for (start, stop), value in definition.items():
            if value != self._zero_value:
                self._graph.add_edge(start, stop, weight=value)
        self._loops = frozenset(loops)

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        return self._vertices

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def loops(self) -> frozenset:
        return self._loops

    def edges(self) -> Dict[Tuple[int, int], Real]:
        return {(min(a, b), max(a, b)): d["weight"] for a, b, d in self._graph.edges(data=True)}

    def off_diagonal(self, value: Real) -> float:
        raise NotImplementedError

    def gram_matrix(self) -> np.ndarray:
        """Symmetric real form: 2 on the diagonal, minus the edge value off it"""
        n = len(self._vertices)
        B = 2.0 * np.eye(n)
        for (a, b), value in self.edges().items():
            B[a, b] = B[b, a] = -self.off_diagonal(value)
        return B

    def coxeter_labels(self) -> Dict[Tuple[int, int], CoxeterLabel]:
        raise NotImplementedError


class LabeledGraph(_Graph):
    """|Q|: edges labeled by non-negative reals (Frobenius-Perron dimensions); zero edges are dropped"""

    def off_diagonal(self, value: Real) -> float:
        return float(value)

    def coxeter_labels(self, tol: float = None) -> Dict[Tuple[int, int], CoxeterLabel]:
        return {k: angle_label(v, tol) for k, v in self.edges().items()}


class CoxeterGraph(_Graph):
    """Gamma_Q: edges labeled by m in {3, 4, ...} or infinity; label 2 means no edge"""

    _zero_value = 2

    def __init__(self, vertices, definition, loops=()):
        for k, m in definition.items():
            if not (m == math.inf or (float(m).is_integer() and m >= 2)):
                raise ValueError(f"Coxeter label {m} on edge {k} must be an integer >= 2 or infinity")
        super().__init__(vertices, {k: (m if m == math.inf else int(m)) for k, m in definition.items()}, loops)

    def off_diagonal(self, value: Real) -> float:
        return two_cos(value)

    def coxeter_labels(self, tol: float = None) -> Dict[Tuple[int, int], CoxeterLabel]:
        return self.edges()


AnyGraph = Union[LabeledGraph, CoxeterGraph]


def labeled_graph(Q: FusionQuiver, tol: float = None) -> LabeledGraph:
    """
    Forgets orientation and labels each edge by the Frobenius-Perron dimension of its label. Edges joining the same
    two vertices in either direction add up.
    """
    Q = normalize(Q)
    fp = None if Q.ring is None else fpdim(Q.ring, tol)
    weights: Dict[Tuple[int, int], float] = {}
    loops = set()
    for s, t, label in Q.edges:
        if isinstance(label, np.ndarray):
            if fp is None:
                raise MissingAction("ring-element labels need a ring")
            f = float(np.dot(np.asarray(label, dtype=np.float64), fp.dims))
        else:
            f = label_dimension(label)
        if s == t:
            loops.add(s)
            continue
        key = (min(s, t), max(s, t))
        weights[key] = weights.get(key, 0.0) + f
    return LabeledGraph(Q.vertices, weights, loops)


def coxeter_graph(Q: FusionQuiver, tol: float = None) -> CoxeterGraph:
    """Gamma_Q: every edge label ``f`` of |Q| replaced by ``m`` with ``f = 2cos(pi/m)``, or infinity when ``f >= 2``"""
    G = labeled_graph(Q, tol)
    return CoxeterGraph(G.vertices, G.coxeter_labels(tol), G.loops)


class ComponentType(NamedTuple):
    vertices: Tuple[Hashable, ...]
    type: str
    finite: bool
    coxeter_number: CoxeterLabel
    name: str


class CoxeterClassification(eqx.Module):
    """Per-component types of a Coxeter graph, components sorted by their smallest vertex index"""

    components: Tuple[ComponentType, ...]

    @property
    def finite(self) -> bool:
        return all(c.finite for c in self.components)

    @property
    def types(self) -> List[str]:
        return [c.type for c in self.components]

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1

    def summary(self) -> str:
        return " + ".join(c.name for c in self.components)


COXETER_NUMBERS = {"E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6, "H3": 10, "H4": 30}
POSITIVE_ROOTS = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6, "H3": 15, "H4": 60}


def coxeter_number(tag: str) -> CoxeterLabel:
    """Coxeter number of a finite irreducible type; infinity for ``infinite``"""
    if tag == "infinite":
        return math.inf
    if tag in COXETER_NUMBERS:
        return COXETER_NUMBERS[tag]
    if tag.startswith("I2("):
        return int(tag[3:-1])
    family, n = tag[0], int(tag[1:])
    return {"A": n + 1, "B": 2 * n, "D": 2 * n - 2}[family]


def positive_root_count(tag: str) -> Union[int, float]:
    if tag == "infinite":
        return math.inf
    if tag in POSITIVE_ROOTS:
        return POSITIVE_ROOTS[tag]
    if tag.startswith("I2("):
        return int(tag[3:-1])
    family, n = tag[0], int(tag[1:])
    return {"A": n * (n + 1) // 2, "B": n * n, "D": n * (n - 1)}[family]


def is_positive_definite(B: np.ndarray, tol: float = None) -> bool:
    """Leading principal minor test"""
    tol = get_tol(tol)
    return all(linalg.det(B[:k, :k]) > tol for k in range(1, B.shape[0] + 1))


def _path_order(G: nx.Graph) -> List[int]:
    ends = sorted(v for v in G.nodes if G.degree(v) <= 1)
    order = [ends[0]]
    while len(order) < G.number_of_nodes():
        order.append(next(w for w in G.neighbors(order[-1]) if w not in order))
    return order


def _name_finite(G: nx.Graph, labels: Dict[Tuple[int, int], CoxeterLabel]) -> str:
    """Names a connected positive definite Coxeter graph"""
    n = G.number_of_nodes()
    if n == 1:
        return "A1"

    def label(a, b):
        return labels[(min(a, b), max(a, b))]

    branch = [v for v in G.nodes if G.degree(v) >= 3]
    if branch:
        if len(branch) != 1 or G.degree(branch[0]) != 3 or any(m != 3 for m in labels.values()):
            raise InconsistentVerdict("positive definite graph with an unrecognized branching")
        center = branch[0]
        arms = []
        for start in G.neighbors(center):
            length, prev, cur = 1, center, start
            while G.degree(cur) == 2:
                prev, cur = cur, next(w for w in G.neighbors(cur) if w != prev)
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[:2] == (1, 1):
            return f"D{n}"
        if arms in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            return f"E{n}"
        raise InconsistentVerdict(f"positive definite graph with arms {arms}")

    order = _path_order(G)
    path_labels = [label(a, b) for a, b in zip(order, order[1:])]
    special = [(i, m) for i, m in enumerate(path_labels) if m != 3]
    if not special:
        return f"A{n}"
    if n == 2:
        m = path_labels[0]
        return {4: "B2", 6: "G2"}.get(m, f"I2({m})")
    if len(special) == 1:
        pos, m = special[0]
        at_end = pos in (0, n - 2)
        if m == 4 and at_end:
            return f"B{n}"
        if m == 4 and n == 4 and pos == 1:
            return "F4"
        if m == 5 and at_end and n in (3, 4):
            return f"H{n}"
    raise InconsistentVerdict(f"positive definite path with labels {path_labels}")


def classify_coxeter(G: AnyGraph, tol: float = None) -> CoxeterClassification:
    """
    Classifies each connected component as a finite Coxeter type or as infinite.

    Finiteness is decided by positive definiteness of the symmetric form (2 on the diagonal, ``-f`` or
    ``-2cos(pi/m)`` off it); finite components are then named by shape.

    Args:
        G: a ``LabeledGraph`` or ``CoxeterGraph``
        tol: tolerance for the leading minors

    Returns:
        ``CoxeterClassification``

    """
    B = G.gram_matrix()
    components = sorted((sorted(c) for c in nx.connected_components(G.graph)), key=lambda c: c[0])
    out = []
    for comp in components:
        names = tuple(G.vertices[v] for v in comp)
        sub = G.graph.subgraph(comp)
        if G.loops.intersection(comp) or not is_positive_definite(B[np.ix_(comp, comp)], tol):
            name = "infinite"
            if len(comp) == 2 and not G.loops.intersection(comp):
                # a two-vertex graph is infinite only through an edge label >= 2
                name = "I2(∞)"
            out.append(ComponentType(names, "infinite", False, math.inf, name))
            continue
        labels = {k: v for k, v in G.coxeter_labels(tol).items() if k[0] in comp}
        tag = _name_finite(sub, labels)
        out.append(ComponentType(names, tag, True, coxeter_number(tag), tag))
    return CoxeterClassification(components=tuple(out))


def coxeter_element_order(G: AnyGraph, ordering: Sequence[int] = None, cap: int = 1000) -> CoxeterLabel:
    """
    Order of the Coxeter element ``s_n ... s_1`` in the geometric representation of ``G``.

    :param G:
    :param ordering: vertex indices, first reflection first; vertex order by default
    :param cap: powers tried before reporting infinity
    :return:
    """
    if G.loops:
        return math.inf
    B = G.gram_matrix()
    n = B.shape[0]
    ordering = list(range(n)) if ordering is None else list(ordering)
    c = np.eye(n)
    for v in ordering:
        s = np.eye(n)
        s[v, :] -= B[v, :]
        c = s @ c
    power = np.eye(n)
    for k in range(1, cap + 1):
        power = c @ power
        if np.allclose(power, np.eye(n), atol=1e-6):
            return k
        if not np.all(np.isfinite(power)):
            break
    return math.inf
