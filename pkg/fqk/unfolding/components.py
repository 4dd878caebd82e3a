#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Connected components of an ordinary (unfolded) quiver, their ADE types, and positive roots by reflection closure.
"""
import math
from collections import Counter, deque
from typing import Hashable, List, NamedTuple, Set, Tuple, Union

import equinox as eqx

from fqk.errors import InfiniteComponent
from fqk.quiver.coxeter import CoxeterGraph, classify_coxeter, positive_root_count
from fqk.quiver.ordinary import OrdinaryQuiver
from fqk.unfolding.unfold import UnfoldedQuiver

AnyQuiver = Union[OrdinaryQuiver, UnfoldedQuiver]


class UnfoldedComponent(NamedTuple):
    vertices: Tuple[Hashable, ...]
    indices: Tuple[int, ...]
    simply_laced: bool
    type: str
    coxeter_number: Union[int, float]
    positive_root_count: Union[int, float]


class ComponentReport(eqx.Module):
    """Components sorted by smallest vertex index"""

    components: Tuple[UnfoldedComponent, ...]

    @property
    def finite(self) -> bool:
        return all(c.type != "infinite" for c in self.components)

    @property
    def types(self) -> List[str]:
        return [c.type for c in self.components]

    @property
    def total_roots(self) -> Union[int, float]:
        return sum(c.positive_root_count for c in self.components)

    @property
    def coxeter_numbers(self) -> List[Union[int, float]]:
        return [c.coxeter_number for c in self.components]

    def summary(self) -> str:
        """``2 x A5``-style description, types in order of first appearance"""
        counts = Counter(self.types)
        return " + ".join(t if n == 1 else f"{n} x {t}" for t, n in counts.items())


def _ordinary(U: AnyQuiver) -> OrdinaryQuiver:
    return U.quiver if isinstance(U, UnfoldedQuiver) else U


def _as_coxeter_graph(q: OrdinaryQuiver) -> Tuple[CoxeterGraph, Set[int]]:
    """Simple edges become label 3, multiple edges label infinity"""
    G = q.to_networkx()
    labels = {}
    loops = set()
    for a, b, data in G.edges(data=True):
        if a == b:
            loops.add(a)
        else:
            labels[(min(a, b), max(a, b))] = 3 if data["multiplicity"] == 1 else math.inf
    return CoxeterGraph(q.vertices, labels, loops), loops


def components(U: AnyQuiver) -> ComponentReport:
    """
    Splits the underlying multigraph into connected components and names each one. A component with a loop or a
    multiple edge, or whose form fails positive definiteness, is ``infinite``; the rest are A, D or E by arm lengths.
    """
    q = _ordinary(U)
    G, loops = _as_coxeter_graph(q)
    classification = classify_coxeter(G)

    out = []
    for c in classification.components:
        indices = tuple(q.vertices.index(v) for v in c.vertices)
        simply_laced = not loops.intersection(indices) and all(
            m == 3 for (a, _), m in G.edges().items() if a in indices
        )
        out.append(
            UnfoldedComponent(
                vertices=c.vertices,
                indices=indices,
                simply_laced=simply_laced,
                type=c.type,
                coxeter_number=c.coxeter_number,
                positive_root_count=positive_root_count(c.type),
            )
        )
    return ComponentReport(components=tuple(out))


def positive_roots_simply_laced(U: AnyQuiver, cap: int = 10**6) -> List[Tuple[int, ...]]:
    """
    All positive roots of a simply-laced quiver of finite type, by closing the simple roots under
    ``x -> x - <alpha_i, x> alpha_i`` and keeping non-negative vectors.

    :param U: ordinary or unfolded quiver, every component finite ADE
    :param cap: bound on the number of roots
    :return: root vectors in the quiver's vertex order, sorted
    :raises InfiniteComponent: when some component is not finite ADE
    """
    q = _ordinary(U)
    report = components(q)
    bad = [c for c in report.components if c.type == "infinite"]
    if bad:
        raise InfiniteComponent(f"component on {list(bad[0].vertices)} is not of finite ADE type")

    C = [[int(c) for c in row] for row in q.cartan()]
    n = q.num_vertices
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    queue = deque(simples)
    while queue:
        x = queue.popleft()
        for i in range(n):
            pairing = sum(C[i][j] * x[j] for j in range(n))
            if pairing == 0:
                continue
            y = x[:i] + (x[i] - pairing,) + x[i + 1 :]
            if y[i] < 0 or y in seen:
                continue
            seen.add(y)
            queue.append(y)
            if len(seen) > cap:
                raise InfiniteComponent(f"more than {cap} positive roots")
    return sorted(seen)
