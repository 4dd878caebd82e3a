#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Graphviz DOT text for fusion quivers, Coxeter graphs and unfolded quivers, and a small reader that checks DOT
statement well-formedness.
"""
import math
import re
from typing import Dict, List, NamedTuple, Union

from fqk.fusion.module import ActionLabel
from fqk.quiver.core import FusionQuiver
from fqk.quiver.coxeter import CoxeterGraph, LabeledGraph
from fqk.unfolding.unfold import UnfoldedQuiver


def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label_text(Q: FusionQuiver, label) -> str:
    if isinstance(label, ActionLabel):
        return label.name or "act"
    return Q.ring.format(label)


def _coxeter_text(m) -> str:
    return "∞" if m == math.inf else str(m)


def _fusion_quiver_dot(Q: FusionQuiver, name: str) -> List[str]:
    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in Q.vertices]
    for s, t, label in Q.edges:
        lines.append(f"  {_quote(Q.vertices[s])} -> {_quote(Q.vertices[t])} [label={_quote(_label_text(Q, label))}];")
    return lines + ["}"]


def _graph_dot(G: Union[CoxeterGraph, LabeledGraph], name: str) -> List[str]:
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in G.vertices]
    for (a, b), value in sorted(G.edges().items()):
        if isinstance(G, CoxeterGraph):
            attr = "" if value == 3 else f" [label={_quote(_coxeter_text(value))}]"
        else:
            attr = f" [label={_quote(f'{value:.6g}')}]"
        lines.append(f"  {_quote(G.vertices[a])} -- {_quote(G.vertices[b])}{attr};")
    for v in sorted(G.loops):
        lines.append(f"  {_quote(G.vertices[v])} -- {_quote(G.vertices[v])};")
    return lines + ["}"]


def _unfolded_dot(U: UnfoldedQuiver, name: str) -> List[str]:
    def vname(i):
        v, L = U.vertices[i]
        return _quote(f"{v},{L}")

    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  {vname(i)};" for i in range(U.num_vertices)]
    for s, t, mult in U.arrows:
        attr = "" if mult == 1 else f" [label={_quote(mult)}]"
        lines.append(f"  {vname(s)} -> {vname(t)}{attr};")
    return lines + ["}"]


def to_dot(obj: Union[FusionQuiver, CoxeterGraph, LabeledGraph, UnfoldedQuiver], name: str = "Q") -> str:
    if isinstance(obj, FusionQuiver):
        lines = _fusion_quiver_dot(obj, name)
    elif isinstance(obj, (CoxeterGraph, LabeledGraph)):
        lines = _graph_dot(obj, name)
    elif isinstance(obj, UnfoldedQuiver):
        lines = _unfolded_dot(obj, name)
    else:
        raise TypeError(f"no DOT rendering for {type(obj).__name__}")
    return "\n".join(lines) + "\n"


class DotGraph(NamedTuple):
    directed: bool
    name: str
    nodes: List[str]
    edges: List[tuple]
    attrs: Dict[tuple, Dict[str, str]]


_ID = r'(?:"(?:[^"\\]|\\.)*"|[A-Za-z_][A-Za-z0-9_]*|-?\d+(?:\.\d+)?)'
_ATTRS = r"(?:\s*\[(?P<attrs>[^\]]*)\])?"
_HEADER = re.compile(rf"^\s*(?P<kind>digraph|graph)\s+(?P<name>{_ID})?\s*\{{\s*$")
_NODE = re.compile(rf"^\s*(?P<node>{_ID}){_ATTRS}\s*;?\s*$")
_EDGE = re.compile(rf"^\s*(?P<src>{_ID})\s*(?P<op>->|--)\s*(?P<dst>{_ID}){_ATTRS}\s*;?\s*$")
_ATTR = re.compile(rf"\s*(?P<key>{_ID})\s*=\s*(?P<value>{_ID})\s*,?")


def _unquote(s: str) -> str:
    if s.startswith('"'):
        return re.sub(r"\\(.)", r"\1", s[1:-1])
    return s


def _parse_attrs(text: str, lineno: int) -> Dict[str, str]:
    attrs, pos = {}, 0
    text = text.strip()
    while pos < len(text):
        m = _ATTR.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"line {lineno}: malformed attribute list {text!r}")
        attrs[_unquote(m["key"])] = _unquote(m["value"])
        pos = m.end()
    return attrs


def parse_dot(text: str) -> DotGraph:
    """
    Reads the one-statement-per-line DOT subset written by ``to_dot``.

    :raises ValueError: on a malformed header, statement or attribute list, or an edge operator that does not match
        the graph kind
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty DOT text")
    header = _HEADER.match(lines[0])
    if header is None:
        raise ValueError(f"line 1: expected 'graph' or 'digraph' header, got {lines[0]!r}")
    if lines[-1].strip() != "}":
        raise ValueError("missing closing brace")
    directed = header["kind"] == "digraph"
    op = "->" if directed else "--"

    nodes, edges, attrs = [], [], {}
    for lineno, line in enumerate(lines[1:-1], start=2):
        m = _EDGE.match(line)
        if m is not None:
            if m["op"] != op:
                raise ValueError(f"line {lineno}: edge operator {m['op']} in a {header['kind']}")
            e = (_unquote(m["src"]), _unquote(m["dst"]))
            for v in e:
                if v not in nodes:
                    nodes.append(v)
            edges.append(e)
            if m["attrs"] is not None:
                attrs[(len(edges) - 1,) + e] = _parse_attrs(m["attrs"], lineno)
            continue
        m = _NODE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: not a node or edge statement: {line!r}")
        node = _unquote(m["node"])
        if node not in nodes:
            nodes.append(node)
        if m["attrs"] is not None:
            attrs[(node,)] = _parse_attrs(m["attrs"], lineno)

    return DotGraph(directed, _unquote(header["name"] or ""), nodes, edges, attrs)
