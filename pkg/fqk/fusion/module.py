#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Semisimple module categories over a fusion ring, given by action matrices on Irr(M).

``act[i][L', L]`` is the multiplicity of ``L'`` in ``S_i (x) L`` so that matrices act on column vectors. A module
may also be *partial*: only Irr(M) and a few named action matrices are known, with no ring behind them.
"""
import logging
from typing import Dict, Optional, Sequence, Tuple, Union

import equinox as eqx
import networkx as nx
import numpy as np

from fqk.errors import DimensionMismatch, MissingAction, OutOfRange, SignIncoherentInput
from fqk.fusion.fpdim import fpdim_of, perron_eigenvalue, perron_vector
from fqk.fusion.ring import FusionRing, RingElement, ValidationReport, Violation, basis_vector, int_array
from fqk.fusion.ring import is_nonnegative, is_zero
from fqk.quiver.ordinary import OrdinaryQuiver

logger = logging.getLogger(__name__)

ModuleElement = np.ndarray


class ActionLabel(eqx.Module):
    """
    An edge label known only through its action matrix on Irr(M). Its dual acts by the transpose.
    """

    matrix: np.ndarray
    fpdim: Optional[float]
    name: Optional[str]

    def __init__(self, matrix, fpdim: float = None, name: str = None):
        super(ActionLabel, self).__init__()
        self.matrix = int_array(matrix, ndim=2)
        self.fpdim = fpdim
        self.name = name

    def dimension(self) -> float:
        if self.fpdim is not None:
            return float(self.fpdim)
        return perron_eigenvalue(self.matrix)

    def transpose(self) -> "ActionLabel":
        return ActionLabel(self.matrix.T, self.fpdim, None if self.name is None else f"{self.name}*")

    def __add__(self, other: "ActionLabel") -> "ActionLabel":
        return ActionLabel(self.matrix + other.matrix)

    def is_zero(self) -> bool:
        return is_zero(self.matrix)


Label = Union[RingElement, ActionLabel]


class ModuleCategory(eqx.Module):
    """
    A semisimple left module category over ``ring``.

    Args:
        ring: the acting fusion ring, ``None`` in partial mode
        mnames: names of the simple objects of M
        act: ``rank x |Irr(M)| x |Irr(M)|`` action tensor, ``None`` in partial mode
        labels: named ``ActionLabel``s available in partial mode

    """

    ring: Optional[FusionRing]
    mnames: Tuple[str, ...]
    act: Optional[np.ndarray]
    labels: Dict[str, ActionLabel]

    def __init__(self, ring: Optional[FusionRing], mnames: Sequence[str], act=None, labels: Dict[str, ActionLabel] = None):
        super(ModuleCategory, self).__init__()
        self.ring = ring
        self.mnames = tuple(str(n) for n in mnames)
        self.act = None if act is None else int_array(act, ndim=3)
        self.labels = dict(labels or {})

    @classmethod
    def partial(cls, mnames: Sequence[str], labels: Dict[str, ActionLabel]) -> "ModuleCategory":
        return cls(None, mnames, None, labels)

    @property
    def msize(self) -> int:
        return len(self.mnames)

    @property
    def is_partial(self) -> bool:
        return self.act is None

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, (int, np.integer)):
            return int(name)
        try:
            return self.mnames.index(name)
        except ValueError as e:
            raise DimensionMismatch(f"unknown module simple {name!r}; known: {self.mnames}") from e

    def simple(self, name: Union[str, int]) -> ModuleElement:
        return basis_vector(self.msize, self.index(name))

    def element(self, spec) -> ModuleElement:
        if isinstance(spec, str):
            return self.simple(spec)
        if isinstance(spec, dict):
            u = np.zeros(self.msize, dtype=object)
            for k, v in spec.items():
                u[self.index(k)] += int(v)
            return u
        u = int_array(spec, ndim=1)
        if u.shape[0] != self.msize:
            raise DimensionMismatch(f"module element of length {u.shape[0]} for |Irr(M)| = {self.msize}")
        return u

    def resolve(self, spec) -> Label:
        """Turns a label name, ring vector or ``{"matrix": ...}`` into a ring element or an ``ActionLabel``"""
        if isinstance(spec, ActionLabel):
            return spec
        if isinstance(spec, dict) and "matrix" in spec:
            return ActionLabel(spec["matrix"], spec.get("fpdim"), spec.get("name"))
        if isinstance(spec, str) and spec in self.labels:
            return self.labels[spec]
        if self.ring is None:
            raise MissingAction(f"label {spec!r} is not a named action of this partial module")
        return self.ring.element(spec)

    def format(self, u: ModuleElement) -> str:
        terms = []
        for name, c in zip(self.mnames, u):
            if c == 0:
                continue
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{coeff}[{name}]")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def label_matrix(M: ModuleCategory, label: Label) -> np.ndarray:
    """
    Action matrix of an edge label on [M].

    :param M:
    :param label: ring element (full mode) or ``ActionLabel``
    :return: ``|Irr(M)| x |Irr(M)|`` integer matrix
    """
    if isinstance(label, ActionLabel):
        if label.matrix.shape != (M.msize, M.msize):
            raise DimensionMismatch(f"action matrix of shape {label.matrix.shape} on a module of size {M.msize}")
        return label.matrix
    if M.act is None:
        raise MissingAction("ring-element labels need a module with full action data")
    label = np.asarray(label, dtype=object)
    if label.shape != (M.act.shape[0],):
        raise DimensionMismatch(f"label of length {label.shape} for a ring of rank {M.act.shape[0]}")
    return np.tensordot(label, M.act, axes=([0], [0]))


def label_dimension(label: Label, ring: FusionRing = None) -> float:
    if isinstance(label, ActionLabel):
        return label.dimension()
    return fpdim_of(ring, label)


def regular_module(ring: FusionRing) -> ModuleCategory:
    """C as a module over itself; ``act[i]`` is left multiplication by ``S_i``"""
    act = np.stack([ring.left_mult(i) for i in range(ring.rank)])
    return ModuleCategory(ring, ring.names, act)


def act_on(M: ModuleCategory, x: Label, u: ModuleElement) -> ModuleElement:
    if len(u) != M.msize:
        raise DimensionMismatch(f"module element of length {len(u)} for |Irr(M)| = {M.msize}")
    return label_matrix(M, x) @ np.asarray(u, dtype=object)


def validate_module(M: ModuleCategory) -> ValidationReport:
    """
    Checks the module axioms at the Grothendieck level: the unit acts as the identity, ``act[i] act[j]`` agrees with
    ``sum_k N[i][j][k] act[k]``, and ``act[dual(i)]`` is the transpose of ``act[i]``. A module whose action graph is
    disconnected gets a warning, not a violation.
    """
    out = []
    warnings = []
    ms = M.msize

    if M.is_partial:
        for name, label in M.labels.items():
            if label.matrix.shape != (ms, ms):
                out.append(Violation("shape", (name,), f"matrix shape {label.matrix.shape}"))
            elif not is_nonnegative(label.matrix):
                out.append(Violation("nonnegativity", (name,), "negative action entry"))
        return ValidationReport(out, warnings)

    ring = M.ring
    act = M.act
    if act.shape != (ring.rank, ms, ms):
        return ValidationReport([Violation("shape", tuple(act.shape), f"act must have shape {(ring.rank, ms, ms)}")])

    for idx in np.argwhere(np.asarray(act < 0, dtype=bool)):
        out.append(Violation("nonnegativity", tuple(int(i) for i in idx), "negative action entry"))

    eye = np.eye(ms, dtype=object)
    for idx in np.argwhere(np.asarray(act[ring.unit] != eye, dtype=bool)):
        out.append(Violation("unit", tuple(int(i) for i in idx), "unit does not act as the identity"))

    for i in range(ring.rank):
        for j in range(ring.rank):
            lhs = act[i] @ act[j]
            rhs = np.tensordot(ring.N[i, j], act, axes=([0], [0]))
            if np.any(np.asarray(lhs != rhs, dtype=bool)):
                out.append(Violation("action", (i, j), f"act[{i}] act[{j}] != sum_k N[{i}][{j}][k] act[k]"))

    if len(ring.dual_perm) == ring.rank:
        for i in range(ring.rank):
            d = ring.dual_perm[i]
            if 0 <= d < ring.rank and np.any(np.asarray(act[d] != act[i].T, dtype=bool)):
                out.append(Violation("transpose", (i,), f"act[dual({i})] != act[{i}]^T"))

    G = nx.Graph()
    G.add_nodes_from(range(ms))
    support = np.asarray(sum(act) != 0, dtype=bool)
    G.add_edges_from((int(a), int(b)) for a, b in np.argwhere(support))
    if nx.number_connected_components(G) > 1:
        msg = f"module is decomposable: {nx.number_connected_components(G)} blocks"
        logger.warning(msg)
        warnings.append(msg)

    return ValidationReport(out, warnings)


def nonzero_action_check(M: ModuleCategory, x: RingElement, u: ModuleElement) -> bool:
    """
    Whether ``x . u`` is non-zero, for a sign-coherent ``x`` and an object class ``u``. For genuine module data the
    answer is ``x != 0``.

    :raises SignIncoherentInput: when ``x`` has coefficients of both signs
    :raises OutOfRange: when ``u`` is not the class of a non-zero object
    """
    x = np.asarray(x, dtype=object)
    if not (is_nonnegative(x) or is_nonnegative(-x)):
        raise SignIncoherentInput(f"{list(x)} is neither in [C]>=0 nor in -[C]>=0")
    u = np.asarray(u, dtype=object)
    if is_zero(u) or not is_nonnegative(u):
        raise OutOfRange(f"u = {list(u)} is not the class of a non-zero object")
    return not is_zero(act_on(M, x, u))


def mckay_quiver(M: ModuleCategory, label: Label, separated: bool = False) -> OrdinaryQuiver:
    """
    McKay quiver of ``M`` with respect to ``label``: an arrow ``L -> L'`` for each copy of ``L'`` in ``label (x) L``,
    diagonal arrows included. The separated version has vertices ``("s", L)`` and ``("t", L)`` with arrows from the
    source copy to the target copy.
    """
    A = label_matrix(M, label)
    ms = M.msize
    pairs = [(L, Lp, A[Lp, L]) for L in range(ms) for Lp in range(ms) if A[Lp, L] != 0]
    if not separated:
        return OrdinaryQuiver(M.mnames, pairs)
    vertices = [("s", n) for n in M.mnames] + [("t", n) for n in M.mnames]
    return OrdinaryQuiver(vertices, [(L, ms + Lp, m) for L, Lp, m in pairs])


def module_fpdims(M: ModuleCategory) -> np.ndarray:
    """
    Frobenius-Perron dimensions of the simples of M, up to a common scale (smallest entry 1). Computed as the
    Perron vector of the summed transposed actions.
    """
    if M.is_partial:
        mats = [np.asarray(l.matrix, dtype=np.float64) for l in M.labels.values()]
    else:
        mats = [np.asarray(a, dtype=np.float64) for a in M.act]
    if not mats:
        return np.ones(M.msize)
    return perron_vector(sum(mats).T)
