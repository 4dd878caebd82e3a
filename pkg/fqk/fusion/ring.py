#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Exact arithmetic in the Grothendieck ring of a fusion category.

Ring elements are one-dimensional ``numpy`` object arrays of Python ints, indexed by the simple objects. Object dtype
keeps the coefficients arbitrary precision; quantum numbers grow quickly.
"""
from typing import Dict, List, NamedTuple, Sequence, Tuple, Union

import equinox as eqx
import numpy as np

from fqk.errors import DimensionMismatch

RingElement = np.ndarray


class Violation(NamedTuple):
    invariant: str
    indices: Tuple
    message: str


class ValidationReport(eqx.Module):
    """
    Result of checking structure constants against the axioms. An empty ``violations`` tuple means every invariant
    holds. ``warnings`` carries conditions that are not axioms (e.g. a decomposable module).
    """

    violations: Tuple[Violation, ...]
    warnings: Tuple[str, ...]

    def __init__(self, violations: Sequence[Violation] = (), warnings: Sequence[str] = ()):
        self.violations = tuple(violations)
        self.warnings = tuple(warnings)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def invariants(self) -> List[str]:
        return sorted({v.invariant for v in self.violations})

    def as_dict(self) -> Dict:
        return {
            "ok": self.ok,
            "violations": [{"invariant": v.invariant, "indices": list(v.indices), "message": v.message} for v in self.violations],
            "warnings": list(self.warnings),
        }


def int_array(data, ndim: int = None) -> np.ndarray:
    """Converts nested lists (or an int array) into an object array of Python ints"""
    arr = np.array(data, dtype=object)
    if ndim is not None and arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    flat = arr.reshape(-1)
    for i in range(flat.size):
        flat[i] = int(flat[i])
    return flat.reshape(arr.shape)


def basis_vector(size: int, i: int) -> np.ndarray:
    e = np.zeros(size, dtype=object)
    e[i] = 1
    return e


def is_zero(x: np.ndarray) -> bool:
    return not np.any(np.asarray(x != 0, dtype=bool))


def is_nonnegative(x: np.ndarray) -> bool:
    return bool(np.all(np.asarray(x >= 0, dtype=bool)))


def sign_class(x: np.ndarray) -> str:
    """positive / zero / negative / incoherent membership in [C]_{>0}, {0}, -[C]_{>0}"""
    if is_zero(x):
        return "zero"
    if is_nonnegative(x):
        return "positive"
    if is_nonnegative(-x):
        return "negative"
    return "incoherent"


def _derive_dual(N: np.ndarray, unit: int) -> Tuple[int, ...]:
    # -1 marks a simple with no (or no unique) dual; validate() reports it
    rank = N.shape[0]
    dual = []
    for i in range(rank):
        candidates = [j for j in range(rank) if N[i, j, unit] != 0]
        dual.append(candidates[0] if len(candidates) == 1 and N[i, candidates[0], unit] == 1 else -1)
    return tuple(dual)


class FusionRing(eqx.Module):
    """
    Grothendieck ring [C] of a fusion category.

    ``N[i, j, k]`` is the multiplicity of simple ``k`` in ``S_i (x) S_j``. When ``dual`` is omitted it is derived from
    ``N`` as the unique ``j`` with ``N[i, j, unit] = 1``.

    Args:
        names: one name per simple object
        N: rank x rank x rank tensor of non-negative integers
        unit: index of the monoidal unit
        dual: dual permutation (optional)

    """

    names: Tuple[str, ...]
    N: np.ndarray
    unit: int
    dual_perm: Tuple[int, ...]

    def __init__(self, names: Sequence[str], N, unit: int = 0, dual: Sequence[int] = None):
        super(FusionRing, self).__init__()
        self.names = tuple(str(n) for n in names)
        self.N = int_array(N, ndim=3)
        self.unit = int(unit)
        if dual is None:
            self.dual_perm = _derive_dual(self.N, self.unit) if self.N.shape[0] == self.N.shape[2] else ()
        else:
            self.dual_perm = tuple(int(d) for d in dual)

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, (int, np.integer)):
            if not 0 <= name < self.rank:
                raise DimensionMismatch(f"simple index {name} out of range for rank {self.rank}")
            return int(name)
        try:
            return self.names.index(name)
        except ValueError as e:
            raise DimensionMismatch(f"unknown simple object {name!r}; known: {self.names}") from e

    def simple(self, name: Union[str, int]) -> RingElement:
        return basis_vector(self.rank, self.index(name))

    def one(self) -> RingElement:
        return basis_vector(self.rank, self.unit)

    def zero(self) -> RingElement:
        return np.zeros(self.rank, dtype=object)

    def element(self, spec) -> RingElement:
        """
        Parses a ring element from a simple name, a coefficient vector, or a ``{name: coefficient}`` dict.
        """
        if isinstance(spec, str):
            return self.simple(spec)
        if isinstance(spec, dict):
            x = self.zero()
            for k, v in spec.items():
                x[self.index(k)] += int(v)
            return x
        x = int_array(spec, ndim=1)
        if x.shape[0] != self.rank:
            raise DimensionMismatch(f"element of length {x.shape[0]} for a ring of rank {self.rank}")
        return x

    def left_mult(self, i: int) -> np.ndarray:
        """Matrix of x -> S_i * x in the simple basis (column-vector convention)"""
        return self.N[i].T.copy()

    def left_mult_of(self, x: RingElement) -> np.ndarray:
        return np.tensordot(x, self.N, axes=([0], [0])).T

    def format(self, x: RingElement) -> str:
        terms = []
        for name, c in zip(self.names, x):
            if c == 0:
                continue
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{coeff}[{name}]")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def validate(ring: FusionRing) -> ValidationReport:
    """
    Checks the fusion ring axioms on the structure constants and returns every violated invariant with the indices
    where it fails.

    Args:
        ring: the ring to check

    Returns:
        a ``ValidationReport``; ``report.ok`` is True when every invariant holds

    """
    N = ring.N
    r = ring.rank
    out = []

    if N.shape != (r, r, r):
        return ValidationReport([Violation("shape", tuple(N.shape), f"N must have shape {(r, r, r)}")])
    if not 0 <= ring.unit < r:
        return ValidationReport([Violation("unit.index", (ring.unit,), "unit index out of range")])

    for idx in np.argwhere(np.asarray(N < 0, dtype=bool)):
        out.append(Violation("nonnegativity", tuple(int(i) for i in idx), "negative structure constant"))

    u = ring.unit
    eye = np.eye(r, dtype=object)
    for j, k in np.argwhere(np.asarray(N[u] != eye, dtype=bool)):
        out.append(Violation("unit.left", (int(j), int(k)), f"N[unit][{j}][{k}] = {N[u, j, k]}"))
    for j, k in np.argwhere(np.asarray(N[:, u, :] != eye, dtype=bool)):
        out.append(Violation("unit.right", (int(j), int(k)), f"N[{j}][unit][{k}] = {N[j, u, k]}"))

    # (S_i S_j) S_k against S_i (S_j S_k), both as [i, j, k, l]
    left = np.tensordot(N, N, axes=([2], [0]))
    right = np.tensordot(N, N, axes=([2], [1])).transpose(2, 0, 1, 3)
    for idx in np.argwhere(np.asarray(left != right, dtype=bool)):
        out.append(Violation("associativity", tuple(int(i) for i in idx), "associativity fails"))

    dual = ring.dual_perm
    if len(dual) != r or any(not 0 <= d < r for d in dual):
        out.append(Violation("dual.missing", tuple(dual), "dual is not a map on the simples"))
    else:
        for i in range(r):
            if dual[dual[i]] != i:
                out.append(Violation("dual.involution", (i,), f"dual(dual({i})) = {dual[dual[i]]}"))
        if dual[u] != u:
            out.append(Violation("dual.unit", (u,), "dual(unit) != unit"))
        for i in range(r):
            for j in range(r):
                want = 1 if j == dual[i] else 0
                if N[i, j, u] != want:
                    out.append(Violation("rigidity", (i, j), f"N[{i}][{j}][unit] = {N[i, j, u]}, expected {want}"))
        perm = np.array(dual)
        # N[i][j][k] = N[dual j][dual i][dual k]
        flipped = N[np.ix_(perm, perm, perm)].transpose(1, 0, 2)
        for idx in np.argwhere(np.asarray(N != flipped, dtype=bool)):
            out.append(Violation("duality", tuple(int(i) for i in idx), "N[i][j][k] != N[j*][i*][k*]"))

    return ValidationReport(out)


def _check_length(ring: FusionRing, *xs):
    for x in xs:
        if len(x) != ring.rank:
            raise DimensionMismatch(f"element of length {len(x)} for a ring of rank {ring.rank}")


def multiply(ring: FusionRing, x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of the structure constants"""
    _check_length(ring, x, y)
    partial = np.tensordot(np.asarray(y, dtype=object), ring.N, axes=([0], [1]))
    return np.tensordot(np.asarray(x, dtype=object), partial, axes=([0], [0]))


def dual(ring: FusionRing, x: RingElement) -> RingElement:
    _check_length(ring, x)
    y = np.zeros(ring.rank, dtype=object)
    y[list(ring.dual_perm)] = x
    return y
