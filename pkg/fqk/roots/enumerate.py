#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Dimension vectors of the indecomposable representations of a finite-type fusion quiver, three ways: folding the
positive roots of the unfolded quiver, closing the simple classes ``[L] alpha_v`` under W(Q) directly in [M]^V, and
walking Coxeter-element orbits from an admissible sink ordering.
"""
import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

import equinox as eqx
import numpy as np

from fqk.errors import InconsistentVerdict, InfiniteType, MissingAction, NotReflectable
from fqk.fusion.module import ModuleCategory, regular_module
from fqk.fusion.ring import multiply
from fqk.quiver.core import FusionQuiver, admissible_sink_ordering, normalize
from fqk.roots.form import DimensionVector, ReflectionAction, fold_root, is_positive, unfold_dimvec
from fqk.unfolding.components import positive_roots_simply_laced
from fqk.unfolding.verdict import is_finite_type

logger = logging.getLogger(__name__)

CLOSURE_CAP = 10**6


def _key(x: DimensionVector) -> Tuple[int, ...]:
    return unfold_dimvec(x)


def _sorted(vectors, num_vertices: int, msize: int) -> List[DimensionVector]:
    """Lexicographic in (vertex index, module coefficients)"""
    return [fold_root(k, num_vertices, msize) for k in sorted(vectors)]


def _require_finite(Q: FusionQuiver, M: ModuleCategory, tol: float = None):
    verdict = is_finite_type(Q, M, tol)
    if not verdict.finite:
        raise InfiniteType(f"{verdict.summary()}: infinitely many indecomposables")
    return verdict


def reflection_closure(Q: FusionQuiver, M: ModuleCategory = None, seeds: Sequence[DimensionVector] = None, cap: int = CLOSURE_CAP) -> List[DimensionVector]:
    """
    Positive vectors in the W(Q)-orbit of ``seeds`` (every ``[L] alpha_v`` by default), found by breadth-first
    closure under all simple reflections.

    :raises InfiniteType: once the orbit exceeds ``cap`` vectors
    """
    W = ReflectionAction(Q, M)
    n, ms = W.num_vertices, W.module.msize
    if seeds is None:
        seeds = [W.simple(v, L) for v in range(n) for L in range(ms)]

    seen = {_key(x) for x in seeds}
    queue = deque(np.asarray(x, dtype=object) for x in seeds)
    while queue:
        x = queue.popleft()
        for v in range(n):
            y = W.reflect(v, x)
            k = _key(y)
            if k in seen:
                continue
            seen.add(k)
            queue.append(y)
            if len(seen) > cap:
                raise InfiniteType(f"W(Q)-orbit exceeds {cap} vectors")

    return _sorted((k for k in seen if is_positive(fold_root(k, n, ms))), n, ms)


def enumerate_indecomposables(Q: FusionQuiver, M: ModuleCategory = None, tol: float = None, check: bool = True) -> List[DimensionVector]:
    """
    Dimension vectors of the indecomposable representations of ``Q`` over ``M``: the positive roots of the unfolded
    quiver, folded so that the coefficient of ``alpha_v`` is ``sum_L root[(v, L)] [L]``.

    Args:
        Q: fusion quiver of finite type
        M: module category, ``Q.default_module()`` by default
        tol: tolerance for the finiteness decision
        check: also run the direct reflection closure and require the same set

    Returns:
        a list of ``(|V|, |Irr(M)|)`` object arrays, sorted

    Raises:
        InfiniteType: when ``Q`` is not of finite type

    """
    Q = normalize(Q)
    M = Q.default_module() if M is None else M
    verdict = _require_finite(Q, M, tol)
    n, ms = Q.num_vertices, M.msize

    roots = positive_roots_simply_laced(verdict.unfolded_quiver)
    if len(roots) != verdict.num_indecomposables:
        raise InconsistentVerdict(f"{len(roots)} roots but the component table predicts {verdict.num_indecomposables}")
    out = _sorted(roots, n, ms)

    if check:
        oracle = reflection_closure(Q, M)
        if {_key(x) for x in oracle} != {_key(x) for x in out}:
            raise InconsistentVerdict(f"folded roots ({len(out)}) and reflection closure ({len(oracle)}) differ")
    return out


def enumerate_by_coxeter(Q: FusionQuiver, M: ModuleCategory = None, tol: float = None) -> List[DimensionVector]:
    """
    With an admissible sink ordering ``1..n`` and ``c = sigma_n ... sigma_1``, collects the positive vectors among
    ``c^-k sigma_1 ... sigma_{i-1}([L] alpha_i)`` over a full period of ``c``.
    """
    Q = normalize(Q)
    M = Q.default_module() if M is None else M
    ordering = admissible_sink_ordering(Q)
    if ordering is None:
        raise NotReflectable("no admissible sink ordering: the quiver has a loop or an oriented cycle")
    _require_finite(Q, M, tol)

    W = ReflectionAction(Q, M)
    order = [Q.index(v) for v in ordering]
    n, ms = W.num_vertices, W.module.msize

    found = set()
    for i, v in enumerate(order):
        for L in range(ms):
            # sigma_1 ... sigma_{i-1}: the rightmost reflection acts first
            start = W.apply(order[:i][::-1], W.simple(v, L))
            x = start
            for _ in range(CLOSURE_CAP):
                if is_positive(x):
                    found.add(_key(x))
                x = W.apply(order[::-1], x)
                if np.array_equal(x, start):
                    break
            else:
                raise InfiniteType("Coxeter element has no finite period")
    return _sorted(found, n, ms)


class ExtendedRoots(eqx.Module):
    """
    Positive roots over [C] and their simple multiples.

    Args:
        positive: Phi_+, the positive part of the W(Q)-orbit of the ``[1] alpha_v``
        extended: Phi_+^ext, every ``root . [L]``, sorted
        classes: for each root in ``positive``, the indices into ``extended`` of ``root . [L]`` for ``L`` in Irr(C)

    """

    positive: List[DimensionVector]
    extended: List[DimensionVector]
    classes: Tuple[Tuple[int, ...], ...]


def right_multiply(Q: FusionQuiver, x: DimensionVector, L: int) -> DimensionVector:
    """``x . [L]``: every coefficient multiplied by the simple ``L`` on the right"""
    ring = Q.ring
    e_L = ring.simple(L)
    return np.stack([multiply(ring, row, e_L) for row in np.asarray(x, dtype=object)])


def extended_positive_roots(Q: FusionQuiver, tol: float = None) -> ExtendedRoots:
    """
    The extended positive roots of ``Q`` (module = [C] itself), organized in classes ``{root . [L]}``. Checks that
    they are exactly the indecomposable dimension vectors over the regular module.

    :raises InfiniteType: when ``Q`` is not of finite type
    """
    Q = normalize(Q)
    if Q.is_partial:
        raise MissingAction("extended roots need a fusion ring")
    M = regular_module(Q.ring)
    indecomposables = enumerate_indecomposables(Q, M, tol)

    W = ReflectionAction(Q, M)
    unit = Q.ring.unit
    positive = reflection_closure(Q, M, seeds=[W.simple(v, unit) for v in range(W.num_vertices)])

    products: Dict[Tuple[int, ...], DimensionVector] = {}
    for r in positive:
        for L in range(Q.ring.rank):
            y = right_multiply(Q, r, L)
            products[_key(y)] = y
    extended = _sorted(products, Q.num_vertices, M.msize)
    index = {_key(x): i for i, x in enumerate(extended)}
    classes = tuple(tuple(index[_key(right_multiply(Q, r, L))] for L in range(Q.ring.rank)) for r in positive)

    if set(index) != {_key(x) for x in indecomposables}:
        raise InconsistentVerdict(
            f"Phi_+ . Irr(C) has {len(extended)} elements, {len(indecomposables)} indecomposables over [C]"
        )
    if len(extended) != len(positive) * Q.ring.rank:
        logger.info(f"root classes overlap: {len(positive)} roots x {Q.ring.rank} simples -> {len(extended)}")
    return ExtendedRoots(positive=positive, extended=extended, classes=classes)
