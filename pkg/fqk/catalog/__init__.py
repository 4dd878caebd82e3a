#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Builtin rings, modules and quivers, looked up by key. Entries are built on first use, validated, and cached.
"""
import functools
import logging
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from fqk.catalog import modules, quivers, rings
from fqk.errors import FQKError, UnknownBuiltin
from fqk.fusion.module import ModuleCategory, regular_module, validate_module
from fqk.fusion.ring import FusionRing, validate
from fqk.quiver.core import FusionQuiver


class CatalogEntry(NamedTuple):
    key: str
    kind: str
    factory: Callable
    params: Dict
    description: str


def _regular(ring: str = "fibonacci") -> ModuleCategory:
    return regular_module(builtin(ring))


_ENTRIES = [
    CatalogEntry("vect", "ring", rings.vect, {}, "Vect, one simple"),
    CatalogEntry("rep_s2", "ring", rings.rep_s2, {}, "Rep S2: 1, S"),
    CatalogEntry("rep_s3", "ring", rings.rep_s3, {}, "Rep S3: 1, S, V"),
    CatalogEntry("rep_s4", "ring", rings.rep_s4, {}, "Rep S4: 1, S, W, V, V'"),
    CatalogEntry("fibonacci", "ring", rings.fibonacci, {}, "tau (x) tau = 1 + tau"),
    CatalogEntry("verlinde_sl2", "ring", rings.verlinde_sl2, {"level": 4}, "sl2 at level l: V0 .. Vl"),
    CatalogEntry("regular", "module", _regular, {"ring": "fibonacci"}, "a builtin ring as a module over itself"),
    CatalogEntry("verlinde_typeD", "module", modules.verlinde_typeD, {"level": 4}, "type-D module, even level"),
    CatalogEntry("sl3at5_action", "module", modules.sl3at5_action, {}, "sl3 at level 5, action of X only (partial)"),
    CatalogEntry("s2_sign_quiver", "quiver", quivers.s2_sign_quiver, {}, "a -S-> b over Rep S2"),
    CatalogEntry("s2_sign_chain", "quiver", quivers.s2_sign_chain, {}, "a -S-> b -S-> c over Rep S2"),
    CatalogEntry("sn_sign_quiver", "quiver", quivers.sn_sign_quiver, {"n": 2}, "a -S-> b over Rep Sn, n = 2, 3, 4"),
    CatalogEntry("s3_std_quiver", "quiver", quivers.s3_std_quiver, {}, "a -V-> b over Rep S3"),
    CatalogEntry("s4_std_quiver", "quiver", quivers.s4_std_quiver, {}, "a -V-> b over Rep S4"),
    CatalogEntry("fib_edge_quiver", "quiver", quivers.fib_edge_quiver, {}, "a -tau-> b over Fibonacci"),
    CatalogEntry("fib_h4_quiver", "quiver", quivers.fib_h4_quiver, {}, "a -tau-> b -1-> c -1-> d over Fibonacci"),
    CatalogEntry(
        "verlinde_edge_quiver",
        "quiver",
        quivers.verlinde_edge_quiver,
        {"level": 4, "module": "regular"},
        "a -V1-> b at level l, regular or typeD module",
    ),
    CatalogEntry("sl3at5_quiver", "quiver", quivers.sl3at5_quiver, {}, "a -X-> b, sl3 at level 5 (partial)"),
    CatalogEntry("vect_kronecker", "quiver", quivers.vect_kronecker, {}, "two parallel [1] edges over Vect"),
]

CATALOG: Dict[str, CatalogEntry] = {e.key: e for e in _ENTRIES}

logger = logging.getLogger(__name__)


def _check(key: str, obj):
    reports = []
    if isinstance(obj, FusionRing):
        reports.append(validate(obj))
    elif isinstance(obj, ModuleCategory):
        reports.append(validate_module(obj))
    elif isinstance(obj, FusionQuiver):
        if obj.ring is not None:
            reports.append(validate(obj.ring))
        if obj.module is not None:
            reports.append(validate_module(obj.module))
    for report in reports:
        if not report.ok:
            raise FQKError(f"builtin {key!r} fails {report.invariants()}")


@functools.lru_cache(maxsize=None)
def _build(key: str, params: Tuple) -> object:
    entry = CATALOG[key]
    obj = entry.factory(**dict(params))
    _check(key, obj)
    return obj


def builtin(key: str, **params):
    """
    Builds (once) and returns a builtin ring, module or quiver.

    :param key: catalog key, see ``catalog_list``
    :param params: generator parameters, e.g. ``level=4``; defaults come from the entry
    :raises UnknownBuiltin: for an unknown key or parameter
    """
    if key not in CATALOG:
        raise UnknownBuiltin(f"unknown builtin {key!r}; known: {sorted(CATALOG)}")
    entry = CATALOG[key]
    unknown = set(params) - set(entry.params)
    if unknown:
        raise UnknownBuiltin(f"builtin {key!r} takes {sorted(entry.params)}, got {sorted(unknown)}")
    merged = {**entry.params, **{k: v for k, v in params.items() if v is not None}}
    return _build(key, tuple(sorted(merged.items())))


def catalog_list(kind: str = None) -> List[CatalogEntry]:
    return [e for e in _ENTRIES if kind is None or e.kind == kind]


def quoted_count(key: str, **params) -> Optional[int]:
    """
    Closed-form indecomposable counts quoted alongside some builtin examples. Not all of them agree with the
    component structure of the unfolded quiver; see ``flag_count``.
    """
    if key == "sl3at5_quiver":
        return 40
    if key == "verlinde_edge_quiver":
        merged = {**CATALOG[key].params, **params}
        level = merged["level"]
        return (level + 1) * (level + 2) if merged["module"] == "regular" else 2 * level * (level + 1)
    return None


def flag_count(key: str, computed: int, **params) -> bool:
    """Logs a warning and returns True when ``computed`` differs from the quoted closed form"""
    quoted = quoted_count(key, **params)
    if quoted is None or quoted == computed:
        return False
    logger.warning(f"{key} {params}: {computed} indecomposables from the root closure, closed form quotes {quoted}")
    return True
