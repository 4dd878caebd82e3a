#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
JSON reading and writing of rings, modules and quivers.

Schemas::

    ring     {"names": [...], "unit": 0, "N": [[[...]]], "dual": [...]}
    module   {"ring": <ring>, "mnames": [...], "act": [[[...]]]}
    partial  {"mnames": [...], "labels": {"X": {"matrix": [[...]]}}}
    quiver   {"vertices": [...], "edges": [{"from": .., "to": .., "label": ..}], "ring": <ring>, "module": <module>}

A nested ``<ring>`` or ``<module>`` may be given inline, as a path to another JSON file, or as a builtin key.
"""
import json
import logging
import os
from typing import Dict, Union

import numpy as np

from fqk.errors import DimensionMismatch, FQKError
from fqk.fusion.module import ActionLabel, Label, ModuleCategory
from fqk.fusion.ring import FusionRing
from fqk.quiver.core import FusionQuiver

logger = logging.getLogger(__name__)


def _ints(a) -> list:
    return np.asarray(a, dtype=object).tolist()


def _resolve_ref(ref, kind: str):
    if isinstance(ref, dict):
        return ref
    if isinstance(ref, str) and os.path.exists(ref):
        return load_json(ref)
    if isinstance(ref, str):
        from fqk.catalog import builtin

        obj = builtin(ref)
        if kind == "ring" and isinstance(obj, FusionRing):
            return obj
        if kind == "module" and isinstance(obj, ModuleCategory):
            return obj
        raise FQKError(f"builtin {ref!r} is not a {kind}")
    raise FQKError(f"cannot read a {kind} from {ref!r}")


def ring_to_dict(ring: FusionRing) -> Dict:
    return {"names": list(ring.names), "unit": ring.unit, "N": _ints(ring.N), "dual": list(ring.dual_perm)}


def ring_from_dict(d) -> FusionRing:
    d = _resolve_ref(d, "ring")
    if isinstance(d, FusionRing):
        return d
    try:
        return FusionRing(d["names"], d["N"], d.get("unit", 0), d.get("dual"))
    except KeyError as e:
        raise FQKError(f"ring file is missing {e}") from e


def module_to_dict(M: ModuleCategory, with_ring: bool = True) -> Dict:
    d = {"mnames": list(M.mnames)}
    if M.is_partial:
        d["labels"] = {name: action_label_to_dict(label) for name, label in M.labels.items()}
        return d
    if with_ring:
        d["ring"] = ring_to_dict(M.ring)
    d["act"] = _ints(M.act)
    return d


def module_from_dict(d, ring: FusionRing = None) -> ModuleCategory:
    """
    :param d: module dict, file path or builtin key
    :param ring: acting ring when ``d`` has no ``"ring"`` entry
    """
    d = _resolve_ref(d, "module")
    if isinstance(d, ModuleCategory):
        return d
    if "labels" in d:
        labels = {name: action_label_from_dict(v) for name, v in d["labels"].items()}
        return ModuleCategory.partial(d["mnames"], labels)
    if "ring" in d:
        ring = ring_from_dict(d["ring"])
    if ring is None:
        raise FQKError("module file has neither a ring nor partial-mode labels")
    return ModuleCategory(ring, d["mnames"], d["act"])


def action_label_to_dict(label: ActionLabel) -> Dict:
    d = {"matrix": _ints(label.matrix)}
    if label.fpdim is not None:
        d["fpdim"] = float(label.fpdim)
    if label.name is not None:
        d["name"] = label.name
    return d


def action_label_from_dict(d: Dict) -> ActionLabel:
    return ActionLabel(d["matrix"], d.get("fpdim"), d.get("name"))


def label_to_spec(Q: FusionQuiver, label: Label) -> Union[str, list, Dict]:
    """A simple name when the label is a simple object or a named module action, otherwise a vector or a matrix"""
    if isinstance(label, ActionLabel):
        M = Q.module
        if M is not None and label.name in M.labels and np.array_equal(M.labels[label.name].matrix, label.matrix):
            return label.name
        return action_label_to_dict(label)
    vec = _ints(label)
    if Q.ring is not None and sum(vec) == 1 and all(c in (0, 1) for c in vec):
        return Q.ring.names[vec.index(1)]
    return vec


def label_from_spec(spec, ring: FusionRing = None, module: ModuleCategory = None) -> Label:
    if module is not None:
        return module.resolve(spec)
    if isinstance(spec, dict) and "matrix" in spec:
        return action_label_from_dict(spec)
    if ring is None:
        raise DimensionMismatch(f"label {spec!r} needs a ring or a module")
    return ring.element(spec)


def quiver_to_dict(Q: FusionQuiver) -> Dict:
    d = {
        "vertices": list(Q.vertices),
        "edges": [
            {"from": Q.vertices[s], "to": Q.vertices[t], "label": label_to_spec(Q, label)} for s, t, label in Q.edges
        ],
    }
    if Q.ring is not None:
        d["ring"] = ring_to_dict(Q.ring)
    if Q.module is not None:
        d["module"] = module_to_dict(Q.module, with_ring=Q.module.ring is not Q.ring)
    return d


def quiver_from_dict(d: Dict) -> FusionQuiver:
    ring = ring_from_dict(d["ring"]) if d.get("ring") is not None else None
    module = module_from_dict(d["module"], ring) if d.get("module") is not None else None
    edges = [(e["from"], e["to"], label_from_spec(e["label"], ring, module)) for e in d["edges"]]
    return FusionQuiver(d["vertices"], edges, ring, module)


def load_json(path: str) -> Dict:
    with open(path, "r") as fp:
        return json.load(fp)


def dump_json(d: Dict, path: str, indent: int = 1):
    with open(path, "w") as fp:
        json.dump(d, fp, indent=indent)


def load_ring(path: str) -> FusionRing:
    return ring_from_dict(path)


def load_module(path: str, ring: FusionRing = None) -> ModuleCategory:
    return module_from_dict(path, ring)


def load_quiver(path: str) -> FusionQuiver:
    logger.debug(f"reading quiver from {path}")
    return quiver_from_dict(load_json(path))


def dump(obj: Union[FusionRing, ModuleCategory, FusionQuiver], path: str):
    if isinstance(obj, FusionRing):
        dump_json(ring_to_dict(obj), path)
    elif isinstance(obj, ModuleCategory):
        dump_json(module_to_dict(obj), path)
    elif isinstance(obj, FusionQuiver):
        dump_json(quiver_to_dict(obj), path)
    else:
        raise TypeError(f"cannot write {type(obj).__name__} as JSON")
