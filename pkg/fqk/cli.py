#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Command-line interface. ``--builtin KEY`` stands in for a file argument everywhere.

Exit codes: 0 on success, 1 when validation fails or the computation rejects the input, 2 on usage errors.
"""
import argparse
import json
import logging
import math
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np
from tabulate import tabulate

from fqk.catalog import builtin, catalog_list
from fqk.errors import FQKError, InfiniteType, UnknownBuiltin
from fqk.fusion.fpdim import fpdim, fpdim_of
from fqk.fusion.module import ModuleCategory, mckay_quiver, regular_module, validate_module
from fqk.fusion.ring import FusionRing, validate
from fqk.quiver.core import FusionQuiver, normalize
from fqk.quiver.coxeter import classify_coxeter, coxeter_graph
from fqk.roots.enumerate import enumerate_by_coxeter, enumerate_indecomposables, reflection_closure
from fqk.roots.qnum import qnum_free, qnum_sequence
from fqk.roots.rank2 import rank_two_order, sign_coherence
from fqk.unfolding.unfold import unfold
from fqk.unfolding.verdict import is_finite_type
from fqk.utils import io
from fqk.utils.dot import to_dot

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _number(x) -> str:
    return "∞" if x == math.inf else str(x)


def _json_value(text: str):
    if text is None:
        return None
    text = text.strip()
    return json.loads(text) if text[:1] in "[{" else text


def _params(args) -> Dict:
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = int(v) if v.lstrip("-").isdigit() else v
    if getattr(args, "level", None) is not None:
        params["level"] = args.level
    return params


def _from_builtin(args):
    params = _params(args)
    key = args.builtin
    entry = {e.key: e for e in catalog_list()}.get(key)
    if entry is None:
        raise UnknownBuiltin(f"unknown builtin {key!r}")
    return builtin(key, **{k: v for k, v in params.items() if k in entry.params})


def _ring(args) -> FusionRing:
    if getattr(args, "ring", None):
        return io.load_ring(args.ring)
    if args.builtin:
        obj = _from_builtin(args)
        if isinstance(obj, FusionRing):
            return obj
        if isinstance(obj, (ModuleCategory, FusionQuiver)) and obj.ring is not None:
            return obj.ring
        raise UsageError(f"builtin {args.builtin!r} carries no fusion ring")
    raise UsageError("pass --ring FILE or --builtin KEY")


def _module(args, ring: FusionRing = None) -> Optional[ModuleCategory]:
    if getattr(args, "module", None):
        return io.load_module(args.module, ring)
    key = getattr(args, "builtin_module", None)
    if key:
        entry = {e.key: e for e in catalog_list("module")}.get(key)
        if entry is None:
            raise UnknownBuiltin(f"unknown builtin module {key!r}")
        params = {k: v for k, v in _params(args).items() if k in entry.params}
        if key == "regular" and "ring" not in params and ring is not None:
            return regular_module(ring)
        return builtin(key, **params)
    return None


def _quiver(args) -> FusionQuiver:
    if getattr(args, "quiver", None):
        return io.load_quiver(args.quiver)
    if args.builtin:
        obj = _from_builtin(args)
        if isinstance(obj, FusionQuiver):
            return obj
        raise UsageError(f"builtin {args.builtin!r} is not a quiver")
    raise UsageError("pass --quiver FILE or --builtin KEY")


def _emit(args, payload, text: str):
    if getattr(args, "format", "table") == "json":
        print(json.dumps(payload, indent=1, default=str))
    else:
        print(text)


def cmd_validate(args) -> int:
    reports = {}
    if getattr(args, "quiver", None) or (args.builtin and isinstance(_from_builtin(args), FusionQuiver)):
        Q = _quiver(args)
        if Q.ring is not None:
            reports["ring"] = validate(Q.ring)
        M = _module(args, Q.ring) or Q.module
        if M is not None:
            reports["module"] = validate_module(M)
    else:
        obj = _from_builtin(args) if args.builtin else None
        if isinstance(obj, ModuleCategory):
            reports["module"] = validate_module(obj)
            if obj.ring is not None:
                reports["ring"] = validate(obj.ring)
        else:
            ring = _ring(args)
            reports["ring"] = validate(ring)
            M = _module(args, ring)
            if M is not None:
                reports["module"] = validate_module(M)

    rows = []
    for kind, report in reports.items():
        rows += [(kind, v.invariant, v.indices, v.message) for v in report.violations]
        rows += [(kind, "warning", "", w) for w in report.warnings]
    ok = all(r.ok for r in reports.values())
    text = "ok" if not rows else tabulate(rows, headers=["object", "invariant", "indices", "message"])
    _emit(args, {k: r.as_dict() for k, r in reports.items()}, text if ok else f"{text}\nFAILED")
    return 0 if ok else 1


def cmd_fpdim(args) -> int:
    M = _module(args)
    if M is not None and M.is_partial:
        label = M.resolve(_json_value(args.object) or next(iter(M.labels)))
        value = label.dimension()
        _emit(args, {"fpdim": value}, f"{value:.12g}")
        return 0

    ring = _ring(args)
    fp = fpdim(ring)
    if args.object is not None:
        value = fpdim_of(ring, ring.element(_json_value(args.object)), fp)
        _emit(args, {"fpdim": value}, f"{value:.12g}")
    else:
        rows = list(zip(ring.names, fp.dims.tolist()))
        _emit(args, dict(rows), tabulate(rows, headers=["simple", "FPdim"], floatfmt=".12g"))
    return 0


def cmd_gamma(args) -> int:
    G = coxeter_graph(_quiver(args))
    cls = classify_coxeter(G)
    rows = [(list(c.vertices), c.name, "finite" if c.finite else "infinite", _number(c.coxeter_number)) for c in cls.components]
    payload = {"summary": cls.summary(), "finite": cls.finite, "components": [c._asdict() for c in cls.components]}
    _emit(args, payload, f"{cls.summary()}\n\n" + tabulate(rows, headers=["vertices", "type", "", "h"]))
    return 0


def _component_rows(report) -> List:
    return [(c.type, _number(c.coxeter_number), _number(c.positive_root_count), len(c.vertices)) for c in report.components]


def cmd_classify(args) -> int:
    Q = _quiver(args)
    verdict = is_finite_type(Q, _module(args, Q.ring))
    payload = {
        "finite": verdict.finite,
        "summary": verdict.summary(),
        "gamma": verdict.gamma.types,
        "components": [c._asdict() for c in verdict.unfolded.components],
    }
    text = verdict.summary() + "\n\n" + tabulate(_component_rows(verdict.unfolded), headers=["type", "h", "roots", "size"])
    _emit(args, payload, text)
    return 0


def cmd_unfold(args) -> int:
    Q = _quiver(args)
    U = unfold(Q, _module(args, Q.ring))
    if args.dot:
        with open(args.dot, "w") as fi:
            fi.write(to_dot(U, "unfolded"))
    rows = [(U.vertices[s], U.vertices[t], m) for s, t, m in U.arrows]
    payload = {"vertices": [list(v) for v in U.vertices], "arrows": [[s, t, m] for s, t, m in U.arrows]}
    text = f"{U.num_vertices} vertices, {sum(m for _, _, m in U.arrows)} arrows\n\n" + tabulate(
        rows, headers=["from", "to", "mult"]
    )
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args) -> int:
    Q = normalize(_quiver(args))
    M = _module(args, Q.ring) or Q.default_module()
    if args.method == "coxeter":
        vectors = enumerate_by_coxeter(Q, M)
    elif args.method == "closure":
        verdict = is_finite_type(Q, M)
        if not verdict.finite:
            raise InfiniteType(verdict.summary())
        vectors = reflection_closure(Q, M)
    else:
        vectors = enumerate_indecomposables(Q, M)
    rows = [[M.format(row) for row in x] for x in vectors]
    payload = [np.asarray(x, dtype=object).tolist() for x in vectors]
    _emit(args, payload, tabulate(rows, headers=list(Q.vertices)) + f"\n\n{len(vectors)} indecomposables")
    return 0


def cmd_mckay(args) -> int:
    M = _module(args)
    if M is None:
        ring = _ring(args)
        M = regular_module(ring)
    label = M.resolve(_json_value(args.label))
    q = mckay_quiver(M, label, separated=args.separated)
    rows = [(q.vertices[s], q.vertices[t], m) for s, t, m in q.arrows]
    _emit(args, [[str(q.vertices[s]), str(q.vertices[t]), m] for s, t, m in q.arrows], tabulate(rows, headers=["from", "to", "mult"]))
    return 0


def cmd_qnum(args) -> int:
    if args.free:
        rows = [(k, str(qnum_free(k, "d")), str(qnum_free(k, "d'"))) for k in range(args.upto + 1)]
        _emit(args, rows, tabulate(rows, headers=["k", "[k]_d", "[k]_d'"]))
        return 0
    ring = _ring(args)
    Pi = ring.element(_json_value(args.object))
    a_seq, b_seq = qnum_sequence(ring, Pi, args.upto)
    rows = [(k, ring.format(a), ring.format(b), fpdim_of(ring, a)) for k, (a, b) in enumerate(zip(a_seq, b_seq))]
    payload = {"d": [a.tolist() for a in a_seq], "d'": [b.tolist() for b in b_seq]}
    _emit(args, payload, tabulate(rows, headers=["k", "[k]_d", "[k]_d'", "FPdim"], floatfmt=".6g"))
    return 0


def cmd_rank2(args) -> int:
    M = _module(args)
    if M is not None and M.is_partial:
        label = M.resolve(_json_value(args.object) or next(iter(M.labels)))
        m = rank_two_order(M, label)
        _emit(args, {"order": _number(m)}, f"order of sigma_a sigma_b: {_number(m)}")
        return 0
    ring = _ring(args)
    Pi = ring.element(_json_value(args.object))
    m = rank_two_order(ring if M is None else M, Pi)
    report = sign_coherence(ring, Pi, args.upto)
    payload = {"order": _number(m), "d": report.pattern("d"), "d'": report.pattern("d'")}
    text = "\n".join(
        [f"order of sigma_a sigma_b: {_number(m)}", "[k]_d  : " + report.pattern("d"), "[k]_d' : " + report.pattern("d'")]
    )
    _emit(args, payload, text)
    return 0


def cmd_dot(args) -> int:
    Q = _quiver(args)
    if args.what == "quiver":
        text = to_dot(Q, "Q")
    elif args.what == "gamma":
        text = to_dot(coxeter_graph(Q), "Gamma")
    else:
        text = to_dot(unfold(Q, _module(args, Q.ring)), "unfolded")
    if args.out:
        with open(args.out, "w") as fi:
            fi.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_catalog(args) -> int:
    entries = catalog_list(args.kind)
    rows = [(e.key, e.kind, ", ".join(f"{k}={v}" for k, v in e.params.items()), e.description) for e in entries]
    payload = [{"key": e.key, "kind": e.kind, "params": e.params, "description": e.description} for e in entries]
    _emit(args, payload, tabulate(rows, headers=["key", "kind", "params", "description"]))
    return 0


def _add_inputs(p: argparse.ArgumentParser, ring=False, module=False, quiver=False):
    p.add_argument("--builtin", help="catalog key used instead of a file")
    p.add_argument("--level", type=int, help="level parameter of a builtin")
    p.add_argument("--param", action="append", help="builtin parameter KEY=VALUE, repeatable")
    p.add_argument("--format", choices=["table", "json"], default="table")
    if ring:
        p.add_argument("--ring", help="fusion ring JSON file")
    if module:
        p.add_argument("--module", help="module category JSON file")
        p.add_argument("--builtin-module", dest="builtin_module", help="catalog key of a module")
    if quiver:
        p.add_argument("--quiver", help="fusion quiver JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fqk", description="Fusion quivers: finite type, unfolding and roots")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check ring, module or quiver data against the axioms")
    _add_inputs(p, ring=True, module=True, quiver=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fpdim", help="Frobenius-Perron dimensions")
    _add_inputs(p, ring=True, module=True)
    p.add_argument("--object", help="simple name, JSON vector or {name: coefficient}")
    p.set_defaults(func=cmd_fpdim)

    p = sub.add_parser("gamma", help="Coxeter graph of a quiver and its type")
    _add_inputs(p, quiver=True)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("classify", help="finite-type verdict")
    _add_inputs(p, module=True, quiver=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("unfold", help="unfolded ordinary quiver")
    _add_inputs(p, module=True, quiver=True)
    p.add_argument("--dot", help="also write DOT to this file")
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("enumerate", help="dimension vectors of the indecomposables")
    _add_inputs(p, module=True, quiver=True)
    p.add_argument("--method", choices=["roots", "closure", "coxeter"], default="roots")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mckay", help="McKay quiver of a module")
    _add_inputs(p, ring=True, module=True)
    p.add_argument("--label", required=True, help="label name, JSON vector or {\"matrix\": ...}")
    p.add_argument("--separated", action="store_true")
    p.set_defaults(func=cmd_mckay)

    p = sub.add_parser("qnum", help="two-colored quantum numbers")
    _add_inputs(p, ring=True)
    p.add_argument("--object", help="the label Pi")
    p.add_argument("--upto", type=int, default=10)
    p.add_argument("--free", action="store_true", help="print the free noncommutative polynomials")
    p.set_defaults(func=cmd_qnum)

    p = sub.add_parser("rank2", help="order of the rank-two Coxeter element and sign coherence")
    _add_inputs(p, ring=True, module=True)
    p.add_argument("--object", help="the label Pi")
    p.add_argument("--upto", type=int, default=20)
    p.set_defaults(func=cmd_rank2)

    p = sub.add_parser("dot", help="Graphviz DOT text")
    _add_inputs(p, module=True, quiver=True)
    p.add_argument("--in", dest="quiver", help="fusion quiver JSON file")
    p.add_argument("--what", choices=["quiver", "gamma", "unfolded"], default="quiver")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("catalog", help="builtin data")
    p.add_argument("action", choices=["list"])
    p.add_argument("--kind", choices=["ring", "module", "quiver"])
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, UnknownBuiltin, FileNotFoundError) as e:
        logger.error(str(e))
        return 2
    except FQKError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
