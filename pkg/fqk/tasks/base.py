from typing import Dict, List

import logging, math, os
import numpy as np

from fqk import FQKModule
from fqk.catalog import builtin, catalog_list, flag_count
from fqk.errors import FQKError, InconsistentVerdict
from fqk.fusion.fpdim import fpdim_of
from fqk.fusion.module import ModuleCategory, label_dimension
from fqk.fusion.ring import FusionRing
from fqk.quiver.core import FusionQuiver, normalize
from fqk.quiver.coxeter import coxeter_graph
from fqk.roots.enumerate import enumerate_by_coxeter, enumerate_indecomposables
from fqk.roots.qnum import qnum_sequence
from fqk.roots.rank2 import rank_two_order, sign_coherence
from fqk.tasks import storage
from fqk.unfolding.verdict import is_finite_type
from fqk.utils import io
from fqk.utils.dot import to_dot

logger = logging.getLogger(__name__)


def load_input(spec: Dict):
    """
    Builds a ring, module or quiver from an ``input`` block: ``{"builtin": key, "params": {...}}`` or one of
    ``{"quiver": path}``, ``{"module": path}``, ``{"ring": path}``.
    """
    if "builtin" in spec:
        return builtin(spec["builtin"], **(spec.get("params") or {}))
    if "quiver" in spec:
        return io.load_quiver(spec["quiver"])
    if "module" in spec:
        return io.load_module(spec["module"])
    if "ring" in spec:
        return io.load_ring(spec["ring"])
    raise FQKError(f"input block needs one of builtin / quiver / module / ring, got {sorted(spec)}")


def _finite_metric(x) -> float:
    return -1.0 if x == math.inf else float(x)


class QuiverTask(FQKModule):
    """Tasks on a single fusion quiver, optionally over an explicit module"""

    def get_derived_quantities(self) -> Dict:
        self.cfg.setdefault("numerics", {})
        self.cfg["numerics"].setdefault("tol", None)
        if "builtin" in self.cfg["input"]:
            entry = {e.key: e for e in catalog_list()}[self.cfg["input"]["builtin"]]
            self.cfg["input"]["params"] = {**entry.params, **(self.cfg["input"].get("params") or {})}
        return self.cfg

    def init_inputs(self) -> Dict:
        Q = load_input(self.cfg["input"])
        if not isinstance(Q, FusionQuiver):
            raise FQKError(f"{self.cfg['task']} needs a quiver input")
        M = self.cfg["input"].get("module")
        if isinstance(M, str):
            M = io.load_module(M, Q.ring)
        elif M is not None:
            M = load_input(M)
        Q = normalize(Q)
        self.inputs = {"quiver": Q, "module": Q.default_module() if M is None else M}
        return self.inputs

    def _write_dots(self, verdict, td: str):
        os.makedirs(os.path.join(td, "dot"), exist_ok=True)
        Q = self.inputs["quiver"]
        for fname, obj in (
            ("quiver.dot", Q),
            ("gamma.dot", coxeter_graph(Q, self.tol)),
            ("unfolded.dot", verdict.unfolded_quiver),
        ):
            with open(os.path.join(td, "dot", fname), "w") as fi:
                fi.write(to_dot(obj, fname.split(".")[0]))

    @property
    def tol(self):
        return self.cfg["numerics"]["tol"]


class ClassifyTask(QuiverTask):
    def __call__(self, args: Dict = None) -> Dict:
        verdict = is_finite_type(self.inputs["quiver"], self.inputs["module"], self.tol)
        return {"verdict": verdict}

    def post_process(self, run_output: Dict, td: str) -> Dict:
        verdict = run_output["verdict"]
        ds = storage.store_components(verdict, td)
        rows = [(c.type, c.coxeter_number, c.positive_root_count, len(c.vertices)) for c in verdict.unfolded.components]
        storage.write_table(rows, ["type", "h", "roots", "size"], td, "components.txt")
        self._write_dots(verdict, td)
        metrics = {
            "finite": int(verdict.finite),
            "num_components": len(verdict.unfolded.components),
            "num_indecomposables": _finite_metric(verdict.num_indecomposables),
        }
        return {"components": ds, "metrics": metrics}


class EnumerateTask(QuiverTask):
    def get_derived_quantities(self) -> Dict:
        super().get_derived_quantities()
        self.cfg.setdefault("enumerate", {})
        self.cfg["enumerate"].setdefault("check", True)
        self.cfg["enumerate"].setdefault("coxeter", True)
        return self.cfg

    def __call__(self, args: Dict = None) -> Dict:
        Q, M = self.inputs["quiver"], self.inputs["module"]
        vectors = enumerate_indecomposables(Q, M, self.tol, check=self.cfg["enumerate"]["check"])
        out = {"vectors": vectors}
        if self.cfg["enumerate"]["coxeter"]:
            by_coxeter = enumerate_by_coxeter(Q, M, self.tol)
            if len(by_coxeter) != len(vectors) or any(not np.array_equal(a, b) for a, b in zip(by_coxeter, vectors)):
                raise InconsistentVerdict(f"Coxeter orbits give {len(by_coxeter)} vectors, roots give {len(vectors)}")
        if "builtin" in self.cfg["input"]:
            out["flagged"] = flag_count(self.cfg["input"]["builtin"], len(vectors), **self.cfg["input"]["params"])
        return out

    def post_process(self, run_output: Dict, td: str) -> Dict:
        Q, M = self.inputs["quiver"], self.inputs["module"]
        vectors = run_output["vectors"]
        ds = storage.store_dimension_vectors(vectors, Q, M, td)
        storage.write_table([[M.format(row) for row in x] for x in vectors], list(Q.vertices), td, "dimension_vectors.txt")
        metrics = {"num_indecomposables": len(vectors), "flagged": int(run_output.get("flagged", False))}
        return {"dimension_vectors": ds, "metrics": metrics}


class RankTwoTask(FQKModule):
    """Order of ``sigma_a sigma_b`` and the quantum-number sign table of one label"""

    def get_derived_quantities(self) -> Dict:
        self.cfg["input"].setdefault("K", 20)
        self.cfg.setdefault("numerics", {})
        self.cfg["numerics"].setdefault("tol", None)
        return self.cfg

    def init_inputs(self) -> Dict:
        source = load_input(self.cfg["input"])
        if isinstance(source, FusionQuiver):
            raise FQKError("rank2 needs a ring or a module input")
        spec = self.cfg["input"]["object"]
        Pi = source.resolve(spec) if isinstance(source, ModuleCategory) else source.element(spec)
        self.inputs = {"source": source, "object": Pi}
        return self.inputs

    def __call__(self, args: Dict = None) -> Dict:
        source, Pi = self.inputs["source"], self.inputs["object"]
        tol = self.cfg["numerics"]["tol"]
        out = {"order": rank_two_order(source, Pi, tol)}
        ring = source if isinstance(source, FusionRing) else source.ring
        if ring is not None and isinstance(Pi, np.ndarray):
            K = self.cfg["input"]["K"]
            out["signs"] = sign_coherence(ring, Pi, K, tol)
            a_seq, _ = qnum_sequence(ring, Pi, K)
            out["fpdim_d"] = [fpdim_of(ring, a) for a in a_seq[1:]]
        else:
            out["fpdim_label"] = label_dimension(Pi)
        return out

    def post_process(self, run_output: Dict, td: str) -> Dict:
        result = {"metrics": {"order": _finite_metric(run_output["order"])}}
        if "signs" in run_output:
            report = run_output["signs"]
            result["qnum_signs"] = storage.store_qnum_signs(report, run_output["fpdim_d"], td)
            rows = list(zip(range(1, report.K + 1), report.signs_d, report.signs_dprime, run_output["fpdim_d"]))
            storage.write_table(rows, ["k", "[k]_d", "[k]_d'", "FPdim"], td, "qnum_signs.txt")
        return result


class CatalogSweepTask(FQKModule):
    """Classifies every builtin quiver (or those listed under ``sweep.keys``) and cross-checks the enumerations"""

    def get_derived_quantities(self) -> Dict:
        self.cfg.setdefault("sweep", {})
        keys = self.cfg["sweep"].get("keys")
        if not keys or keys == "all":
            self.cfg["sweep"]["keys"] = [e.key for e in catalog_list("quiver")]
        self.cfg["sweep"].setdefault("params", {})
        return self.cfg

    def init_inputs(self) -> Dict:
        jobs = []
        for key in self.cfg["sweep"]["keys"]:
            for params in self.cfg["sweep"]["params"].get(key, [{}]):
                jobs.append((key, params, builtin(key, **params)))
        self.inputs = {"jobs": jobs}
        return self.inputs

    def __call__(self, args: Dict = None) -> Dict:
        rows: List[Dict] = []
        for key, params, Q in self.inputs["jobs"]:
            name = key + "".join(f"[{k}={v}]" for k, v in sorted(params.items()))
            verdict = is_finite_type(Q)
            row = {
                "key": name,
                "finite": int(verdict.finite),
                "gamma": verdict.gamma.summary(),
                "unfolded": verdict.unfolded.summary(),
                "indecomposables": _finite_metric(verdict.num_indecomposables),
                "methods_agree": 1,
                "flagged": 0,
            }
            if verdict.finite:
                by_roots = enumerate_indecomposables(Q)
                by_coxeter = enumerate_by_coxeter(Q)
                agree = len(by_roots) == len(by_coxeter) and all(np.array_equal(a, b) for a, b in zip(by_roots, by_coxeter))
                row["methods_agree"] = int(agree)
                if not row["methods_agree"]:
                    logger.warning(f"{name}: enumeration paths disagree")
                row["flagged"] = int(flag_count(key, len(by_roots), **params))
            rows.append(row)
        return {"rows": rows}

    def post_process(self, run_output: Dict, td: str) -> Dict:
        rows = run_output["rows"]
        ds = storage.store_sweep(rows, td)
        storage.write_table(
            [[r[k] for k in ("key", "finite", "gamma", "unfolded", "indecomposables", "methods_agree", "flagged")] for r in rows],
            ["key", "finite", "gamma", "unfolded", "indecomposables", "agree", "flagged"],
            td,
            "sweep.txt",
        )
        metrics = {
            "num_entries": len(rows),
            "num_finite": sum(r["finite"] for r in rows),
            "all_agree": int(all(r["methods_agree"] for r in rows)),
            "num_flagged": sum(r["flagged"] for r in rows),
        }
        return {"sweep": ds, "metrics": metrics}
