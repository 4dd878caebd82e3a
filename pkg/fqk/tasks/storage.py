from typing import Dict, List, Sequence

import os, numpy as np, xarray as xr
from tabulate import tabulate

from fqk.fusion.module import ModuleCategory
from fqk.quiver.core import FusionQuiver
from fqk.roots.rank2 import SignCoherenceReport
from fqk.unfolding.verdict import FiniteTypeVerdict

SIGN_CODES = {"negative": -1, "zero": 0, "positive": 1, "incoherent": 2}


def _write(ds: xr.Dataset, td: str, fname: str) -> xr.Dataset:
    os.makedirs(os.path.join(td, "binary"), exist_ok=True)
    ds.to_netcdf(os.path.join(td, "binary", fname), engine="h5netcdf")
    return ds


def store_dimension_vectors(vectors: Sequence[np.ndarray], Q: FusionQuiver, M: ModuleCategory, td: str) -> xr.Dataset:
    """
    Stores dimension vectors as one ``int64`` array over ``(root, vertex, simple)``

    :param vectors: ``(|V|, |Irr(M)|)`` object arrays
    :param Q:
    :param M:
    :param td:
    :return:
    """
    data = np.array([np.asarray(x, dtype=np.int64) for x in vectors]).reshape(len(vectors), Q.num_vertices, M.msize)
    da = xr.DataArray(
        data,
        coords=(("root", np.arange(len(vectors))), ("vertex", list(Q.vertices)), ("simple", list(M.mnames))),
    )
    return _write(xr.Dataset({"dimension_vectors": da}), td, "dimension_vectors.nc")


def store_components(verdict: FiniteTypeVerdict, td: str) -> xr.Dataset:
    comps = verdict.unfolded.components
    axis = ("component", np.arange(len(comps)))
    gamma = verdict.gamma.components
    gaxis = ("gamma_component", np.arange(len(gamma)))
    ds = xr.Dataset(
        {
            "type": xr.DataArray([c.type for c in comps], coords=(axis,)),
            "coxeter_number": xr.DataArray([float(c.coxeter_number) for c in comps], coords=(axis,)),
            "positive_roots": xr.DataArray([float(c.positive_root_count) for c in comps], coords=(axis,)),
            "size": xr.DataArray([len(c.vertices) for c in comps], coords=(axis,)),
            "gamma_type": xr.DataArray([c.name for c in gamma], coords=(gaxis,)),
            "gamma_coxeter_number": xr.DataArray([float(c.coxeter_number) for c in gamma], coords=(gaxis,)),
        },
        attrs={"finite": int(verdict.finite), "summary": verdict.summary()},
    )
    return _write(ds, td, "components.nc")


def store_qnum_signs(report: SignCoherenceReport, fp_d: Sequence[float], td: str) -> xr.Dataset:
    """Sign classes coded -1 / 0 / 1 (2 = incoherent) for ``k = 1..K`` and ``FPdim([k]_d)``"""
    k = ("k", np.arange(1, report.K + 1))
    ds = xr.Dataset(
        {
            "sign_d": xr.DataArray([SIGN_CODES[s] for s in report.signs_d], coords=(k,)),
            "sign_dprime": xr.DataArray([SIGN_CODES[s] for s in report.signs_dprime], coords=(k,)),
            "fpdim_d": xr.DataArray(np.asarray(fp_d, dtype=np.float64), coords=(k,)),
        },
        attrs={"minimal_m": float(report.minimal_m)},
    )
    return _write(ds, td, "qnum_signs.nc")


def store_sweep(rows: List[Dict], td: str) -> xr.Dataset:
    axis = ("entry", [r["key"] for r in rows])
    data_vars = {
        name: xr.DataArray([r[name] for r in rows], coords=(axis,))
        for name in ("finite", "gamma", "unfolded", "indecomposables", "methods_agree", "flagged")
    }
    return _write(xr.Dataset(data_vars), td, "sweep.nc")


def write_table(rows: Sequence, headers: Sequence[str], td: str, fname: str) -> str:
    text = tabulate(rows, headers=headers)
    with open(os.path.join(td, fname), "w") as fi:
        fi.write(text + "\n")
    return text
