import os, shutil

import flatdict, mlflow, yaml


DEFAULT_TOL = 1e-9


def get_tol(tol: float = None) -> float:
    """
    Numeric tolerance used for every real-valued comparison. An explicit argument wins, then ``FQK_TOL``, then the
    default of 1e-9.

    :param tol:
    :return:
    """
    if tol is not None:
        return float(tol)
    if "FQK_TOL" in os.environ:
        return float(os.environ["FQK_TOL"])
    return DEFAULT_TOL


def log_params(cfg):
    flattened_dict = dict(flatdict.FlatDict(cfg, delimiter="."))
    flattened_dict = {k: v if isinstance(v, (int, float, str, bool)) else str(v) for k, v in flattened_dict.items()}

    fl_list = list(flattened_dict.items())
    for i in range(0, len(fl_list), 100):
        mlflow.log_params(dict(fl_list[i : i + 100]))


def get_cfg(artifact_uri, temp_path):
    dest_file_path = download_file("config.yaml", artifact_uri, temp_path)
    with open(dest_file_path, "r") as file:
        cfg = yaml.safe_load(file)

    return cfg


def download_file(fname, artifact_uri, destination_path):
    file_uri = mlflow.get_artifact_uri(fname)
    dest_file_path = os.path.join(destination_path, fname)

    if file_uri.startswith("file://"):
        file_uri = file_uri[7:]
    if os.path.exists(file_uri):
        shutil.copyfile(file_uri, dest_file_path)
    else:
        return None

    return dest_file_path
