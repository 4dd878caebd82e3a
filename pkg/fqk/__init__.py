from typing import Dict, Tuple
import os, time, tempfile, yaml

import mlflow
from jax import config

config.update("jax_enable_x64", True)


class FQKModule:
    """
    Base class for the ``fqk`` tasks. It defines the hooks that ``QuiverExo`` calls, in order: ``get_derived_quantities``,
    ``init_inputs``, ``__call__`` and ``post_process``.

    Args:
        cfg: The configuration dictionary

    """

    def __init__(self, cfg) -> None:
        self.cfg = cfg
        self.inputs = None

    def get_derived_quantities(self) -> Dict:
        """
        Fills in derived entries of the configuration, e.g. defaults of the builtin parameters. These get logged to mlflow
        by ``QuiverExo``.

        Returns:
            An updated configuration dictionary

        """
        return self.cfg

    def init_inputs(self) -> Dict:
        """
        Builds the fusion data the task runs on (quivers, modules, labels) and stores them in ``self.inputs``. These
        are NOT logged as parameters.

        """
        return {}

    def __call__(self, args: Dict = None) -> Dict:
        return {}

    def post_process(self, run_output: Dict, td: str) -> Dict:
        """
        Writes ``xarray`` datasets, text tables and DOT files into ``td``.

        Args:
            run_output: The output of ``__call__``
            td: The temporary directory that gets logged to mlflow

        Returns:
            A dictionary of post-processed results. A ``metrics`` entry gets logged to mlflow

        """
        return {}


class QuiverExo:
    """
    Runs an ``fqk`` task from a configuration dictionary and logs parameters, artifacts and metrics to mlflow.

    .. code-block:: python

        exo = QuiverExo()
        exo.setup(cfg)
        run_output, post_processing_output, mlflow_run_id = exo()

    To resume an existing mlflow run

    .. code-block:: python

        exo = QuiverExo(mlflow_run_id=mlflow_run_id)
        exo.setup(cfg)
        run_output, post_processing_output, mlflow_run_id = exo()

    """

    def __init__(self, mlflow_run_id: str = None, mlflow_nested: bool = None) -> None:
        self.mlflow_run_id = mlflow_run_id
        self.mlflow_nested = False if mlflow_nested is None else mlflow_nested

        if "BASE_TEMPDIR" in os.environ:
            self.base_tempdir = os.environ["BASE_TEMPDIR"]
        else:
            self.base_tempdir = None

        self.ran_setup = False

    def setup(self, cfg: Dict, fqk_module: FQKModule = None) -> Dict:
        """
        1. starts (or resumes) the mlflow run
        2. picks the task module from ``cfg["task"]`` unless one is passed in
        3. dumps the raw and derived configs to a temporary directory, logs the parameters and the directory

        Args:
            cfg: The configuration dictionary

        Returns:
            the inputs built by the task

        """
        with tempfile.TemporaryDirectory(dir=self.base_tempdir) as td:
            if self.mlflow_run_id is None:
                mlflow.set_experiment(cfg["mlflow"]["experiment"])
                with mlflow.start_run(run_name=cfg["mlflow"]["run"], nested=self.mlflow_nested) as mlflow_run:
                    inputs = self._setup_(cfg, td, fqk_module)
                    mlflow.log_artifacts(td)
                self.mlflow_run_id = mlflow_run.info.run_id

            else:
                from fqk.utils.misc import get_cfg

                with mlflow.start_run(run_id=self.mlflow_run_id, nested=self.mlflow_nested) as mlflow_run:
                    with tempfile.TemporaryDirectory(dir=self.base_tempdir) as temp_path:
                        cfg = get_cfg(artifact_uri=mlflow_run.info.artifact_uri, temp_path=temp_path)
                    inputs = self._setup_(cfg, td, fqk_module)
                    mlflow.log_artifacts(td)

        return inputs

    def _get_fqk_module_(self, cfg: Dict) -> FQKModule:
        from fqk.tasks import base

        tasks = {
            "classify": base.ClassifyTask,
            "enumerate": base.EnumerateTask,
            "rank2": base.RankTwoTask,
            "catalog-sweep": base.CatalogSweepTask,
        }
        if cfg["task"] not in tasks:
            raise NotImplementedError(f"task {cfg['task']!r} has not been implemented, choose from {sorted(tasks)}")

        return tasks[cfg["task"]](cfg)

    def _setup_(self, cfg: Dict, td: str, fqk_module: FQKModule = None, log: bool = True) -> Dict:
        from fqk.utils.misc import log_params

        self.fqk_module = self._get_fqk_module_(cfg) if fqk_module is None else fqk_module

        if log:
            with open(os.path.join(td, "config.yaml"), "w") as fi:
                yaml.dump(self.fqk_module.cfg, fi)

        self.fqk_module.get_derived_quantities()
        if log:
            log_params(self.fqk_module.cfg)
            with open(os.path.join(td, "derived_config.yaml"), "w") as fi:
                yaml.dump(self.fqk_module.cfg, fi)

        inputs = self.fqk_module.init_inputs()
        self.ran_setup = True

        return inputs

    def __call__(self, args: Dict = None) -> Tuple[Dict, Dict, str]:
        """
        Runs the task and post-processes it inside the mlflow run.

        Returns:
            a tuple of the run output, the post-processing output and the mlflow run id

        """
        assert self.ran_setup, "You must run self.setup() before running the task"

        with mlflow.start_run(run_id=self.mlflow_run_id, nested=self.mlflow_nested) as mlflow_run:
            t0 = time.time()
            run_output = self.fqk_module(args)
            mlflow.log_metrics({"run_time": round(time.time() - t0, 4)})

            t0 = time.time()
            with tempfile.TemporaryDirectory(dir=self.base_tempdir) as td:
                post_processing_output = self.fqk_module.post_process(run_output, td)
                mlflow.log_artifacts(td)

                if "metrics" in post_processing_output:
                    mlflow.log_metrics(post_processing_output["metrics"])
            mlflow.log_metrics({"postprocess_time": round(time.time() - t0, 4)})

        return run_output, post_processing_output, self.mlflow_run_id
