import os

# mlflow>=3.x refuses the filesystem tracking backend (used by the task tests via tmp_path URIs) unless opted in
os.environ.setdefault("MLFLOW_ALLOW_FILE_STORE", "true")
