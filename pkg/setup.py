#!/usr/bin/env python

import os
import sys

from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))
sys.path.append(here)

# get the long description from the README file
with open(os.path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()


setup(
    # metadata
    name="fqk",
    description="Fusion quivers: finite-type classification, unfolding and indecomposables",
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=1.0,
    packages=find_packages(include=["fqk", "fqk.*"]),
    python_requires=">=3.9",
    install_requires=[
        "jax[cpu]",
        "equinox",
        "scipy",
        "numpy",
        "networkx",
        "xarray",
        "mlflow",
        "flatdict",
        "h5netcdf",
        "pyyaml",
        "tabulate",
    ],
    extras_require={
        "dev": [
            "pytest",
        ],
    },
    entry_points={
        "console_scripts": [
            "fqk=fqk.cli:main",
        ],
    },
)
