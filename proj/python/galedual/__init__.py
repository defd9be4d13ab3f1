"""Gale duality for sparse polynomial systems.

Systems are passed as dicts (or JSON text) in the same format the command-line
tool reads; reports come back as dicts.
"""

import json

from . import _core
from ._core import (
    GaledualError,
    fewnomial_bound,
    hnf,
    kernel_basis,
    normalized_volume,
    saturation_index,
    snf_diagonal,
)

__all__ = [
    "GaledualError",
    "bound",
    "dualize",
    "fewnomial_bound",
    "hnf",
    "kernel_basis",
    "load",
    "normalized_volume",
    "saturation_index",
    "snf_diagonal",
    "solve",
    "verify",
]


def _text(system):
    return system if isinstance(system, str) else json.dumps(system)


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def dualize(system, allow_nonprimitive=False):
    return json.loads(_core.dualize(_text(system), allow_nonprimitive))


def bound(system):
    return json.loads(_core.bound(_text(system)))


def solve(system, cluster_tol=1e-6, verify_tol=1e-9, seed=0):
    return json.loads(_core.solve(_text(system), cluster_tol, verify_tol, seed))


def verify(system, cluster_tol=1e-6, verify_tol=1e-9, seed=0):
    return json.loads(_core.verify(_text(system), cluster_tol, verify_tol, seed))
