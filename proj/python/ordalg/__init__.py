"""Finite order-theoretic and operator-algebraic checks."""

import json as _json

from . import _core
from ._core import (
    OrdalgError,
    cb_derivative,
    cb_rank,
    eqrel_join,
    eqrel_meet,
    partition_count,
    run,
    topo_stages,
)

__version__ = _core.__version__


def poset_report(poset):
    """Domain report for a poset given as {"elements": [...], "leq": [[...]]}."""
    return _json.loads(_core.poset_report(_json.dumps(poset)))


def verify_counterexample(depth):
    return _json.loads(_core.verify_counterexample(depth))


def caf_iso_diagonal(k):
    return _json.loads(_core.caf_iso_diagonal(k))


def acceptance(selector="fast"):
    return _json.loads(_core.acceptance(selector))


__all__ = [
    "OrdalgError",
    "acceptance",
    "caf_iso_diagonal",
    "cb_derivative",
    "cb_rank",
    "eqrel_join",
    "eqrel_meet",
    "partition_count",
    "poset_report",
    "run",
    "topo_stages",
    "verify_counterexample",
]
