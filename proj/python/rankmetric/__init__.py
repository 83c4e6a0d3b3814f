"""Rank-metric codes over small finite fields.

Thin wrapper over the C++ extension: field towers, trace-dual bases,
Gabidulin and Delsarte code constructions, LCD/MRD/anticode checks, and
the claim-audit suite.
"""

import json as _json

from ._core import (  # noqa: F401
    Basis,
    Element,
    Error,
    MatrixCode,
    Subspace,
    Tower,
    VectorCode,
    expand_vector,
    find_almost_self_dual_basis,
    find_self_dual_basis,
    gabidulin_code,
    matrix_code_from_json,
    report_gabidulin_json,
    run_suite_ndjson,
    vector_code_from_json,
    vector_rank,
)

__all__ = [
    "Basis",
    "Element",
    "Error",
    "MatrixCode",
    "Subspace",
    "Tower",
    "VectorCode",
    "expand_vector",
    "find_almost_self_dual_basis",
    "find_self_dual_basis",
    "gabidulin_code",
    "matrix_code_from_json",
    "report_gabidulin_json",
    "run_suite",
    "run_suite_ndjson",
    "vector_code_from_json",
    "vector_rank",
]


def run_suite(towers=None, seed=0, max_enum=1 << 20):
    """Run the claim-audit suite; returns the certificates as dicts."""
    ndjson = run_suite_ndjson(list(towers or []), seed, max_enum)
    return [_json.loads(line) for line in ndjson.splitlines()]
