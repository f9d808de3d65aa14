"""Proof checking in HHT and HT-validity of infinitary instances.

Every function takes the text of a file in the corresponding format; the
``*_file`` helpers read a path first.
"""

from pathlib import Path

from ._hhtkit import (
    BOUNDED_LABEL,
    BudgetExceeded,
    Error,
    InstantiationError,
    ParseError,
    check_proof,
    eliminate_restrictors,
    herbrand_check,
    ht_valid,
    instantiate,
    list_schemas,
    pipeline,
)

__all__ = [
    "BOUNDED_LABEL",
    "BudgetExceeded",
    "Error",
    "InstantiationError",
    "ParseError",
    "check_proof",
    "check_proof_file",
    "eliminate_restrictors",
    "herbrand_check",
    "ht_valid",
    "instantiate",
    "list_schemas",
    "pipeline",
    "pipeline_files",
]


def check_proof_file(path):
    return check_proof(Path(path).read_text())


def pipeline_files(proof_path, subst_path, depth=None):
    return pipeline(Path(proof_path).read_text(), Path(subst_path).read_text(), depth)
