"""Congruence checks and the worked examples."""
from .cases import CASES, LABEL_ONLY, ExampleCase, UnknownEquations, get_case
from .congruence import CongruenceReport, verify_congruence
from .reproduce import CaseReport, Stage, reproduce
from .suite import GROUPS, SCHEMA, verify_all

__all__ = [
    "CASES",
    "GROUPS",
    "LABEL_ONLY",
    "SCHEMA",
    "CaseReport",
    "CongruenceReport",
    "ExampleCase",
    "Stage",
    "UnknownEquations",
    "get_case",
    "reproduce",
    "verify_all",
    "verify_congruence",
]
