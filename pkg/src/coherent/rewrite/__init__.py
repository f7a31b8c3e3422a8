"""Equational rewriting used to cross-check the graph decision procedure."""

from .axioms import EquationSchema, Rule, axiom_set, library, rules
from .enumerate import Enumerator, enumerate_arrows, find_arrow, reachable_objects
from .normalize import Factorization, Stage, normalize
from .oracle import DEFAULT_BUDGET, Equivalent, InvalidPath, RewriteStep, Unknown, equivalent_bounded, neighbors, replay
from .patterns import ArrVar, FunVar, ObjVar
from .sampling import random_object, random_term, sample_terms
from .sweep import object_universe, sweep, sweep_unused

__all__ = [
    "ArrVar",
    "DEFAULT_BUDGET",
    "EquationSchema",
    "Enumerator",
    "Equivalent",
    "Factorization",
    "FunVar",
    "InvalidPath",
    "ObjVar",
    "RewriteStep",
    "Rule",
    "Stage",
    "Unknown",
    "axiom_set",
    "enumerate_arrows",
    "equivalent_bounded",
    "find_arrow",
    "library",
    "neighbors",
    "normalize",
    "object_universe",
    "random_object",
    "reachable_objects",
    "random_term",
    "replay",
    "rules",
    "sample_terms",
    "sweep",
    "sweep_unused",
]
