"""Equation soundness sweep: instantiate every schema and compare graphs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..semantics import graph, raw_graph
from ..terms.syntax import I, App, Letter, Tensor
from ..terms.theories import get_theory
from ..terms.typing import infer_type
from .axioms import F, axiom_set, library
from .enumerate import Enumerator
from .patterns import ArrVar, FunVar, ObjVar, fix_functor, instantiate, match_obj, pattern_vars
from .sampling import functor_symbols

CORE = (I, Letter("p"), Letter("q"), Letter("r"))
# instance tuples up to this count are enumerated in full
EXHAUSTIVE = 512


def object_universe(max_weight, functors, letters=("p", "q", "r")):
    """Objects whose letters, units and functor occurrences number at most ``max_weight``."""
    by_weight = {1: [I] + [Letter(x) for x in letters]}
    for w in range(2, max_weight + 1):
        out = [App(sym, x) for sym in functors for x in by_weight[w - 1]]
        for k in range(1, w):
            out += [Tensor(a, b) for a in by_weight[k] for b in by_weight[w - k]]
        by_weight[w] = out
    return [o for w in sorted(by_weight) for o in by_weight[w]]


@dataclass
class SchemaReport:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self):
        return {"schema": self.name, "instances": self.instances, "failures": [str(x) for x in self.failures[:3]]}


class _Instantiator:
    def __init__(self, th, universe, rng):
        self.th = th
        self.universe = universe
        self.rng = rng
        self.functors = functor_symbols(th)
        self.enum = Enumerator(th, CORE)

    def _arrows(self, src, max_size=3):
        return [t for n in range(1, max_size + 1) for t in self.enum.exact(src, n)]

    def bind_arrows(self, arrvars, b):
        for v in arrvars:
            for _ in range(20):
                trial = dict(b)
                if isinstance(v.src, ObjVar) and v.src not in trial:
                    trial[v.src] = self.rng.choice(self.universe)
                src = v.src if not isinstance(v.src, ObjVar) else trial[v.src]
                fits = []
                for term, tgt in self._arrows(src):
                    got = match_obj(v.tgt, tgt, trial)
                    if got is not None:
                        fits.append((term, got))
                if fits:
                    term, b = self.rng.choice(fits)
                    b[v] = term
                    break
            else:
                return None
        return b

    def instances(self, eq, count):
        """Distinct ``(lhs, rhs)`` instances: every tuple when few, then random ones."""
        pv = pattern_vars(eq.lhs) | pattern_vars(eq.rhs)
        arrvars = sorted((v for v in pv if isinstance(v, ArrVar)), key=lambda v: v.name)
        bound_by_arrows = set()
        for v in arrvars:
            bound_by_arrows |= {x for x in pattern_vars(v) if isinstance(x, ObjVar)}
        free = sorted((v for v in pv if isinstance(v, ObjVar) and v not in bound_by_arrows), key=lambda v: v.name)
        funvars = [v for v in pv if isinstance(v, FunVar)]

        seen = {}

        def emit(b):
            lhs, rhs = instantiate(eq.lhs, b), instantiate(eq.rhs, b)
            seen.setdefault((lhs, rhs), None)

        def base():
            return {fv: self.rng.choice(self.functors) for fv in funvars}

        if not arrvars and len(self.universe) ** len(free) <= EXHAUSTIVE:
            pool = self.universe
        elif not arrvars and len(CORE) ** len(free) <= EXHAUSTIVE:
            pool = CORE
        else:
            pool = ()
        if pool:
            for combo in itertools.product(pool, repeat=len(free)):
                b = base()
                b.update(zip(free, combo))
                emit(b)
        tries = 0
        while len(seen) < count and tries < 6 * count:
            tries += 1
            b = self.bind_arrows(arrvars, base())
            if b is None:
                continue
            for v in free:
                b[v] = self.rng.choice(self.universe)
            emit(b)
        return list(seen)


def sweep(th, max_weight=3, per_schema=40, seed=0):
    """Check every schema of ``th``; returns one report per schema."""
    th = get_theory(th)
    rng = random.Random(seed)
    universe = object_universe(max_weight, functor_symbols(th))
    inst = _Instantiator(th, universe, rng)
    reports = []
    for eq in axiom_set(th):
        rep = SchemaReport(eq.name)
        for lhs, rhs in inst.instances(eq, per_schema):
            rep.instances += 1
            try:
                if infer_type(lhs, th) != infer_type(rhs, th) or graph(lhs, th) != graph(rhs, th):
                    rep.failures.append((lhs, rhs))
            except Exception as exc:  # an ill-typed instance is a failure too
                rep.failures.append((lhs, rhs, exc))
        reports.append(rep)
    return reports


def sweep_unused(max_weight=2, per_schema=30, seed=0, count_letters=False):
    """Schemas that no theory keeps, evaluated without signature checks."""
    from ..terms.theories import L, THEORIES

    used = {eq.name for name in THEORIES for eq in axiom_set(name)}
    rng = random.Random(seed)
    universe = object_universe(max_weight, (L,))
    reports = []
    for eq in library():
        if eq.name in used:
            continue
        rep = SchemaReport(eq.name)
        lhs_p, rhs_p = fix_functor(eq.lhs, F, L), fix_functor(eq.rhs, F, L)
        pv = pattern_vars(lhs_p) | pattern_vars(rhs_p)
        free = sorted((v for v in pv if isinstance(v, ObjVar)), key=lambda v: v.name)
        combos = set()
        while len(combos) < per_schema and len(combos) < len(universe) ** len(free):
            combos.add(tuple(rng.choice(universe) for _ in free))
        for combo in sorted(combos, key=str):
            b = dict(zip(free, combo))
            lhs, rhs = instantiate(lhs_p, b), instantiate(rhs_p, b)
            rep.instances += 1
            if raw_graph(lhs, count_letters) != raw_graph(rhs, count_letters):
                rep.failures.append((lhs, rhs))
        reports.append(rep)
    return reports
