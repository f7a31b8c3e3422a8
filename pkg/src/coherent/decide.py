"""Equality of arrows by graph comparison, plus the arrow-existence tests
for the categories with an indexed family of endofunctors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import NotDiversified
from .semantics import graph
from .terms.syntax import App, Letter, object_nodes
from .terms.theories import get_theory
from .terms.typing import infer_type


@dataclass(frozen=True)
class Equal:
    def __str__(self):
        return "equal"


@dataclass(frozen=True)
class NotEqual:
    witness: tuple
    present_in: str  # "left" or "right": which graph contains the witness

    def __str__(self):
        return f"not equal: pair {self.witness} only in the {self.present_in} graph"


@dataclass(frozen=True)
class TypeMismatch:
    detail: str

    def __str__(self):
        return f"type mismatch: {self.detail}"


def equal(f, g, th):
    th = get_theory(th)
    sf, tf = infer_type(f, th)
    sg, tg = infer_type(g, th)
    if (sf, tf) != (sg, tg):
        return TypeMismatch(f"{sf} -> {tf} vs {sg} -> {tg}")
    gf, gg = graph(f, th), graph(g, th)
    if gf == gg:
        return Equal()
    only_left = sorted(gf.pair_set - gg.pair_set)
    if only_left:
        return NotEqual(only_left[0], "left")
    return NotEqual(sorted(gg.pair_set - gf.pair_set)[0], "right")


# ------------------------------------------------------------ generators


def _generators(obj):
    out = []
    for _, node in object_nodes(obj):
        if isinstance(node, Letter):
            out.append(node.name)
        elif isinstance(node, App):
            out.append(str(node.functor))
    return out


def is_diversified(obj):
    return all(n == 1 for n in Counter(_generators(obj)).values())


def is_letter_diversified(obj):
    letters = [node.name for _, node in object_nodes(obj) if isinstance(node, Letter)]
    return len(letters) == len(set(letters))


@dataclass(frozen=True)
class ScopeEntry:
    path: tuple
    functor: str
    scope: frozenset


@dataclass(frozen=True)
class ScopeReport:
    generators: frozenset
    occurrences: tuple = field(default=())

    def scopes_of(self, functor):
        return [e.scope for e in self.occurrences if e.functor == functor]

    def functors(self):
        return sorted({e.functor for e in self.occurrences})

    def record(self):
        return {
            "generators": sorted(self.generators),
            "scopes": [
                {"path": list(e.path), "functor": e.functor, "scope": sorted(e.scope)} for e in self.occurrences
            ],
        }


def scopes(obj):
    entries = []
    for path, node in object_nodes(obj):
        if isinstance(node, App):
            entries.append(ScopeEntry(path, str(node.functor), frozenset(_generators(node.arg))))
    return ScopeReport(frozenset(_generators(obj)), tuple(entries))


def arrow_exists_lc(A, B):
    if not is_diversified(A):
        raise NotDiversified("source", A)
    if not is_diversified(B):
        raise NotDiversified("target", B)
    sa, sb = scopes(A), scopes(B)
    if sa.generators != sb.generators:
        return False
    for e in sa.occurrences:
        (scope_b,) = sb.scopes_of(e.functor)
        if not e.scope <= scope_b:
            return False
    return True


def arrow_exists_lcmu(A, B):
    if not is_letter_diversified(A):
        raise NotDiversified("source", A)
    if not is_diversified(B):
        raise NotDiversified("target", B)
    sa, sb = scopes(A), scopes(B)
    if sa.generators != sb.generators:
        return False
    for e in sb.occurrences:
        union = frozenset().union(*sa.scopes_of(e.functor))
        if not union <= e.scope | {e.functor}:
            return False
    return True
