"""The graph functor: arrow terms to relations between finite ordinals.

Positions are counted left to right over the counted nodes of an object
(functor occurrences, plus letters when the theory counts them).
"""

from __future__ import annotations

from functools import lru_cache

from . import relgraph as rg
from .relgraph import Relation
from .terms.syntax import Comp, Const, FApp, Tens
from .terms.theories import get_theory
from .terms.typing import _measure, expand_derived, infer_type


def _ident(n):
    return rg.identity(n)


def _block_swap(ma, mb):
    pairs = [(i, mb + i) for i in range(ma)] + [(ma + j, j) for j in range(mb)]
    return Relation.of(ma + mb, ma + mb, pairs)


def _strength_right(ma, mb):
    # source A * T(B): A's positions move past the outer functor of T(B)
    n = ma + 1 + mb
    pairs = [(i, i + 1) for i in range(ma)] + [(ma, 0)] + [(i, i) for i in range(ma + 1, n)]
    return Relation.of(n, n, pairs)


def _monoidal_merge(ma, mb):
    pairs = [(0, 0), (ma + 1, 0)]
    pairs += [(i, i) for i in range(1, ma + 1)]
    pairs += [(j, j - 1) for j in range(ma + 2, ma + mb + 2)]
    return Relation.of(ma + mb + 2, ma + mb + 1, pairs)


def _unit(ma):
    return Relation.of(ma, ma + 1, [(i, i + 1) for i in range(ma)])


def _multiplication(ma):
    pairs = [(0, 0), (1, 0)] + [(i, i - 1) for i in range(2, ma + 2)]
    return Relation.of(ma + 2, ma + 1, pairs)


def _counit(ma):
    return Relation.of(ma + 1, ma, [(i + 1, i) for i in range(ma)])


def _comultiplication(ma):
    pairs = [(0, 0), (0, 1)] + [(i, i + 1) for i in range(1, ma + 1)]
    return Relation.of(ma + 1, ma + 2, pairs)


def _diagonal(ma):
    return Relation.of(ma, 2 * ma, [(i, i) for i in range(ma)] + [(i, i + ma) for i in range(ma)])


def _codiagonal(ma):
    return Relation.of(2 * ma, ma, [(i, i) for i in range(ma)] + [(i + ma, i) for i in range(ma)])


def constant_graph(kind, sizes):
    """Relation of a primitive constant whose object parameters have the given measures."""
    if kind in ("id", "l", "l'", "r", "r'", "psiL"):
        return _ident(sum(sizes) + (1 if kind == "psiL" else 0))
    if kind in ("a", "a'"):
        return _ident(sum(sizes))
    if kind == "c":
        return _block_swap(*sizes)
    if kind == "psiR":
        return _strength_right(*sizes)
    if kind == "psi":
        return _monoidal_merge(*sizes)
    if kind == "psi0":
        return rg.empty(0, 1)
    if kind == "eta":
        return _unit(*sizes)
    if kind == "mu":
        return _multiplication(*sizes)
    if kind == "eps":
        return _counit(*sizes)
    if kind == "delta":
        return _comultiplication(*sizes)
    if kind == "diag":
        return _diagonal(*sizes)
    if kind == "codiag":
        return _codiagonal(*sizes)
    if kind == "bang":
        return rg.empty(sizes[0], 0)
    if kind == "cobang":
        return rg.empty(0, sizes[0])
    raise KeyError(kind)


def graph(f, th):
    th = get_theory(th)
    f = expand_derived(f, th)
    infer_type(f, th)
    return _graph(f, th.count_letters)


@lru_cache(maxsize=1 << 16)
def _graph(f, letters):
    if isinstance(f, Const):
        return constant_graph(f.kind, [_measure(o, letters) for o in f.objs])
    if isinstance(f, Comp):
        return rg.compose(_graph(f.f, letters), _graph(f.g, letters))
    if isinstance(f, Tens):
        return rg.tensor(_graph(f.f, letters), _graph(f.g, letters))
    if isinstance(f, FApp):
        return rg.shift(_graph(f.f, letters))
    raise TypeError(f"not an arrow term: {f!r}")


def raw_graph(f, count_letters):
    """Evaluate without theory checks; used for equations no theory contains."""
    return _graph(f, count_letters)


def graph_membership_report(f, th):
    th = get_theory(th)
    R = graph(f, th)
    return R, rg.member_of(R, th.target)
