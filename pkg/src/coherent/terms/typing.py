"""Typing, the object measure, and expansion of derived constants."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from ..errors import CompositionMismatch, ForeignFunctor, IllegalConstant, NotExpandable
from .syntax import (
    FUNCTORIAL_KINDS,
    I,
    App,
    Arrow,
    Comp,
    Const,
    FApp,
    Letter,
    Tens,
    Tensor,
    Unit,
    object_nodes,
)
from .theories import get_theory


class Occurrence(NamedTuple):
    """A counted node of an object: its tree path and what sits there."""

    path: tuple
    kind: str  # "functor" or "letter"
    symbol: str


class TypedArrow(NamedTuple):
    term: Arrow
    src: object
    tgt: object


def _functor_ok(symbol, th):
    if th.multi_functor:
        return symbol.name == "E" and symbol.index is not None and symbol.index >= 1
    return symbol == th.functor


def validate_object(obj, th):
    th = get_theory(th)
    for _, node in object_nodes(obj):
        if isinstance(node, App) and not _functor_ok(node.functor, th):
            raise ForeignFunctor(node.functor, th)
    return True


def measure(obj, th):
    th = get_theory(th)
    return _measure(obj, th.count_letters)


@lru_cache(maxsize=1 << 16)
def _measure(obj, letters):
    if isinstance(obj, App):
        return 1 + _measure(obj.arg, letters)
    if isinstance(obj, Tensor):
        return _measure(obj.left, letters) + _measure(obj.right, letters)
    if isinstance(obj, Letter):
        return 1 if letters else 0
    return 0


def counted_positions(obj, th):
    th = get_theory(th)
    out = []
    for path, node in object_nodes(obj):
        if isinstance(node, App):
            out.append(Occurrence(path, "functor", str(node.functor)))
        elif isinstance(node, Letter) and th.count_letters:
            out.append(Occurrence(path, "letter", node.name))
    return out


def constant_type(kind, objs, F):
    """Source and target of a constant, with ``F`` as its endofunctor."""
    if kind == "id":
        (a,) = objs
        return a, a
    if kind in ("a", "a'"):
        a, b, c = objs
        s, t = Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c))
        return (s, t) if kind == "a" else (t, s)
    if kind in ("l", "l'"):
        (a,) = objs
        return (Tensor(I, a), a) if kind == "l" else (a, Tensor(I, a))
    if kind in ("r", "r'"):
        (a,) = objs
        return (Tensor(a, I), a) if kind == "r" else (a, Tensor(a, I))
    if kind == "c":
        a, b = objs
        return Tensor(a, b), Tensor(b, a)
    if kind == "psiL":
        a, b = objs
        return Tensor(App(F, a), b), App(F, Tensor(a, b))
    if kind == "psiR":
        a, b = objs
        return Tensor(a, App(F, b)), App(F, Tensor(a, b))
    if kind == "psi":
        a, b = objs
        return Tensor(App(F, a), App(F, b)), App(F, Tensor(a, b))
    if kind == "psi0":
        return I, App(F, I)
    if kind == "eta":
        (a,) = objs
        return a, App(F, a)
    if kind == "mu":
        (a,) = objs
        return App(F, App(F, a)), App(F, a)
    if kind == "eps":
        (a,) = objs
        return App(F, a), a
    if kind == "delta":
        (a,) = objs
        return App(F, a), App(F, App(F, a))
    if kind == "diag":
        (a,) = objs
        return a, Tensor(a, a)
    if kind == "bang":
        (a,) = objs
        return a, I
    if kind == "codiag":
        (a,) = objs
        return Tensor(a, a), a
    if kind == "cobang":
        (a,) = objs
        return I, a
    raise KeyError(kind)


def constant_functor(const, th):
    """The endofunctor a constant refers to in theory ``th``."""
    if const.functor is not None:
        return const.functor
    return th.functor


def _check_const(const, th):
    if not th.legal(const.kind):
        raise IllegalConstant(const, th)
    if const.kind in FUNCTORIAL_KINDS:
        if const.functor is None:
            if th.multi_functor:
                raise IllegalConstant(const, th)
        elif not _functor_ok(const.functor, th):
            raise ForeignFunctor(const.functor, th)
    elif const.functor is not None:
        raise IllegalConstant(const, th)
    for o in const.objs:
        validate_object(o, th)


def infer_type(f, th):
    th = get_theory(th)
    return _infer(f, th)


@lru_cache(maxsize=1 << 20)
def _infer(f, th):
    if isinstance(f, Const):
        _check_const(f, th)
        return constant_type(f.kind, f.objs, constant_functor(f, th))
    if isinstance(f, Comp):
        src_f, tgt_f = _infer(f.f, th)
        src_g, tgt_g = _infer(f.g, th)
        if tgt_f != src_g:
            raise CompositionMismatch(src_g, tgt_f)
        return src_f, tgt_g
    if isinstance(f, Tens):
        s1, t1 = _infer(f.f, th)
        s2, t2 = _infer(f.g, th)
        return Tensor(s1, s2), Tensor(t1, t2)
    if isinstance(f, FApp):
        if not _functor_ok(f.functor, th):
            raise ForeignFunctor(f.functor, th)
        s, t = _infer(f.f, th)
        return App(f.functor, s), App(f.functor, t)
    raise TypeError(f"not an arrow term: {f!r}")


def typed(f, th):
    src, tgt = infer_type(f, th)
    return TypedArrow(f, src, tgt)


# ------------------------------------------------------------ expansion


def _id(a):
    return Const("id", (a,))


def injections(a, b):
    """Coproduct injections A -> A*B and B -> A*B built from the initial arrow."""
    first = Comp(Tens(_id(a), Const("cobang", (b,))), Const("r'", (a,)))
    second = Comp(Tens(Const("cobang", (a,)), _id(b)), Const("l'", (b,)))
    return first, second


def psi_from_strengths(a, b, F, functor=None):
    """``mu{A*B} . F[psiL{A,B}] . psiR{F(A),B}``."""
    return Comp(
        Const("mu", (Tensor(a, b),), functor),
        Comp(FApp(F, Const("psiL", (a, b), functor)), Const("psiR", (App(F, a), b), functor)),
    )


def psi_from_codiagonal(a, b, F):
    """``codiag{F(A*B)} . (F[i1] * F[i2])`` with the injections above."""
    i1, i2 = injections(a, b)
    return Comp(Const("codiag", (App(F, Tensor(a, b)),)), Tens(FApp(F, i1), FApp(F, i2)))


def _expand_const(c, th):
    if c.kind in th.primitives:
        return c
    if c.kind not in th.derived:
        raise NotExpandable(c, th)
    F = constant_functor(c, th)
    if c.kind == "psi0":
        return Const("eta", (Unit(),), c.functor)
    if c.kind == "psi":
        a, b = c.objs
        if "codiag" in th.primitives:
            return psi_from_codiagonal(a, b, F)
        return psi_from_strengths(a, b, F, c.functor)
    raise NotExpandable(c, th)


def expand_derived(f, th):
    th = get_theory(th)
    return _expand(f, th)


def _expand(f, th):
    if isinstance(f, Const):
        return _expand_const(f, th)
    if isinstance(f, Comp):
        g2, f2 = _expand(f.g, th), _expand(f.f, th)
        return f if (g2 is f.g and f2 is f.f) else Comp(g2, f2)
    if isinstance(f, Tens):
        a, b = _expand(f.f, th), _expand(f.g, th)
        return f if (a is f.f and b is f.g) else Tens(a, b)
    if isinstance(f, FApp):
        a = _expand(f.f, th)
        return f if a is f.f else FApp(f.functor, a)
    return f


def canonicalize(f, th):
    """Drop redundant functor annotations in single-functor theories."""
    th = get_theory(th)
    if th.multi_functor:
        return f
    if isinstance(f, Const):
        if f.functor is not None and f.functor == th.functor:
            return Const(f.kind, f.objs)
        return f
    if isinstance(f, Comp):
        return Comp(canonicalize(f.g, th), canonicalize(f.f, th))
    if isinstance(f, Tens):
        return Tens(canonicalize(f.f, th), canonicalize(f.g, th))
    if isinstance(f, FApp):
        return FApp(f.functor, canonicalize(f.f, th))
    return f
