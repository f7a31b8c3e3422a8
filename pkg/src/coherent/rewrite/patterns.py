"""Term patterns with object, functor and arrow metavariables."""

from __future__ import annotations

from dataclasses import dataclass

from ..terms.syntax import App, Arrow, Comp, Const, FApp, FunctorSymbol, Obj, Tens, Tensor
from ..terms.typing import infer_type


@dataclass(frozen=True, eq=False)
class ObjVar(Obj):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class FunVar(FunctorSymbol):
    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class ArrVar(Arrow):
    """Stands for any well-typed arrow from ``src`` to ``tgt``."""

    name: str
    src: Obj
    tgt: Obj

    def __str__(self):
        return self.name


def _bind(b, key, value):
    old = b.get(key)
    if old is None:
        b = dict(b)
        b[key] = value
        return b
    return b if old == value else None


def match_obj(pat, obj, b):
    if isinstance(pat, ObjVar):
        return _bind(b, pat, obj)
    if type(pat) is not type(obj):
        return None
    if isinstance(pat, Tensor):
        b = match_obj(pat.left, obj.left, b)
        return None if b is None else match_obj(pat.right, obj.right, b)
    if isinstance(pat, App):
        b = match_functor(pat.functor, obj.functor, b)
        return None if b is None else match_obj(pat.arg, obj.arg, b)
    return b if pat == obj else None


def match_functor(pat, sym, b):
    if isinstance(pat, FunVar):
        if sym is None:
            return None
        return _bind(b, pat, sym)
    return b if pat == sym else None


def match(pat, term, b, th):
    """Extend bindings ``b`` so that ``pat`` instantiates to ``term``, or None."""
    if isinstance(pat, ArrVar):
        old = b.get(pat)
        if old is not None:
            return b if old == term else None
        try:
            src, tgt = infer_type(term, th)
        except Exception:
            return None
        b = match_obj(pat.src, src, b)
        if b is None:
            return None
        b = match_obj(pat.tgt, tgt, b)
        return None if b is None else _bind(b, pat, term)
    if type(pat) is not type(term):
        return None
    if isinstance(pat, Const):
        if pat.kind != term.kind:
            return None
        if pat.functor is None:
            if term.functor is not None:
                return None
        else:
            b = match_functor(pat.functor, term.functor, b)
            if b is None:
                return None
        for po, to in zip(pat.objs, term.objs):
            b = match_obj(po, to, b)
            if b is None:
                return None
        return b
    if isinstance(pat, (Comp, Tens)):
        p1, p2 = pat.children()
        t1, t2 = term.children()
        b = match(p1, t1, b, th)
        return None if b is None else match(p2, t2, b, th)
    if isinstance(pat, FApp):
        b = match_functor(pat.functor, term.functor, b)
        return None if b is None else match(pat.f, term.f, b, th)
    return None


def instantiate_obj(pat, b):
    if isinstance(pat, ObjVar):
        return b[pat]
    if isinstance(pat, Tensor):
        return Tensor(instantiate_obj(pat.left, b), instantiate_obj(pat.right, b))
    if isinstance(pat, App):
        return App(b.get(pat.functor, pat.functor), instantiate_obj(pat.arg, b))
    return pat


def instantiate(pat, b):
    if isinstance(pat, ArrVar):
        return b[pat]
    if isinstance(pat, Const):
        functor = pat.functor
        if functor is not None:
            functor = b.get(functor, functor)
        return Const(pat.kind, tuple(instantiate_obj(o, b) for o in pat.objs), functor)
    if isinstance(pat, Comp):
        return Comp(instantiate(pat.g, b), instantiate(pat.f, b))
    if isinstance(pat, Tens):
        return Tens(instantiate(pat.f, b), instantiate(pat.g, b))
    if isinstance(pat, FApp):
        return FApp(b.get(pat.functor, pat.functor), instantiate(pat.f, b))
    return pat


def obj_vars(pat, out=None):
    out = set() if out is None else out
    if isinstance(pat, ObjVar):
        out.add(pat)
    elif isinstance(pat, Tensor):
        obj_vars(pat.left, out)
        obj_vars(pat.right, out)
    elif isinstance(pat, App):
        if isinstance(pat.functor, FunVar):
            out.add(pat.functor)
        obj_vars(pat.arg, out)
    return out


def pattern_vars(pat, out=None):
    """Every metavariable a match of ``pat`` binds."""
    out = set() if out is None else out
    if isinstance(pat, ArrVar):
        out.add(pat)
        obj_vars(pat.src, out)
        obj_vars(pat.tgt, out)
    elif isinstance(pat, Const):
        if isinstance(pat.functor, FunVar):
            out.add(pat.functor)
        for o in pat.objs:
            obj_vars(o, out)
    elif isinstance(pat, (Comp, Tens)):
        for c in pat.children():
            pattern_vars(c, out)
    elif isinstance(pat, FApp):
        if isinstance(pat.functor, FunVar):
            out.add(pat.functor)
        pattern_vars(pat.f, out)
    return out


def _sub_functor_obj(o, F, sym):
    if isinstance(o, Tensor):
        return Tensor(_sub_functor_obj(o.left, F, sym), _sub_functor_obj(o.right, F, sym))
    if isinstance(o, App):
        return App(sym if o.functor == F else o.functor, _sub_functor_obj(o.arg, F, sym))
    return o


def fix_functor(pat, F, sym):
    """Replace functor variable ``F`` by the concrete ``sym``.

    Constants lose their annotation, since in a single-functor theory it
    is implicit.
    """
    if isinstance(pat, ArrVar):
        return ArrVar(pat.name, _sub_functor_obj(pat.src, F, sym), _sub_functor_obj(pat.tgt, F, sym))
    if isinstance(pat, Const):
        functor = None if pat.functor == F else pat.functor
        return Const(pat.kind, tuple(_sub_functor_obj(o, F, sym) for o in pat.objs), functor)
    if isinstance(pat, Comp):
        return Comp(fix_functor(pat.g, F, sym), fix_functor(pat.f, F, sym))
    if isinstance(pat, Tens):
        return Tens(fix_functor(pat.f, F, sym), fix_functor(pat.g, F, sym))
    if isinstance(pat, FApp):
        return FApp(sym if pat.functor == F else pat.functor, fix_functor(pat.f, F, sym))
    return pat


def pattern_type(pat, th):
    """Source and target of a pattern, or raise when it is ill-typed."""
    from ..errors import CompositionMismatch
    from ..terms.typing import constant_functor, constant_type

    if isinstance(pat, ArrVar):
        return pat.src, pat.tgt
    if isinstance(pat, Const):
        return constant_type(pat.kind, pat.objs, constant_functor(pat, th))
    if isinstance(pat, Comp):
        s1, t1 = pattern_type(pat.f, th)
        s2, t2 = pattern_type(pat.g, th)
        if t1 != s2:
            raise CompositionMismatch(s2, t1)
        return s1, t2
    if isinstance(pat, Tens):
        s1, t1 = pattern_type(pat.f, th)
        s2, t2 = pattern_type(pat.g, th)
        return Tensor(s1, s2), Tensor(t1, t2)
    if isinstance(pat, FApp):
        s, t = pattern_type(pat.f, th)
        return App(pat.functor, s), App(pat.functor, t)
    raise TypeError(pat)
