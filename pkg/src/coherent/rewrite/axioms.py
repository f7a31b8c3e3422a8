"""The equation library, and the selection of equations for each theory.

Every equation is written once over a functor variable ``F``; a theory
keeps an equation when all constants in it are available there (directly
or through a definition), and fixes ``F`` to its endofunctor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..terms.syntax import I, App, Comp, Const, FApp, Tens, Tensor, constants_of
from ..terms.theories import get_theory
from ..terms.typing import expand_derived
from .patterns import ArrVar, FunVar, ObjVar, fix_functor, pattern_type, pattern_vars

F = FunVar("F")
A, B, C, D = (ObjVar(n) for n in "ABCD")
A1, A2, A3, B1, B2, B3 = (ObjVar(n) for n in ("A1", "A2", "A3", "B1", "B2", "B3"))


def T(x):
    return App(F, x)


def t(a, b):
    return Tensor(a, b)


def Fa(f):
    return FApp(F, f)


def k(kind, *objs):
    return Const(kind, objs)


def kf(kind, *objs):
    return Const(kind, objs, F)


def one(a):
    return k("id", a)


def seq(*arrows):
    """Right-to-left composite; ``seq(g, f)`` is ``g . f``."""
    out = arrows[-1]
    for g in reversed(arrows[:-1]):
        out = Comp(g, out)
    return out


def middle_four(a, b, c, d):
    """(A*B)*(C*D) -> (A*C)*(B*D)."""
    inner = seq(k("a", c, b, d), Tens(k("c", b, c), one(d)), k("a'", b, c, d))
    return seq(k("a'", a, c, t(b, d)), Tens(one(a), inner), k("a", a, b, t(c, d)))


@dataclass(frozen=True)
class EquationSchema:
    name: str
    lhs: object
    rhs: object
    only: frozenset | None = None  # restrict to these theories

    def kinds(self):
        return {c.kind for side in (self.lhs, self.rhs) for c in constants_of(side)}

    def __str__(self):
        return f"({self.name}) {self.lhs} = {self.rhs}"


def _eq(name, lhs, rhs, only=None):
    return EquationSchema(name, lhs, rhs, frozenset(only) if only else None)


f = ArrVar("f", A, B)
g = ArrVar("g", B, C)
h = ArrVar("h", C, D)
f1, f2, f3 = ArrVar("f1", A1, B1), ArrVar("f2", A2, B2), ArrVar("f3", A3, B3)
g1, g2 = ArrVar("g1", B1, B3), ArrVar("g2", B2, A3)


def _library():
    eqs = [
        # category
        _eq("cat-idl", Comp(one(B), f), f),
        _eq("cat-idr", Comp(f, one(A)), f),
        _eq("cat-assoc", Comp(h, Comp(g, f)), Comp(Comp(h, g), f)),
        # tensor is a bifunctor
        _eq("tens-id", Tens(one(A), one(B)), one(t(A, B))),
        _eq("tens-comp", Tens(Comp(g1, f1), Comp(g2, f2)), Comp(Tens(g1, g2), Tens(f1, f2))),
        # naturality of the monoidal isomorphisms
        _eq(
            "a-nat",
            Comp(k("a", B1, B2, B3), Tens(Tens(f1, f2), f3)),
            Comp(Tens(f1, Tens(f2, f3)), k("a", A1, A2, A3)),
        ),
        _eq(
            "a'-nat",
            Comp(k("a'", B1, B2, B3), Tens(f1, Tens(f2, f3))),
            Comp(Tens(Tens(f1, f2), f3), k("a'", A1, A2, A3)),
        ),
        _eq("l-nat", Comp(k("l", B), Tens(one(I), f)), Comp(f, k("l", A))),
        _eq("l'-nat", Comp(k("l'", B), f), Comp(Tens(one(I), f), k("l'", A))),
        _eq("r-nat", Comp(k("r", B), Tens(f, one(I))), Comp(f, k("r", A))),
        _eq("r'-nat", Comp(k("r'", B), f), Comp(Tens(f, one(I)), k("r'", A))),
        _eq("a-iso", Comp(k("a'", A, B, C), k("a", A, B, C)), one(t(t(A, B), C))),
        _eq("a'-iso", Comp(k("a", A, B, C), k("a'", A, B, C)), one(t(A, t(B, C)))),
        _eq("l-iso", Comp(k("l'", A), k("l", A)), one(t(I, A))),
        _eq("l'-iso", Comp(k("l", A), k("l'", A)), one(A)),
        _eq("r-iso", Comp(k("r'", A), k("r", A)), one(t(A, I))),
        _eq("r'-iso", Comp(k("r", A), k("r'", A)), one(A)),
        _eq(
            "pentagon",
            Comp(k("a", A, B, t(C, D)), k("a", t(A, B), C, D)),
            seq(Tens(one(A), k("a", B, C, D)), k("a", A, t(B, C), D), Tens(k("a", A, B, C), one(D))),
        ),
        _eq("triangle", Comp(Tens(one(A), k("l", B)), k("a", A, I, B)), Tens(k("r", A), one(B))),
        _eq("unit-coincide", k("l", I), k("r", I)),
        # endofunctor
        _eq("fun-id", Fa(one(A)), one(T(A))),
        _eq("fun-comp", Fa(Comp(g, f)), Comp(Fa(g), Fa(f))),
        # symmetry
        _eq("c-nat", Comp(k("c", B1, B2), Tens(f1, f2)), Comp(Tens(f2, f1), k("c", A1, A2))),
        _eq("c-inv", Comp(k("c", B, A), k("c", A, B)), one(t(A, B))),
        _eq(
            "hexagon",
            seq(k("a", B, C, A), k("c", A, t(B, C)), k("a", A, B, C)),
            seq(Tens(one(B), k("c", A, C)), k("a", B, A, C), Tens(k("c", A, B), one(C))),
        ),
        # cartesian structure
        _eq("diag-nat", Comp(k("diag", B), f), Comp(Tens(f, f), k("diag", A))),
        _eq("terminal", ArrVar("f", A, I), k("bang", A)),
        _eq(
            "diag-coassoc",
            seq(k("a", A, A, A), Tens(k("diag", A), one(A)), k("diag", A)),
            Comp(Tens(one(A), k("diag", A)), k("diag", A)),
        ),
        _eq("diag-counit-l", seq(k("l", A), Tens(k("bang", A), one(A)), k("diag", A)), one(A)),
        _eq("diag-counit-r", seq(k("r", A), Tens(one(A), k("bang", A)), k("diag", A)), one(A)),
        _eq("diag-comm", Comp(k("c", A, A), k("diag", A)), k("diag", A)),
        _eq("diag-tensor", k("diag", t(A, B)), Comp(middle_four(A, A, B, B), Tens(k("diag", A), k("diag", B)))),
        _eq("diag-unit", k("diag", I), k("l'", I)),
        # cocartesian structure
        _eq("codiag-nat", Comp(f, k("codiag", A)), Comp(k("codiag", B), Tens(f, f))),
        _eq("initial", ArrVar("f", I, A), k("cobang", A)),
        _eq(
            "codiag-coassoc",
            Comp(k("codiag", A), Tens(k("codiag", A), one(A))),
            seq(k("codiag", A), Tens(one(A), k("codiag", A)), k("a", A, A, A)),
        ),
        _eq("codiag-unit-l", seq(k("codiag", A), Tens(k("cobang", A), one(A)), k("l'", A)), one(A)),
        _eq("codiag-unit-r", seq(k("codiag", A), Tens(one(A), k("cobang", A)), k("r'", A)), one(A)),
        _eq("codiag-comm", Comp(k("codiag", A), k("c", A, A)), k("codiag", A)),
        _eq(
            "codiag-tensor",
            k("codiag", t(A, B)),
            Comp(Tens(k("codiag", A), k("codiag", B)), middle_four(A, B, A, B)),
        ),
        _eq("codiag-unit", k("codiag", I), k("l", I)),
        # monad
        _eq("eta-nat", Comp(Fa(f), kf("eta", A)), Comp(kf("eta", B), f)),
        _eq("mu-nat", Comp(Fa(f), kf("mu", A)), Comp(kf("mu", B), Fa(Fa(f)))),
        _eq("mu-unit-l", Comp(kf("mu", A), kf("eta", T(A))), one(T(A))),
        _eq("mu-unit-r", Comp(kf("mu", A), Fa(kf("eta", A))), one(T(A))),
        _eq("mu-assoc", Comp(kf("mu", A), Fa(kf("mu", A))), Comp(kf("mu", A), kf("mu", T(A)))),
        # comonad
        _eq("eps-nat", Comp(kf("eps", B), Fa(f)), Comp(f, kf("eps", A))),
        _eq("delta-nat", Comp(kf("delta", B), Fa(f)), Comp(Fa(Fa(f)), kf("delta", A))),
        _eq("delta-counit-l", Comp(kf("eps", T(A)), kf("delta", A)), one(T(A))),
        _eq("delta-counit-r", Comp(Fa(kf("eps", A)), kf("delta", A)), one(T(A))),
        _eq("delta-coassoc", Comp(Fa(kf("delta", A)), kf("delta", A)), Comp(kf("delta", T(A)), kf("delta", A))),
        # strengths and the monoidal structure of the endofunctor
        _eq("psiL-nat", Comp(Fa(Tens(f1, f2)), kf("psiL", A1, A2)), Comp(kf("psiL", B1, B2), Tens(Fa(f1), f2))),
        _eq("psiR-nat", Comp(Fa(Tens(f1, f2)), kf("psiR", A1, A2)), Comp(kf("psiR", B1, B2), Tens(f1, Fa(f2)))),
        _eq("psi-nat", Comp(Fa(Tens(f1, f2)), kf("psi", A1, A2)), Comp(kf("psi", B1, B2), Tens(Fa(f1), Fa(f2)))),
        _eq(
            "psiL-a",
            seq(Fa(k("a", A, B, C)), kf("psiL", t(A, B), C), Tens(kf("psiL", A, B), one(C))),
            Comp(kf("psiL", A, t(B, C)), k("a", T(A), B, C)),
        ),
        _eq("psiL-r", Comp(Fa(k("r", A)), kf("psiL", A, I)), k("r", T(A))),
        _eq(
            "psiR-a",
            Comp(Fa(k("a", A, B, C)), kf("psiR", t(A, B), C)),
            seq(kf("psiR", A, t(B, C)), Tens(one(A), kf("psiR", B, C)), k("a", A, B, T(C))),
        ),
        _eq("psiR-l", Comp(Fa(k("l", A)), kf("psiR", I, A)), k("l", T(A))),
        _eq("psiL-eta", Comp(kf("psiL", A, B), Tens(kf("eta", A), one(B))), kf("eta", t(A, B))),
        _eq(
            "psiL-mu",
            Comp(kf("psiL", A, B), Tens(kf("mu", A), one(B))),
            seq(kf("mu", t(A, B)), Fa(kf("psiL", A, B)), kf("psiL", T(A), B)),
        ),
        _eq("psiR-eta", Comp(kf("psiR", A, B), Tens(one(A), kf("eta", B))), kf("eta", t(A, B))),
        _eq(
            "psiR-mu",
            Comp(kf("psiR", A, B), Tens(one(A), kf("mu", B))),
            seq(kf("mu", t(A, B)), Fa(kf("psiR", A, B)), kf("psiR", A, T(B))),
        ),
        _eq(
            "psiLR-a",
            seq(Fa(k("a", A, B, C)), kf("psiL", t(A, B), C), Tens(kf("psiR", A, B), one(C))),
            seq(kf("psiR", A, t(B, C)), Tens(one(A), kf("psiL", B, C)), k("a", A, T(B), C)),
        ),
        _eq(
            "psiLR-mu",
            seq(kf("mu", t(A, B)), Fa(kf("psiL", A, B)), kf("psiR", T(A), B)),
            seq(kf("mu", t(A, B)), Fa(kf("psiR", A, B)), kf("psiL", A, T(B))),
        ),
        _eq("psiLR-c", Comp(Fa(k("c", A, B)), kf("psiL", A, B)), Comp(kf("psiR", B, A), k("c", T(A), B))),
        _eq(
            "psi-a",
            seq(Fa(k("a", A, B, C)), kf("psi", t(A, B), C), Tens(kf("psi", A, B), one(T(C)))),
            seq(kf("psi", A, t(B, C)), Tens(one(T(A)), kf("psi", B, C)), k("a", T(A), T(B), T(C))),
        ),
        _eq("psi-l", seq(Fa(k("l", A)), kf("psi", I, A), Tens(kf("psi0"), one(T(A)))), k("l", T(A))),
        _eq("psi-r", seq(Fa(k("r", A)), kf("psi", A, I), Tens(one(T(A)), kf("psi0"))), k("r", T(A))),
        _eq("psi-eta", Comp(kf("psi", A, B), Tens(kf("eta", A), kf("eta", B))), kf("eta", t(A, B))),
        _eq(
            "psi-mu",
            Comp(kf("psi", A, B), Tens(kf("mu", A), kf("mu", B))),
            seq(kf("mu", t(A, B)), Fa(kf("psi", A, B)), kf("psi", T(A), T(B))),
        ),
        _eq("psi-c", Comp(Fa(k("c", A, B)), kf("psi", A, B)), Comp(kf("psi", B, A), k("c", T(A), T(B)))),
        _eq("psi-diag", Fa(k("diag", A)), Comp(kf("psi", A, A), k("diag", T(A)))),
        _eq("psi-def", kf("psi", A, B), _psi_by_codiagonal(A, B), only={"DSco"}),
        _eq(
            "psi-def",
            seq(kf("mu", t(A, B)), Fa(kf("psiL", A, B)), kf("psiR", T(A), B)),
            _psi_by_codiagonal(A, B),
            only={"DS"},
        ),
        _eq("psiL-eps", Comp(kf("eps", t(A, B)), kf("psiL", A, B)), Tens(kf("eps", A), one(B))),
        _eq(
            "psiL-delta",
            Comp(kf("delta", t(A, B)), kf("psiL", A, B)),
            seq(Fa(kf("psiL", A, B)), kf("psiL", T(A), B), Tens(kf("delta", A), one(B))),
        ),
        _eq("psiR-eps", Comp(kf("eps", t(A, B)), kf("psiR", A, B)), Tens(one(A), kf("eps", B))),
        _eq(
            "psiR-delta",
            Comp(kf("delta", t(A, B)), kf("psiR", A, B)),
            seq(Fa(kf("psiR", A, B)), kf("psiR", A, T(B)), Tens(one(A), kf("delta", B))),
        ),
        _eq("psi-eps", Comp(kf("eps", t(A, B)), kf("psi", A, B)), Tens(kf("eps", A), kf("eps", B))),
        _eq(
            "psi-delta",
            Comp(kf("delta", t(A, B)), kf("psi", A, B)),
            seq(Fa(kf("psi", A, B)), kf("psi", T(A), T(B)), Tens(kf("delta", A), kf("delta", B))),
        ),
        _eq("psi0-eps", Comp(kf("eps", I), kf("psi0")), one(I)),
        _eq("psi0-delta", Comp(kf("delta", I), kf("psi0")), Comp(Fa(kf("psi0")), kf("psi0"))),
        _eq("psi0-def", kf("psi0"), k("cobang", T(I))),
    ]
    return eqs


def _psi_by_codiagonal(a, b):
    i1 = Comp(Tens(one(a), k("cobang", b)), k("r'", a))
    i2 = Comp(Tens(k("cobang", a), one(b)), k("l'", b))
    return Comp(k("codiag", T(t(a, b))), Tens(Fa(i1), Fa(i2)))


LIBRARY = tuple(_library())


def library():
    """All equations, whether or not some theory contains them."""
    return LIBRARY


def _applies(eq, th):
    if eq.only is not None:
        return th.name in eq.only
    return all(th.legal(kind) for kind in eq.kinds())


def specialize(pat, th):
    """Fix the functor variable for single-functor theories and expand definitions."""
    if not th.multi_functor:
        pat = fix_functor(pat, F, th.functor)
    return expand_derived(pat, th)


@lru_cache(maxsize=None)
def axiom_set(th):
    """The equations of ``th``, ready for matching (definitions expanded)."""
    th = get_theory(th)
    out = []
    for eq in LIBRARY:
        if _applies(eq, th):
            out.append(EquationSchema(eq.name, specialize(eq.lhs, th), specialize(eq.rhs, th), eq.only))
    return tuple(out)


@dataclass(frozen=True)
class Rule:
    schema: str
    direction: str  # "lr" or "rl"
    lhs: object
    rhs: object


@lru_cache(maxsize=None)
def rules(th):
    """Oriented rules, both directions, skipping those that would invent metavariables."""
    th = get_theory(th)
    out = []
    for eq in axiom_set(th):
        for direction, lhs, rhs in (("lr", eq.lhs, eq.rhs), ("rl", eq.rhs, eq.lhs)):
            if lhs == rhs:
                continue
            if pattern_vars(rhs) <= pattern_vars(lhs):
                out.append(Rule(eq.name, direction, lhs, rhs))
    out.sort(key=lambda r: (r.schema, r.direction))
    return tuple(out)


def check_schema_types(eq, th):
    """Both sides of a specialized schema have the same source and target pattern."""
    return pattern_type(eq.lhs, th) == pattern_type(eq.rhs, th)
