"""Stage factorizations by oriented rewriting of developed terms.

A term is first developed into a list of factors: one constant acting at
a path inside the current object, identities elsewhere.  Factors are then
bubble-sorted by a per-theory rank.  Each exchange of an out-of-order pair
uses naturality, one of a few two-factor equations, or a decomposition of
a diagonal-like constant into pieces that can move.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import NormalizationBudgetExceeded
from ..semantics import graph
from ..terms.syntax import (
    App,
    Comp,
    Const,
    FApp,
    Id,
    Tens,
    Tensor,
    Unit,
    compose,
    constants_of,
    object_nodes,
    replace_at,
    subformula,
)
from ..terms.theories import get_theory
from ..terms.typing import constant_functor, constant_type, expand_derived, infer_type
from .patterns import ObjVar

STEP_CAP = 20_000


@dataclass(frozen=True)
class Stage:
    label: str
    allowed: frozenset
    term: object

    def kinds(self):
        return {c.kind for c in constants_of(self.term)} - {"id"}

    def obeys(self):
        return self.kinds() <= self.allowed


@dataclass(frozen=True)
class Factorization:
    stages: tuple

    @property
    def composite(self):
        # first stage applies first
        return compose(*reversed([s.term for s in self.stages]))

    @property
    def descriptors(self):
        return tuple((s.label, s.allowed) for s in self.stages)

    def obeys(self):
        return all(s.obeys() for s in self.stages)

    def record(self):
        return {
            "stages": [
                {"label": s.label, "allowed": sorted(s.allowed), "term": str(s.term)} for s in self.stages
            ]
        }

    def __str__(self):
        return "\n".join(f"{s.label}: {s.term}" for s in self.stages)


# ------------------------------------------------------------ stage plans

_MONAD = frozenset({"eta", "mu"})
_COMONAD = frozenset({"eps", "delta"})
_CART = frozenset({"diag", "bang"})
_COCART = frozenset({"codiag", "cobang"})


def _plan(th):
    """Ordered ``(label, kinds)`` stages for ``th``; every primitive lands in one."""
    prims = th.primitives - {"id"}
    name = th.name
    if name in ("LLS", "LRS", "LS", "LcS", "Lcmu"):
        return [("structural", prims - _MONAD), ("monad", prims & _MONAD)]
    if name == "CS":
        return [("diagonal", _CART), ("structural", prims - _CART - {"eta"}), ("unit", frozenset({"eta"}))]
    if name == "DS":
        return [("structural", prims - _COCART), ("codiagonal", _COCART)]
    if name in ("LLSco", "McSco", "DSco"):
        return [("comonad", _COMONAD), ("structural", prims - _COMONAD)]
    if name == "MSco":
        return [
            ("counit", frozenset({"eps"})),
            ("comultiplication", frozenset({"delta"})),
            ("structural", prims - _COMONAD),
            ("unit", frozenset({"psi0"})),
        ]
    if name == "CSco":
        return [("diagonal", _CART), ("comonad", _COMONAD), ("structural", prims - _CART - _COMONAD)]
    return [("all", prims)]


@lru_cache(maxsize=None)
def _ranks(th):
    plan = _plan(th)
    ranks = {}
    for i, (_, kinds) in enumerate(plan):
        for kind in kinds:
            ranks.setdefault(kind, i)
    if th.name == "MSco":
        ranks["psi0"] = 3
    return ranks


# -------------------------------------------------------- parameter paths


@lru_cache(maxsize=None)
def _param_paths(kind, functor):
    """For each object slot of ``kind``: its paths in the source and in the target."""
    from ..terms.syntax import CONSTANT_ARITY

    slots = tuple(ObjVar(f"X{i}") for i in range(CONSTANT_ARITY[kind]))
    src, tgt = constant_type(kind, slots, functor)

    def where(obj, var):
        return [path for path, node in object_nodes(obj) if node is var]

    return tuple((where(src, v), where(tgt, v)) for v in slots)


# ---------------------------------------------------------------- factors


class _Work:
    def __init__(self, th, src):
        self.th = th
        self.src = src
        self.rank = _ranks(th)

    def head_type(self, h):
        return constant_type(h.kind, h.objs, constant_functor(h, self.th))

    def sym(self, h):
        return constant_functor(h, self.th)

    def develop(self, f, src, path=()):
        if isinstance(f, Const):
            return [] if f.kind == "id" else [(path, f)]
        if isinstance(f, Comp):
            mid = infer_type(f.f, self.th)[1]
            return self.develop(f.f, src, path) + self.develop(f.g, mid, path)
        if isinstance(f, Tens):
            return self.develop(f.f, src.left, path + (0,)) + self.develop(f.g, src.right, path + (1,))
        if isinstance(f, FApp):
            return self.develop(f.f, src.arg, path + (2,))
        raise TypeError(f)

    def chain(self, factors, start=None):
        objs = [self.src if start is None else start]
        for path, h in factors:
            objs.append(replace_at(objs[-1], path, self.head_type(h)[1]))
        return objs

    # exchanges ------------------------------------------------------

    def _rebuilt(self, h, slot, value):
        objs = list(h.objs)
        objs[slot] = value
        return Const(h.kind, tuple(objs), h.functor)

    def natural_outer(self, f1, f2, before):
        """The first factor sits inside a parameter of the second: pull the second earlier."""
        (p1, h1), (p2, h2) = f1, f2
        if p1[: len(p2)] != p2:
            return None
        rel = p1[len(p2):]
        for slot, (srcs, tgts) in enumerate(_param_paths(h2.kind, self.sym(h2))):
            if len(srcs) != 1 or rel[: len(srcs[0])] != srcs[0]:
                continue
            rest = rel[len(srcs[0]):]
            h2new = self._rebuilt(h2, slot, subformula(before, p2 + srcs[0]))
            return [(p2, h2new)] + [(p2 + t + rest, h1) for t in tgts]
        return None

    def natural_inner(self, f1, f2, after):
        """The second factor sits inside a parameter of the first: push the first later."""
        (p1, h1), (p2, h2) = f1, f2
        if p2[: len(p1)] != p1:
            return None
        rel = p2[len(p1):]
        for slot, (srcs, tgts) in enumerate(_param_paths(h1.kind, self.sym(h1))):
            if len(tgts) != 1 or rel[: len(tgts[0])] != tgts[0]:
                continue
            rest = rel[len(tgts[0]):]
            h1new = self._rebuilt(h1, slot, subformula(after, p1 + tgts[0]))
            return [(p1 + s + rest, h2) for s in srcs] + [(p1, h1new)]
        return None

    def special(self, f1, f2):
        (p1, h1), (p2, h2) = f1, f2
        k1, k2 = h1.kind, h2.kind
        fn = h2.functor if h2.functor is not None else h1.functor

        def c(kind, *objs):
            return Const(kind, objs, fn if kind in _FUNCTORIAL else None)

        def F(x):
            return App(self.sym(h2) if k2 in _FUNCTORIAL else self.sym(h1), x)

        if p1[: len(p2)] == p2:
            rel = p1[len(p2):]
            if k2 == "psiL" and rel == (0,):
                a, b = h2.objs
                if k1 == "eta":
                    return [(p2, c("eta", Tensor(a, b)))]
                if k1 == "mu":
                    return [(p2, c("psiL", F(a), b)), (p2 + (2,), c("psiL", a, b)), (p2, c("mu", Tensor(a, b)))]
            if k2 == "psiR" and rel == (1,):
                a, b = h2.objs
                if k1 == "eta":
                    return [(p2, c("eta", Tensor(a, b)))]
                if k1 == "mu":
                    return [(p2, c("psiR", a, F(b))), (p2 + (2,), c("psiR", a, b)), (p2, c("mu", Tensor(a, b)))]
            if k2 == "mu" and k1 == "eta" and rel in ((), (2,)):
                return []
            if k2 == "psi" and k1 == "psi0" and self.th.name == "MSco":
                a, b = h2.objs
                if rel == (0,):
                    return [(p2, c("l", F(b))), (p2 + (2,), c("l'", b))]
                if rel == (1,):
                    return [(p2, c("r", F(a))), (p2 + (2,), c("r'", a))]
            if rel == () and k2 in ("eps", "delta"):
                return self._counit_rules(p2, h1, h2, c, F)
        if p2[: len(p1)] == p1:
            rel = p2[len(p1):]
            if k1 == "delta" and rel == (2,):
                if k2 == "eps":
                    return []
                if k2 == "bang":
                    return [(p2, c("bang", h1.objs[0]))]
        return None

    def _counit_rules(self, p, h1, h2, c, F):
        k1, k2 = h1.kind, h2.kind
        if k1 == "psiL":
            a, b = h1.objs
            if k2 == "eps":
                return [(p + (0,), c("eps", a))]
            return [(p + (0,), c("delta", a)), (p, c("psiL", F(a), b)), (p + (2,), c("psiL", a, b))]
        if k1 == "psi":
            a, b = h1.objs
            if k2 == "eps":
                return [(p + (0,), c("eps", a)), (p + (1,), c("eps", b))]
            return [
                (p + (0,), c("delta", a)),
                (p + (1,), c("delta", b)),
                (p, c("psi", F(a), F(b))),
                (p + (2,), c("psi", a, b)),
            ]
        if k1 == "psi0":
            return [] if k2 == "eps" else [(p, c("psi0")), (p + (2,), c("psi0"))]
        if k1 == "delta" and k2 == "eps":
            return []
        return None

    # decompositions -------------------------------------------------

    def split_low(self, f2, before):
        """Break a diagonal or erasing factor into pieces acting on smaller objects."""
        p, h = f2
        x = subformula(before, p)
        if h.kind == "diag":
            if isinstance(x, Tensor):
                a, b = x.left, x.right
                return [(p + (0,), Const("diag", (a,))), (p + (1,), Const("diag", (b,)))] + _middle_four(
                    p, a, a, b, b
                )
            if isinstance(x, Unit):
                return [(p, Const("l'", (x,)))]
            if p and p[-1] == 2:
                parent = p[:-1]
                lx = App(subformula(before, parent).functor, x)
                return [(parent, Const("diag", (lx,))), (parent, Const("psi", (x, x)))]
        if h.kind == "bang":
            if isinstance(x, Tensor):
                return [
                    (p + (0,), Const("bang", (x.left,))),
                    (p + (1,), Const("bang", (x.right,))),
                    (p, Const("l", (Unit(),))),
                ]
            if isinstance(x, Unit):
                return []
        return None

    def split_high(self, f1):
        """Break a codiagonal or initial factor so that it can move later."""
        p, h = f1
        if h.kind not in _COCART:
            return None
        (x,) = h.objs
        if h.kind == "codiag":
            if isinstance(x, Tensor):
                a, b = x.left, x.right
                return _middle_four(p, a, b, a, b) + [
                    (p + (0,), Const("codiag", (a,))),
                    (p + (1,), Const("codiag", (b,))),
                ]
            if isinstance(x, Unit):
                return [(p, Const("l", (x,)))]
            if isinstance(x, App):
                y = x.arg
                return [
                    (p, Const("psiR", (x, y))),
                    (p + (2,), Const("psiL", (y, y))),
                    (p, Const("mu", (Tensor(y, y),))),
                    (p + (2,), Const("codiag", (y,))),
                ]
        if h.kind == "cobang":
            if isinstance(x, Tensor):
                return [
                    (p, Const("l'", (Unit(),))),
                    (p + (0,), Const("cobang", (x.left,))),
                    (p + (1,), Const("cobang", (x.right,))),
                ]
            if isinstance(x, Unit):
                return []
            if isinstance(x, App):
                return [(p, Const("eta", (Unit(),))), (p + (2,), Const("cobang", (x.arg,)))]
        return None

    def exchange(self, f1, f2, before, after):
        (p1, _), (p2, _) = f1, f2
        if p1[: len(p2)] != p2 and p2[: len(p1)] != p1:
            return [f2, f1]
        for attempt in (
            lambda: self.special(f1, f2),
            lambda: self.natural_outer(f1, f2, before),
            lambda: self.natural_inner(f1, f2, after),
        ):
            out = attempt()
            if out is not None:
                return out
        mid = replace_at(before, p1, self.head_type(f1[1])[1])
        low = self.split_low(f2, mid)
        if low is not None:
            return [f1] + low
        high = self.split_high(f1)
        if high is not None:
            return high + [f2]
        return None

    def stuck_ok(self, f1):
        return self.th.name == "MSco" and f1[1].kind == "psi0"

    def sort(self, factors):
        rank = self.rank
        steps = 0
        i = 0
        while i < len(factors) - 1:
            f1, f2 = factors[i], factors[i + 1]
            if rank[f1[1].kind] <= rank[f2[1].kind]:
                i += 1
                continue
            objs = self.chain(factors[: i + 2])
            new = self.exchange(f1, f2, objs[i], objs[i + 2])
            if new is None:
                if self.stuck_ok(f1):
                    i += 1
                    continue
                raise NormalizationBudgetExceeded(f"cannot move {f2[1]} past {f1[1]} in {self.th}")
            factors[i : i + 2] = new
            i = max(0, i - 1)
            steps += 1
            if steps > STEP_CAP:
                raise NormalizationBudgetExceeded(f"more than {STEP_CAP} exchanges in {self.th}")
        return factors

    def build(self, obj, path, h):
        if not path:
            return h
        step, rest = path[0], path[1:]
        if step == 2:
            return FApp(obj.functor, self.build(obj.arg, rest, h))
        if step == 0:
            return Tens(self.build(obj.left, rest, h), Id(obj.right))
        return Tens(Id(obj.left), self.build(obj.right, rest, h))

    def term(self, factors, start):
        if not factors:
            return Id(start)
        objs = [start]
        pieces = []
        for path, h in factors:
            pieces.append(self.build(objs[-1], path, h))
            objs.append(replace_at(objs[-1], path, self.head_type(h)[1]))
        return compose(*reversed(pieces))


_FUNCTORIAL = frozenset({"psiL", "psiR", "psi", "psi0", "eta", "mu", "eps", "delta"})


def _middle_four(p, a, b, c, d):
    """Factors of the shuffle (A*B)*(C*D) -> (A*C)*(B*D) acting at ``p``."""
    return [
        (p, Const("a", (a, b, Tensor(c, d)))),
        (p + (1,), Const("a'", (b, c, d))),
        (p + (1, 0), Const("c", (b, c))),
        (p + (1,), Const("a", (c, b, d))),
        (p, Const("a'", (a, c, Tensor(b, d)))),
    ]


def _split_stages(work, factors, plan):
    rank = work.rank
    groups = [[] for _ in plan]
    if work.th.name == "MSco":
        # the trailing run of unit factors; earlier ones may be stuck in place
        cut = len(factors)
        while cut > 0 and factors[cut - 1][1].kind == "psi0":
            cut -= 1
        for f in factors[:cut]:
            groups[min(rank[f[1].kind], 2)].append(f)
        groups[3] = factors[cut:]
    else:
        for f in factors:
            groups[rank[f[1].kind]].append(f)
    return groups


def normalize(f, th):
    """Rewrite ``f`` into the stage factorization of ``th``.

    The composite of the returned stages has the same graph as ``f``; this
    is checked before returning.
    """
    th = get_theory(th)
    f = expand_derived(f, th)
    src, _ = infer_type(f, th)
    work = _Work(th, src)
    factors = work.sort(work.develop(f, src))
    plan = _plan(th)
    groups = _split_stages(work, factors, plan)
    # the groups must follow the sorted order to compose back correctly
    flat = [x for g in groups for x in g]
    if flat != factors:
        raise NormalizationBudgetExceeded(f"factors of {th} did not settle into stage order")
    stages = []
    obj = src
    for (label, kinds), group in zip(plan, groups):
        stages.append(Stage(label, frozenset(kinds), work.term(group, obj)))
        obj = work.chain(group, obj)[-1]
    out = Factorization(tuple(stages))
    if graph(out.composite, th) != graph(f, th):
        raise AssertionError(f"normalization changed the graph of {f}")
    return out
