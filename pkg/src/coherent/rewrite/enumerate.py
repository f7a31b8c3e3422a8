"""Bounded enumeration of well-typed arrow terms.

Terms are generated forwards from a source object.  Every constant other
than ``cobang`` is determined by its source once the kind is chosen, so
the search is finite for each size; ``cobang`` draws its object from a
supplied pool, by default the subformulas of the two endpoints.
"""

from __future__ import annotations

from ..terms.syntax import App, Comp, Const, FApp, Tens, Tensor, Unit, object_nodes, replace_at
from ..terms.theories import get_theory


def _functor_arg(obj):
    return (obj.functor, obj.arg) if isinstance(obj, App) else (None, None)


def constants_from(src, th, pool=()):
    """All constants of ``th`` with source ``src``, in a fixed order."""
    out = []
    legal = th.legal
    single = not th.multi_functor

    def fun(sym):
        return None if single else sym

    out.append(Const("id", (src,)))
    if isinstance(src, Tensor):
        left, right = src.left, src.right
        if isinstance(left, Tensor):
            out.append(Const("a", (left.left, left.right, right)))
        if isinstance(right, Tensor):
            out.append(Const("a'", (left, right.left, right.right)))
        if isinstance(left, Unit):
            out.append(Const("l", (right,)))
        if isinstance(right, Unit):
            out.append(Const("r", (left,)))
        if legal("c"):
            out.append(Const("c", (left, right)))
        fl, al = _functor_arg(left)
        fr, ar = _functor_arg(right)
        if fl is not None and legal("psiL"):
            out.append(Const("psiL", (al, right), fun(fl)))
        if fr is not None and legal("psiR"):
            out.append(Const("psiR", (left, ar), fun(fr)))
        if fl is not None and fl == fr and legal("psi"):
            out.append(Const("psi", (al, ar), fun(fl)))
        if left == right and legal("codiag"):
            out.append(Const("codiag", (left,)))
    out.append(Const("l'", (src,)))
    out.append(Const("r'", (src,)))
    if isinstance(src, Unit) and legal("psi0") and single:
        out.append(Const("psi0", ()))
    if legal("eta") and single:
        out.append(Const("eta", (src,)))
    fs, arg = _functor_arg(src)
    if fs is not None:
        fa, inner = _functor_arg(arg)
        if fa is not None and fa == fs and legal("mu"):
            out.append(Const("mu", (inner,), fun(fs)))
        if legal("eps"):
            out.append(Const("eps", (arg,), fun(fs)))
        if legal("delta"):
            out.append(Const("delta", (arg,), fun(fs)))
    if legal("diag"):
        out.append(Const("diag", (src,)))
    if legal("bang"):
        out.append(Const("bang", (src,)))
    if isinstance(src, Unit) and legal("cobang"):
        for o in pool:
            out.append(Const("cobang", (o,)))
    return out


def _const_target(c, th):
    from ..terms.typing import constant_functor, constant_type

    return constant_type(c.kind, c.objs, constant_functor(c, th))[1]


class Enumerator:
    """Memoized forward enumeration for one theory and one ``cobang`` pool."""

    def __init__(self, th, pool=()):
        self.th = get_theory(th)
        self.pool = tuple(pool)
        self._memo = {}
        self._reach = {}

    def exact(self, src, n):
        """All ``(term, target)`` with source ``src`` and exactly ``n`` nodes."""
        key = (src, n)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = []
        if n == 1:
            for c in constants_from(src, self.th, self.pool):
                out.append((c, _const_target(c, self.th)))
        elif n >= 2:
            if isinstance(src, App):
                for t, tgt in self.exact(src.arg, n - 1):
                    out.append((FApp(src.functor, t), App(src.functor, tgt)))
            if isinstance(src, Tensor):
                for k in range(1, n - 1):
                    rights = self.exact(src.right, n - 1 - k)
                    for t1, g1 in self.exact(src.left, k):
                        for t2, g2 in rights:
                            out.append((Tens(t1, t2), Tensor(g1, g2)))
            for k in range(1, n - 1):
                for t1, mid in self.exact(src, k):
                    for t2, tgt in self.exact(mid, n - 1 - k):
                        out.append((Comp(t2, t1), tgt))
        out = tuple(out)
        self._memo[key] = out
        return out

    def upto(self, src, max_size):
        for n in range(1, max_size + 1):
            yield from self.exact(src, n)

    # reachability without building terms

    def reach(self, src, n):
        """Targets of terms from ``src`` with exactly ``n`` nodes."""
        key = (src, n)
        hit = self._reach.get(key)
        if hit is not None:
            return hit
        out = set()
        if n == 1:
            for c in constants_from(src, self.th, self.pool):
                out.add(_const_target(c, self.th))
        elif n >= 2:
            if isinstance(src, App):
                out.update(App(src.functor, t) for t in self.reach(src.arg, n - 1))
            if isinstance(src, Tensor):
                for k in range(1, n - 1):
                    rights = self.reach(src.right, n - 1 - k)
                    if rights:
                        for g1 in self.reach(src.left, k):
                            out.update(Tensor(g1, g2) for g2 in rights)
            for k in range(1, n - 1):
                for mid in self.reach(src, k):
                    out.update(self.reach(mid, n - 1 - k))
        out = frozenset(out)
        self._reach[key] = out
        return out

    def witness(self, src, tgt, n):
        """Some term of exactly ``n`` nodes from ``src`` to ``tgt``, or None."""
        if tgt not in self.reach(src, n):
            return None
        if n == 1:
            for c in constants_from(src, self.th, self.pool):
                if _const_target(c, self.th) == tgt:
                    return c
            return None
        if isinstance(src, App) and isinstance(tgt, App) and src.functor == tgt.functor:
            t = self.witness(src.arg, tgt.arg, n - 1)
            if t is not None:
                return FApp(src.functor, t)
        if isinstance(src, Tensor) and isinstance(tgt, Tensor):
            for k in range(1, n - 1):
                t1 = self.witness(src.left, tgt.left, k)
                if t1 is not None:
                    t2 = self.witness(src.right, tgt.right, n - 1 - k)
                    if t2 is not None:
                        return Tens(t1, t2)
        for k in range(1, n - 1):
            for mid in sorted(self.reach(src, k), key=str):
                if tgt in self.reach(mid, n - 1 - k):
                    return Comp(self.witness(mid, tgt, n - 1 - k), self.witness(src, mid, k))
        return None


def default_pool(*objs):
    seen = []
    for o in objs:
        for _, node in object_nodes(o):
            if node not in seen:
                seen.append(node)
    return tuple(seen)


def enumerate_arrows(src, tgt, th, max_size, pool=None):
    """All terms ``src -> tgt`` of ``th`` with at most ``max_size`` nodes."""
    th = get_theory(th)
    pool = default_pool(src, tgt) if pool is None else pool
    en = Enumerator(th, pool)
    return [t for t, target in en.upto(src, max_size) if target == tgt]


def find_arrow(src, tgt, th, max_size, pool=None):
    """Smallest term ``src -> tgt`` up to ``max_size`` nodes, or None."""
    th = get_theory(th)
    pool = default_pool(src, tgt) if pool is None else pool
    en = Enumerator(th, pool)
    for n in range(1, max_size + 1):
        if tgt in en.reach(src, n):
            return en.witness(src, tgt, n)
    return None



def _units(obj):
    return sum(1 for _, node in object_nodes(obj) if isinstance(node, Unit))


def reachable_objects(src, th, max_units=1, pool=()):
    """Targets of all arrows from ``src``, with no bound on term size.

    Every arrow is a chain of single constants acting at one position of
    the current object, so this is a plain graph search over objects.
    Objects with more than ``max_units`` occurrences of the unit are not
    expanded, which keeps the search finite.
    """
    th = get_theory(th)
    seen = {src}
    todo = [src]
    while todo:
        obj = todo.pop()
        for path, node in object_nodes(obj):
            for c in constants_from(node, th, pool):
                if c.kind == "id":
                    continue
                new = replace_at(obj, path, _const_target(c, th))
                if new not in seen and _units(new) <= max_units:
                    seen.add(new)
                    todo.append(new)
    return seen
