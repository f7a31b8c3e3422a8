"""Seeded random objects and well-typed arrow terms, for sweeps and tests."""

from __future__ import annotations

import random

from ..terms.syntax import I, App, Comp, FApp, Letter, Tens, Tensor
from ..terms.theories import get_theory, indexed
from ..terms.typing import constant_functor, constant_type
from .enumerate import constants_from, default_pool

LETTERS = ("p", "q", "r")


def functor_symbols(th):
    th = get_theory(th)
    return (indexed(1), indexed(2)) if th.multi_functor else (th.functor,)


def random_object(rng, th, depth=2, letters=LETTERS):
    functors = functor_symbols(th)

    def go(d):
        roll = rng.random()
        if d <= 0 or roll < 0.35:
            return I if rng.random() < 0.12 else Letter(rng.choice(letters))
        if roll < 0.7:
            return Tensor(go(d - 1), go(d - 1))
        return App(rng.choice(functors), go(d - 1))

    return go(depth)


def random_term(rng, th, src, size):
    """A random term from ``src`` with at most ``size`` nodes; returns ``(term, target)``."""
    th = get_theory(th)
    pool = default_pool(src) + (Letter(rng.choice(LETTERS)),)
    return _gen(rng, th, src, max(1, size), pool)


# always-available constants would otherwise swamp the sample
_COMMON = frozenset({"l'", "r'", "eta", "diag", "bang"})


def _const(rng, th, src, pool):
    choices = [c for c in constants_from(src, th, pool) if c.kind != "id"] or constants_from(src, th, pool)
    rare = [c for c in choices if c.kind not in _COMMON]
    if rare and rng.random() < 0.75:
        choices = rare
    c = rng.choice(choices)
    return c, constant_type(c.kind, c.objs, constant_functor(c, th))[1]


def _gen(rng, th, src, size, pool):
    if size < 3 or rng.random() < 0.2:
        if size >= 2 and rng.random() < 0.5:
            if isinstance(src, App):
                t, tgt = _gen(rng, th, src.arg, size - 1, pool)
                return FApp(src.functor, t), App(src.functor, tgt)
        return _const(rng, th, src, pool)
    options = ["comp"]
    if isinstance(src, Tensor):
        options.append("tens")
    if isinstance(src, App):
        options.append("fapp")
    pick = rng.choice(options)
    if pick == "fapp":
        t, tgt = _gen(rng, th, src.arg, size - 1, pool)
        return FApp(src.functor, t), App(src.functor, tgt)
    k = rng.randint(1, size - 2)
    if pick == "tens":
        t1, g1 = _gen(rng, th, src.left, k, pool)
        t2, g2 = _gen(rng, th, src.right, size - 1 - k, pool)
        return Tens(t1, t2), Tensor(g1, g2)
    t1, mid = _gen(rng, th, src, k, pool)
    t2, tgt = _gen(rng, th, mid, size - 1 - k, pool)
    return Comp(t2, t1), tgt


def sample_terms(th, count, max_size, seed=0, depth=2):
    """``count`` random well-typed terms of ``th``, reproducible from ``seed``."""
    rng = random.Random(seed)
    th = get_theory(th)
    out = []
    while len(out) < count:
        src = random_object(rng, th, depth)
        term, _ = random_term(rng, th, src, rng.randint(1, max_size))
        out.append(term)
    return out
