"""One-step rewriting with the equation library and a bounded equivalence search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ..errors import HomSetMismatch
from ..terms.syntax import Comp, Const, FApp, Tens, arrow_at, replace_arrow_at, term_size
from ..terms.theories import get_theory
from ..terms.typing import expand_derived, infer_type
from .axioms import axiom_set, rules
from .patterns import ArrVar, instantiate, match

DEFAULT_BUDGET = 50_000


@dataclass(frozen=True)
class RewriteStep:
    schema: str
    position: tuple
    direction: str  # "lr" rewrites lhs to rhs, "rl" the reverse
    result: object

    def record(self):
        return {"schema": self.schema, "position": list(self.position), "direction": self.direction}

    def __str__(self):
        pos = ".".join(map(str, self.position)) or "root"
        return f"{self.schema} [{self.direction}] at {pos}"


@dataclass(frozen=True)
class Equivalent:
    path: tuple

    def __bool__(self):
        return True

    def __str__(self):
        return "equivalent" if not self.path else "equivalent via " + "; ".join(map(str, self.path))


@dataclass(frozen=True)
class Unknown:
    visited: int

    def __bool__(self):
        return False

    def __str__(self):
        return f"unknown after {self.visited} terms"


def _root_key(pat):
    if isinstance(pat, Const):
        return ("const", pat.kind)
    if isinstance(pat, ArrVar):
        return None
    return (type(pat).__name__,)


@lru_cache(maxsize=None)
def _rule_index(th):
    keyed, anywhere = {}, []
    for rule in rules(th):
        key = _root_key(rule.lhs)
        if key is None:
            anywhere.append(rule)
        else:
            keyed.setdefault(key, []).append(rule)
    return {k: tuple(v) for k, v in keyed.items()}, tuple(anywhere)


def _root_rules(f, th):
    keyed, anywhere = _rule_index(th)
    key = ("const", f.kind) if isinstance(f, Const) else (type(f).__name__,)
    chosen = keyed.get(key, ()) + anywhere
    return sorted(chosen, key=lambda r: (r.schema, r.direction))


@lru_cache(maxsize=1 << 17)
def _rewrites(f, th):
    """``(relative position, schema, direction, new subterm)`` for every one-step rewrite."""
    out = []
    for rule in _root_rules(f, th):
        b = match(rule.lhs, f, {}, th)
        if b is None:
            continue
        new = instantiate(rule.rhs, b)
        if new != f:
            out.append(((), rule.schema, rule.direction, new))
    if isinstance(f, Comp):
        for pos, s, d, new in _rewrites(f.g, th):
            out.append(((0,) + pos, s, d, Comp(new, f.f)))
        for pos, s, d, new in _rewrites(f.f, th):
            out.append(((1,) + pos, s, d, Comp(f.g, new)))
    elif isinstance(f, Tens):
        for pos, s, d, new in _rewrites(f.f, th):
            out.append(((0,) + pos, s, d, Tens(new, f.g)))
        for pos, s, d, new in _rewrites(f.g, th):
            out.append(((1,) + pos, s, d, Tens(f.f, new)))
    elif isinstance(f, FApp):
        for pos, s, d, new in _rewrites(f.f, th):
            out.append(((0,) + pos, s, d, FApp(f.functor, new)))
    return tuple(out)


def neighbors(f, th):
    """Every term one rewrite away from ``f``, with the step that produces it.

    Derived constants are expanded first, so the terms live in the
    primitive signature of ``th``.
    """
    th = get_theory(th)
    f = expand_derived(f, th)
    infer_type(f, th)
    return _steps(f, th)


def _steps(f, th):
    return [(new, RewriteStep(s, pos, d, new)) for pos, s, d, new in _rewrites(f, th)]


def _trace(parents, node):
    steps = []
    while True:
        prev, step = parents[node]
        if prev is None:
            return steps
        steps.append((prev, step))
        node = prev


def equivalent_bounded(f, g, th, budget=DEFAULT_BUDGET, max_size=None):
    """Search for a rewrite path from ``f`` to ``g`` by bidirectional breadth-first search.

    ``budget`` caps the number of distinct terms visited on both sides;
    ``max_size`` caps the size of intermediate terms (default twice the
    larger input plus eight).
    """
    th = get_theory(th)
    f, g = expand_derived(f, th), expand_derived(g, th)
    tf, tg = infer_type(f, th), infer_type(g, th)
    if tf != tg:
        raise HomSetMismatch(tf, tg)
    if f == g:
        return Equivalent(())
    if max_size is None:
        max_size = 2 * max(term_size(f), term_size(g)) + 8

    sides = [{f: (None, None)}, {g: (None, None)}]
    frontiers = [deque([f]), deque([g])]
    visited = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = sides[side], sides[1 - side]
        layer, frontiers[side] = frontiers[side], deque()
        best = None
        for node in layer:
            for new, step in _steps(node, th):
                if new in mine:
                    continue
                if term_size(new) > max_size:
                    continue
                mine[new] = (node, step)
                visited += 1
                if new in other:
                    length = len(_trace(mine, new)) + len(_trace(other, new))
                    if best is None or length < best[0]:
                        best = (length, new)
                frontiers[side].append(new)
                if visited >= budget and best is None:
                    return Unknown(visited)
        if best is not None:
            return Equivalent(_join(sides, best[1]))
    return Unknown(visited)


def _join(sides, meet):
    forward = [step for _, step in reversed(_trace(sides[0], meet))]
    backward = []
    for prev, step in _trace(sides[1], meet):
        flipped = "rl" if step.direction == "lr" else "lr"
        backward.append(RewriteStep(step.schema, step.position, flipped, prev))
    return tuple(forward + backward)


class InvalidPath(Exception):
    pass


def _schemas(th):
    out = {}
    for eq in axiom_set(th):
        out.setdefault(eq.name, []).append(eq)
    return out


def replay(f, path, th):
    """Check every step of ``path`` and return the final term.

    A step is valid when the two terms differ only at its position and the
    schema, read in its direction, matches the old and new subterms with
    one common binding.
    """
    th = get_theory(th)
    cur = expand_derived(f, th)
    schemas = _schemas(th)
    for i, step in enumerate(path):
        new = step.result
        if replace_arrow_at(cur, step.position, arrow_at(new, step.position)) != new:
            raise InvalidPath(f"step {i}: terms differ outside position {step.position}")
        old_sub, new_sub = arrow_at(cur, step.position), arrow_at(new, step.position)
        ok = False
        for eq in schemas.get(step.schema, ()):
            lhs, rhs = (eq.lhs, eq.rhs) if step.direction == "lr" else (eq.rhs, eq.lhs)
            b = match(lhs, old_sub, {}, th)
            if b is not None and match(rhs, new_sub, b, th) is not None:
                ok = True
                break
        if not ok:
            raise InvalidPath(f"step {i}: {step.schema} does not relate the subterms")
        cur = new
    return cur
