import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherent import relgraph as rg
from coherent.relgraph import Relation
from coherent.rewrite import object_universe, sample_terms
from coherent.semantics import constant_graph, graph, graph_membership_report
from coherent.terms import (
    THEORY_NAMES,
    App,
    Comp,
    Const,
    FApp,
    I,
    L,
    Letter,
    T,
    Tens,
    Tensor,
    counted_positions,
    get_theory,
    indexed,
    infer_type,
    measure,
)
from coherent.terms.syntax import Bang, Codiag, Cobang, Delta_, Diag, Eps, Eta, Id, Mu, Psi, Psi0, PsiL, PsiR

p, q, r = Letter("p"), Letter("q"), Letter("r")
E1, E2, E3 = indexed(1), indexed(2), indexed(3)


def rel(n, m, pairs):
    return Relation.of(n, m, pairs)


def test_examples():
    assert graph(Mu(p), "LS") == rel(2, 1, [(0, 0), (1, 0)])
    assert graph(PsiR(App(T, p), q), "LS") == rel(2, 2, [(0, 1), (1, 0)])
    assert graph(Delta_(p), "MSco") == rel(1, 2, [(0, 0), (0, 1)])
    assert graph(Diag(p), "CS") == rel(1, 2, [(0, 0), (0, 1)])
    f = Comp(Mu(Tensor(p, q)), Comp(FApp(T, PsiL(p, q)), PsiR(App(T, p), q)))
    assert graph(f, "LS") == rel(2, 1, [(0, 0), (1, 0)])


def test_membership_report_examples():
    assert graph_membership_report(Eta(p), "LLS") == (rel(0, 1, []), True)
    R, ok = graph_membership_report(PsiR(App(T, p), q), "LS")
    assert R == rel(2, 2, [(0, 1), (1, 0)]) and ok
    assert graph_membership_report(Eps(p), "MSco") == (rel(1, 0, []), True)


# Structural constants with every generator distinct: the graph must pair
# each counted occurrence with the occurrence of the same name.
_SPECIMENS = [
    Tensor(p, App(E2, q)),
    App(E3, Tensor(p, q)),
    p,
    I,
    Tensor(App(E2, p), q),
]


def _name_matching(f, th):
    src, tgt = infer_type(f, th)
    s = [o.symbol for o in counted_positions(src, th)]
    t = [o.symbol for o in counted_positions(tgt, th)]
    assert sorted(s) == sorted(t) and len(set(s)) == len(s)
    return rel(len(s), len(t), [(i, t.index(x)) for i, x in enumerate(s)])


def _disjoint(objs):
    # rename letters so the arguments share no generator
    names = iter("abcdefghij")
    functors = iter(indexed(k) for k in range(4, 20))

    def go(o):
        if isinstance(o, Letter):
            return Letter(next(names))
        if isinstance(o, App):
            return App(next(functors), go(o.arg))
        if isinstance(o, Tensor):
            return Tensor(go(o.left), go(o.right))
        return o

    return [go(o) for o in objs]


@pytest.mark.parametrize("kind", ["a", "a'", "l", "l'", "r", "r'", "c", "psiL", "psiR", "id"])
def test_structural_constants_follow_names(kind):
    from coherent.terms import CONSTANT_ARITY

    arity = CONSTANT_ARITY[kind]
    for objs in itertools.product(_SPECIMENS, repeat=arity):
        objs = _disjoint(objs)
        f = Const(kind, tuple(objs), E1 if kind.startswith("psi") else None)
        assert graph(f, "Lc") == _name_matching(f, "Lc")


def test_psi_merges_outer_functors():
    # monad route (expanded) and comonad route (primitive) give the same relation
    for a in object_universe(2, (T,)):
        for b in object_universe(2, (T,)):
            monad = graph(Psi(a, b), "LS")
            comonad = graph(Const("psi", (_swap(a), _swap(b)), None), "MSco")
            assert monad == comonad


def _swap(o):
    if isinstance(o, App):
        return App(L, _swap(o.arg))
    if isinstance(o, Tensor):
        return Tensor(_swap(o.left), _swap(o.right))
    return o


def test_psi0_is_unit_strand():
    assert graph(Psi0(), "MSco") == rel(0, 1, [])
    assert graph(Psi0(), "LS") == graph(Eta(I), "LS")


@pytest.mark.parametrize("a", object_universe(3, (T,)))
def test_cocartesian_preservation(a):
    ta = App(T, a)
    assert graph(Comp(FApp(T, Codiag(a)), Psi(a, a)), "DS") == graph(Codiag(ta), "DS")
    assert graph(Comp(FApp(T, Cobang(a)), Eta(I)), "DS") == graph(Cobang(ta), "DS")


@pytest.mark.parametrize("a", object_universe(3, (T,)))
def test_rejected_unit_bang_equation(a):
    ta = App(T, a)
    m = measure(ta, "CS")
    assert graph(FApp(T, Bang(a)), "CS") == rel(m, 1, [(0, 0)])
    assert graph(Comp(Eta(I), Bang(ta)), "CS") == rel(m, 1, [])


@pytest.mark.parametrize("n", range(5))
def test_duality(n):
    sizes = [n]
    assert constant_graph("eps", sizes) == rg.converse(constant_graph("eta", sizes))
    assert constant_graph("delta", sizes) == rg.converse(constant_graph("mu", sizes))
    assert constant_graph("codiag", sizes) == rg.converse(constant_graph("diag", sizes))
    assert constant_graph("cobang", sizes) == rg.converse(constant_graph("bang", sizes))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(THEORY_NAMES), st.integers(0, 2**32 - 1))
def test_functoriality(th, seed):
    f, g = sample_terms(th, 2, 8, seed=seed)
    _, tf = infer_type(f, th)
    assert graph(Tens(f, g), th) == rg.tensor(graph(f, th), graph(g, th))
    assert graph(Comp(Id(tf), f), th) == graph(f, th)
    functor = E1 if get_theory(th).multi_functor else get_theory(th).functor
    assert graph(FApp(functor, f), th) == rg.shift(graph(f, th))
    sg, _ = infer_type(g, th)
    if sg == tf:
        assert graph(Comp(g, f), th) == rg.compose(graph(f, th), graph(g, th))


@pytest.mark.parametrize("th", THEORY_NAMES)
def test_codomain_membership(th):
    target = get_theory(th).target
    for f in sample_terms(th, 120, 12, seed=11):
        assert rg.member_of(graph(f, th), target), f
