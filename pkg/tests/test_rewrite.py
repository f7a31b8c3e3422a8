import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherent.decide import Equal, equal
from coherent.errors import HomSetMismatch
from coherent.rewrite import (
    Equivalent,
    InvalidPath,
    Unknown,
    axiom_set,
    enumerate_arrows,
    equivalent_bounded,
    neighbors,
    normalize,
    replay,
    sample_terms,
    sweep,
    sweep_unused,
)
from coherent.semantics import graph
from coherent.terms import THEORY_NAMES, get_theory, App, Comp, FApp, L, Letter, T, Tens, Tensor, indexed, infer_type, term_size
from coherent.terms.syntax import C_, Delta_, Eta, Id, Mu, Psi, PsiL, PsiR

p, q, r = Letter("p"), Letter("q"), Letter("r")
E1 = indexed(1)
Tp, Tq = App(T, p), App(T, q)
LSIDE = Comp(Mu(Tensor(p, q)), Comp(FApp(T, PsiL(p, q)), PsiR(Tp, q)))
RSIDE = Comp(Mu(Tensor(p, q)), Comp(FApp(T, PsiR(p, q)), PsiL(p, Tq)))


def names(th):
    return {eq.name for eq in axiom_set(th)}


def test_axiom_inventories():
    lls = names("LLS")
    assert {"psiL-a", "psiL-r", "psiL-eta", "psiL-mu", "mu-unit-l", "mu-unit-r", "mu-assoc", "pentagon"} <= lls
    assert not any(n.startswith(("c-", "psiR", "psiLR", "hexagon")) for n in lls)
    assert {"psi-diag", "psi-eps", "psi-delta", "psi0-eps", "psi0-delta", "diag-coassoc", "terminal"} <= names("CSco")
    assert "psi-def" in names("DS")
    assert "psi0-def" in names("DSco")
    assert "psiLR-c" in names("LcS")


@pytest.mark.parametrize("th", THEORY_NAMES)
def test_schema_sides_share_a_type(th):
    from coherent.rewrite.axioms import check_schema_types

    theory = get_theory(th)
    for eq in axiom_set(th):
        assert check_schema_types(eq, theory), eq.name


def test_neighbors_examples():
    f = Comp(PsiL(p, q), Tens(Eta(p), Id(q)))
    assert Eta(Tensor(p, q)) in {t for t, _ in neighbors(f, "LLS")}
    near = {t for t, _ in neighbors(Id(Tp), "LLS")}
    assert Comp(Mu(p), FApp(T, Eta(p))) in near and Comp(Mu(p), Eta(Tp)) in near
    g = Comp(FApp(T, PsiL(p, q)), Eta(Tensor(Tp, q)))
    assert Comp(Eta(App(T, Tensor(p, q))), PsiL(p, q)) in {t for t, _ in neighbors(g, "LLS")}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(THEORY_NAMES), st.integers(0, 2**32 - 1))
def test_neighbors_keep_type_and_graph(th, seed):
    (f,) = sample_terms(th, 1, 7, seed=seed)
    ty, G = infer_type(f, th), graph(f, th)
    for t, step in neighbors(f, th)[:60]:
        assert infer_type(t, th) == ty
        assert graph(t, th) == G, step


def test_oracle_examples():
    result = equivalent_bounded(LSIDE, RSIDE, "LS")
    assert isinstance(result, Equivalent) and result.path
    assert replay(LSIDE, result.path, "LS") == RSIDE
    swap = C_(Tp, Tp)
    unknown = equivalent_bounded(swap, Id(Tensor(Tp, Tp)), "LcS", budget=300)
    assert isinstance(unknown, Unknown) and not unknown
    assert equal(swap, Id(Tensor(Tp, Tp)), "LcS") != Equal()
    same = equivalent_bounded(swap, swap, "LcS", budget=1)
    assert isinstance(same, Equivalent) and same.path == ()


def test_oracle_rejects_other_homsets():
    with pytest.raises(HomSetMismatch):
        equivalent_bounded(PsiL(p, q), PsiR(p, q), "LS")


def test_oracle_is_deterministic():
    a = equivalent_bounded(LSIDE, RSIDE, "LS")
    b = equivalent_bounded(LSIDE, RSIDE, "LS")
    assert [s.record() for s in a.path] == [s.record() for s in b.path]


def test_replay_rejects_tampered_path():
    path = list(equivalent_bounded(LSIDE, RSIDE, "LS").path)
    with pytest.raises(InvalidPath):
        replay(Comp(Id(App(T, Tensor(p, q))), LSIDE), path, "LS")


@pytest.mark.parametrize("th", THEORY_NAMES)
def test_oracle_paths_are_sound(th):
    # pair each small term with one of its rewrites three steps away
    for f in sample_terms(th, 15, 5, seed=5):
        g = f
        for _ in range(3):
            near = neighbors(g, th)
            if near:
                g = near[len(near) // 2][0]
        res = equivalent_bounded(f, g, th, budget=4000)
        assert res, (f, g)
        assert equal(f, g, th) == Equal()
        assert replay(f, res.path, th) == g


def test_normalize_examples():
    fz = normalize(Comp(PsiL(p, q), Tens(Eta(p), Id(q))), "LLS")
    first, second = fz.stages
    assert first.label == "structural" and first.kinds() == set()
    assert second.term == Eta(Tensor(p, q))

    Lp, Lq = App(L, p), App(L, q)
    fz = normalize(Comp(Delta_(Tensor(p, q)), Psi(p, q)), "MSco")
    by_label = {s.label: s for s in fz.stages}
    assert by_label["structural"].term == Comp(FApp(L, Psi(p, q)), Psi(Lp, Lq))
    assert graph(by_label["comultiplication"].term, "MSco") == graph(Tens(Delta_(p), Delta_(q)), "MSco")
    assert by_label["counit"].kinds() == set() and by_label["unit"].kinds() == set()

    fz = normalize(Id(p), "LS")
    assert all(s.kinds() == set() for s in fz.stages)


@pytest.mark.parametrize("th", THEORY_NAMES)
def test_normalize_is_sound(th):
    for f in sample_terms(th, 150, 12, seed=21):
        fz = normalize(f, th)
        assert fz.obeys(), fz
        assert infer_type(fz.composite, th) == infer_type(f, th)
        assert graph(fz.composite, th) == graph(f, th)


@pytest.mark.parametrize("th", ["LLS", "LS", "MSco", "CS", "LLSco"])
def test_normal_form_is_derivable(th):
    for f in sample_terms(th, 12, 4, seed=8):
        composite = normalize(f, th).composite
        budget = 20_000
        cap = 2 * max(term_size(f), term_size(composite)) + 4
        assert equivalent_bounded(f, composite, th, budget=budget, max_size=cap), (f, composite)


def test_enumerate_examples():
    found = set(enumerate_arrows(Tp, Tp, "LLS", 3))
    assert {Id(Tp), FApp(T, Id(p)), Comp(Mu(p), Eta(Tp))} <= found
    assert enumerate_arrows(p, q, "LLS", 5) == []
    assert PsiL(p, q, E1) in enumerate_arrows(Tensor(App(E1, p), q), App(E1, Tensor(p, q)), "Lc", 2)


def test_enumerate_respects_size_and_type():
    terms = enumerate_arrows(Tensor(Tp, q), App(T, Tensor(p, q)), "LS", 5)
    assert terms == sorted(set(terms), key=terms.index)
    for t in terms:
        assert term_size(t) <= 5
        assert infer_type(t, "LS") == (Tensor(Tp, q), App(T, Tensor(p, q)))


def test_quick_sweep():
    for th in ("LLS", "MSco", "Lc"):
        reports = sweep(th, max_weight=2, per_schema=8)
        assert all(rep.ok for rep in reports), [rep.record() for rep in reports if not rep.ok]


@pytest.mark.parametrize("letters", [False, True])
def test_schemas_outside_every_theory_are_sound(letters):
    reports = sweep_unused(count_letters=letters)
    assert {rep.name for rep in reports} == {"psiR-eps", "psiR-delta"}
    assert all(rep.ok and rep.instances >= 30 for rep in reports)
