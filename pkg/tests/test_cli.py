import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherent.cli.main import main
from coherent.cli.parse import parse_arrow, parse_object
from coherent.errors import ParseError
from coherent.rewrite import random_object, sample_terms
from coherent.terms import THEORY_NAMES, App, Comp, FApp, Letter, T, Tensor, indexed
from coherent.terms.syntax import Mu, PsiL, PsiR, Psi0

p, q = Letter("p"), Letter("q")

LEFT = "mu{p*q} . T[psiL{p,q}] . psiR{T(p),q}"
RIGHT = "mu{p*q} . T[psiR{p,q}] . psiL{p,T(q)}"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    assert parse_object("T(p) * T(q)") == Tensor(App(T, p), App(T, q))
    assert parse_arrow(LEFT) == Comp(Comp(Mu(Tensor(p, q)), FApp(T, PsiL(p, q))), PsiR(App(T, p), q))
    assert parse_object("E1(p * E2(q))") == App(indexed(1), Tensor(p, App(indexed(2), q)))
    assert parse_arrow("psi0") == Psi0()
    assert parse_arrow("mu_E2{p}") == Mu(p, indexed(2))


@pytest.mark.parametrize(
    "text, column",
    [("psi{p,}", 7), ("frob{p}", 1), ("mu{p", 5), ("mu{p} .", 8), ("eta{p,q}", 1), ("mu{p} $", 7)],
)
def test_parse_errors(text, column):
    with pytest.raises(ParseError) as info:
        parse_arrow(text)
    rec = info.value.record()
    assert rec["error"] == "syntax" and rec["line"] == 1 and rec["column"] == column


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_arrow("mu{p}\n . \n )")
    assert (info.value.line, info.value.column) == (3, 2)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(THEORY_NAMES), st.integers(0, 2**32 - 1))
def test_print_parse_round_trip(th, seed):
    import random

    (f,) = sample_terms(th, 1, 14, seed=seed, depth=3)
    assert parse_arrow(str(f)) == f
    obj = random_object(random.Random(seed), th, depth=4)
    assert parse_object(str(obj)) == obj


def test_eq_command():
    assert run("eq", "--theory", "LS", LEFT, RIGHT) == (0, "equal\n", "")
    code, out, _ = run("eq", "--theory", "CS", "T[bang{p}]", "eta{I} . bang{T(p)}")
    assert code == 1 and "(0,0)" in out
    code, out, _ = run("eq", "--theory", "LS", "psiL{p,q}", "psiR{p,q}")
    assert code == 2 and out.startswith("type mismatch")


def test_graph_command():
    code, out, _ = run("graph", "--theory", "LS", "psiR{T(p),q}")
    assert code == 0
    assert json.loads(out) == {"src": 2, "tgt": 2, "pairs": [[0, 1], [1, 0]], "category": "Fun", "member": True}
    code, out, _ = run("graph", "--theory", "LS", "mu{p}", "--dot")
    lines = out.splitlines()
    assert lines[1].startswith("digraph") and "s0 -> t0;" in out and "s1 -> t0;" in out


def test_decompose_command():
    code, out, _ = run("decompose", "--rel", '{"src":2,"tgt":2,"pairs":[[0,0],[0,1],[1,0]]}')
    assert code == 0
    assert out == "nu=[0,0,1] mu=[0,0,1] beta=[0,2,1]\ncheck ok\n"


def test_exists_command():
    code, out, _ = run("exists", "--lemma", "lc", "E1(p) * q", "E1(p*q)")
    assert code == 0 and out.splitlines()[0] == "true"
    report = json.loads(out.splitlines()[1])
    assert report["source"]["scopes"] == [{"path": [0], "functor": "E1", "scope": ["p"]}]
    code, out, _ = run("exists", "--lemma", "lcmu", "E1(p) * q", "E2(p*q)")
    assert code == 1 and out.startswith("false")
    code, _, err = run("exists", "--lemma", "lc", "p * p", "p")
    assert code == 2 and json.loads(err)["error"]


def test_oracle_command():
    code, out, _ = run("oracle", "--theory", "LS", LEFT, RIGHT)
    assert code == 0 and out.startswith("Equivalent")
    code, out, _ = run("oracle", "--theory", "LcS", "--budget", "200", "c{T(p),T(p)}", "id{T(p)*T(p)}")
    assert code == 3 and out.startswith("Unknown")


def test_normalize_command():
    code, out, _ = run("normalize", "--theory", "LLS", "psiL{p,q} . eta{p} * id{q}")
    assert code == 0 and out.splitlines()[-1] == "monad: eta{p * q}"


def test_axioms_check_command():
    code, out, _ = run("axioms-check", "--theory", "LLS", "--max-measure", "2", "--per-schema", "5")
    assert code == 0 and all(line.startswith("pass") for line in out.splitlines())


def test_enumerate_command():
    code, out, _ = run("enumerate", "--theory", "LLS", "--src", "T(p)", "--tgt", "T(p)", "--max-size", "3")
    assert code == 0 and "mu{p} . eta{T(p)}" in out.splitlines()
    code, out, _ = run("enumerate", "--theory", "LLS", "--src", "p", "--tgt", "q", "--max-size", "3")
    assert code == 1 and out == ""


@pytest.mark.parametrize(
    "argv, kind",
    [
        (("graph", "--theory", "LLS", "c{p,q}"), "not-expandable"),
        (("graph", "--theory", "LS", "psi{p,"), "syntax"),
        (("eq", "--theory", "LS", "mu{p} . mu{p}", "mu{p}"), None),
        (("decompose", "--rel", "{bad json"), "input"),
        (("graph", "--theory", "LS", "E2[id{p}]"), None),
    ],
)
def test_errors_are_structured(argv, kind):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    rec = json.loads(err)
    assert "error" in rec and "detail" in rec
    if kind:
        assert rec["error"] == kind


def test_usage_errors():
    assert run()[0] == 2
    assert run("graph", "--theory", "XYZ", "id{p}")[0] == 2


def test_output_is_stable():
    args = ("graph", "--theory", "CS", "diag{p*T(q)} . T[psi{p,q}] . eta{T(p)*T(q)}")
    assert run(*args) == run(*args)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coherent.cli.main", "eq", "--theory", "LS", LEFT, RIGHT],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "equal\n"
