import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherent import relgraph as rg
from coherent.errors import ArityMismatch, MalformedTriple
from coherent.relgraph import CoordinatedTriple, Relation


def rel(n, m, pairs):
    return Relation.of(n, m, pairs)


@st.composite
def relations(draw, max_side=5):
    n = draw(st.integers(0, max_side))
    m = draw(st.integers(0, max_side))
    cells = [(i, j) for i in range(n) for j in range(m)]
    pairs = draw(st.sets(st.sampled_from(cells))) if cells else set()
    return rel(n, m, pairs)


@st.composite
def composable(draw):
    R = draw(relations())
    k = draw(st.integers(0, 5))
    cells = [(j, x) for j in range(R.tgt) for x in range(k)]
    pairs = draw(st.sets(st.sampled_from(cells))) if cells else set()
    return R, rel(R.tgt, k, pairs)


# boolean matrices as an independent model of the relation algebra
def matrix(R):
    M = np.zeros((R.src, R.tgt), dtype=bool)
    for i, j in R.pairs:
        M[i, j] = True
    return M


def from_matrix(M):
    return rel(M.shape[0], M.shape[1], zip(*np.nonzero(M)))


def test_examples():
    assert rg.compose(rel(2, 2, [(0, 1), (1, 0)]), rel(2, 1, [(0, 0), (1, 0)])) == rel(2, 1, [(0, 0), (1, 0)])
    assert rg.tensor(rg.identity(1), rg.identity(2)) == rg.identity(3)
    assert rg.converse(rel(0, 1, [])) == rel(1, 0, [])


def test_compose_arity_mismatch():
    with pytest.raises(ArityMismatch):
        rg.compose(rg.identity(2), rg.identity(3))


def test_classify_examples():
    f = rg.classify(rel(2, 1, [(0, 0), (1, 0)]))
    assert f.is_function and f.is_order_preserving_function
    f = rg.classify(rel(2, 2, [(0, 1), (1, 0)]))
    assert f.is_function and f.is_bijection and not f.is_order_preserving_function
    f = rg.classify(rel(1, 2, [(0, 0), (0, 1)]))
    assert not f.is_function and f.is_converse_of_order_preserving_function


def test_member_of_examples():
    assert rg.member_of(rel(2, 1, [(0, 0), (1, 0)]), "Delta")
    crossing = rel(2, 2, [(0, 1), (1, 0)])
    assert not rg.member_of(crossing, "Delta") and rg.member_of(crossing, "Fun")
    assert not rg.member_of(rel(0, 1, []), "DeltaOp")
    assert rg.member_of(rel(1, 0, []), "Rel")


def test_lex_orders():
    R = rel(2, 2, [(0, 0), (0, 1), (1, 0)])
    assert rg.left_lex_enum(R) == [(0, 0), (0, 1), (1, 0)]
    assert rg.right_lex_enum(R) == [(0, 0), (1, 0), (0, 1)]
    assert rg.left_lex_enum(rel(2, 2, [])) == []
    assert rg.left_lex_enum(rg.identity(2)) == rg.right_lex_enum(rg.identity(2)) == [(0, 0), (1, 1)]


def test_decompose_examples(kernel):
    t = rg.decompose(rel(2, 2, [(0, 0), (0, 1), (1, 0)]))
    assert (t.nu, t.mu, t.beta) == ((0, 0, 1), (0, 0, 1), (0, 2, 1))
    t = rg.decompose(rg.identity(2))
    assert t.nu == t.mu == t.beta == (0, 1)
    t = rg.decompose(rel(2, 3, []))
    assert t.k == 0 and t.nu == t.mu == t.beta == ()


def test_recompose_examples(kernel):
    t = CoordinatedTriple(3, 2, 2, (0, 0, 1), (0, 0, 1), (0, 2, 1))
    assert rg.recompose(t) == rel(2, 2, [(0, 0), (0, 1), (1, 0)])
    assert not rg.is_coordinated(CoordinatedTriple(2, 2, 1, (0, 1), (0, 0), (1, 0)))
    assert rg.is_coordinated(CoordinatedTriple(3, 3, 3, (0, 1, 2), (0, 1, 2), (0, 1, 2)))


def test_malformed_triple():
    with pytest.raises(MalformedTriple):
        rg.recompose(CoordinatedTriple(2, 2, 2, (0, 1), (0, 1), (0, 0)))
    with pytest.raises(MalformedTriple):
        rg.is_coordinated(CoordinatedTriple(1, 1, 1, (3,), (0,), (0,)))


@settings(max_examples=200, deadline=None)
@given(composable())
def test_compose_matches_matrix_product(rs):
    R, S = rs
    assert rg.compose(R, S) == from_matrix(matrix(R).astype(int) @ matrix(S).astype(int) > 0)


@settings(max_examples=200, deadline=None)
@given(relations(), relations())
def test_tensor_is_block_diagonal(R, S):
    M = np.zeros((R.src + S.src, R.tgt + S.tgt), dtype=bool)
    M[: R.src, : R.tgt] = matrix(R)
    M[R.src :, R.tgt :] = matrix(S)
    assert rg.tensor(R, S) == from_matrix(M)


@settings(max_examples=200, deadline=None)
@given(relations())
def test_converse_is_transpose(R):
    assert rg.converse(R) == from_matrix(matrix(R).T)
    assert rg.converse(rg.converse(R)) == R


@settings(max_examples=150, deadline=None)
@given(composable(), relations())
def test_category_laws(rs, U):
    R, S = rs
    assert rg.compose(rg.identity(R.src), R) == R == rg.compose(R, rg.identity(R.tgt))
    if U.src == S.tgt:
        assert rg.compose(rg.compose(R, S), U) == rg.compose(R, rg.compose(S, U))


@settings(max_examples=150, deadline=None)
@given(composable(), composable())
def test_tensor_interchange(a, b):
    (R1, S1), (R2, S2) = a, b
    lhs = rg.compose(rg.tensor(R1, R2), rg.tensor(S1, S2))
    assert lhs == rg.tensor(rg.compose(R1, S1), rg.compose(R2, S2))


@settings(max_examples=300, deadline=None)
@given(relations(6))
def test_decompose_round_trip(R):
    t = rg.decompose(R)
    assert rg.is_coordinated(t)
    assert rg.recompose(t) == R
    assert rg.is_order_preserving(t.nu) and rg.is_order_preserving(t.mu)


def _defining_formulas(R):
    left = sorted(R.pairs)
    right = sorted(R.pairs, key=lambda p: (p[1], p[0]))
    return (
        tuple(x for x, _ in left),
        tuple(y for _, y in right),
        tuple(right.index(pair) for pair in left),
    )


@settings(max_examples=200, deadline=None)
@given(relations(5))
def test_decompose_matches_defining_formulas(R):
    t = rg.decompose(R)
    assert (t.nu, t.mu, t.beta) == _defining_formulas(R)


def _all_triples(k, n, m):
    for nu in itertools.product(range(n), repeat=k):
        for mu in itertools.product(range(m), repeat=k):
            for beta in itertools.permutations(range(k)):
                yield CoordinatedTriple(k, n, m, nu, mu, beta)


def test_coordinated_triple_is_unique_small():
    # brute force: among all triples recomposing to R only the decomposition is coordinated
    for n, m in itertools.product(range(3), repeat=2):
        cells = [(i, j) for i in range(n) for j in range(m)]
        for mask in range(1 << len(cells)):
            R = rel(n, m, [c for b, c in enumerate(cells) if mask >> b & 1])
            k = len(R)
            hits = [t for t in _all_triples(k, n, m) if rg.is_coordinated(t) and rg.recompose(t) == R]
            assert hits == [rg.decompose(R)]


@settings(max_examples=200, deadline=None)
@given(relations(5))
def test_backends_agree(R):
    results = {}
    for name in ("python", "compiled"):
        if name == "compiled" and not rg.compiled_available():
            continue
        previous = rg.use_backend(name)
        try:
            S = rg.converse(R)
            results[name] = (
                rg.decompose(R),
                rg.compose(R, S),
                rg.tensor(R, S),
                rg.right_lex_enum(R),
                rg.is_coordinated(rg.decompose(S)),
            )
        finally:
            rg.use_backend(previous)
    assert len(set(map(repr, results.values()))) == 1


def test_record_round_trip():
    R = rel(2, 3, [(1, 2), (0, 0)])
    assert R.record() == {"src": 2, "tgt": 3, "pairs": [[0, 0], [1, 2]]}
    assert Relation.from_record(R.record()) == R


def test_bad_record():
    with pytest.raises(ValueError):
        Relation.from_record({"src": 1, "tgt": 1, "pairs": [[0, 4]]})
