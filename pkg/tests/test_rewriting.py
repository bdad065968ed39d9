from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from permrel.errors import BudgetExceeded, InconsistencyError, PreconditionError
from permrel.permgroup import Permutation
from permrel import rewriting
from permrel.rewriting import (
    MonoidInstance,
    all_words,
    canonical_form,
    cancellativity_witness,
    class_labels,
    count_elements_of_length,
    equivalence_class,
    factorize_lemma_form,
    growth_classify,
    rewrite_step,
    words_equal,
)

from conftest import brute_class, brute_partition, make, suite

S = suite()
A, B, C, D, E, F, G = (S[k] for k in "ABCDEFG")
ABELIAN = ["A", "B", "C", "D", "E", "G"]


def test_instance_validation():
    with pytest.raises(ValueError, match="l must be"):
        MonoidInstance(3, 1, A.H)
    with pytest.raises(ValueError):
        MonoidInstance(4, 2, A.H)


def test_rewrite_step_defining_relation():
    assert rewrite_step(A, (1, 2), 1, Permutation((2, 3, 1))) == (2, 3)


def test_rewrite_step_identity():
    assert rewrite_step(C, (4, 1, 3, 3), 2, C.H.identity) == (4, 1, 3, 3)


def test_rewrite_step_window():
    assert rewrite_step(C, (1, 1, 2, 4), 2, Permutation((2, 3, 4, 1))) == (1, 2, 3, 1)


def test_rewrite_step_errors():
    with pytest.raises(IndexError):
        rewrite_step(A, (1, 2), 2, A.H.identity)
    with pytest.raises(PreconditionError):
        rewrite_step(A, (1, 2), 1, Permutation((2, 1, 3)))
    with pytest.raises(ValueError):
        rewrite_step(A, (1, 4), 1, A.H.identity)


def test_class_of_x1x2():
    cls = equivalence_class(A, (1, 2))
    assert cls.members == {(1, 2), (2, 3), (3, 1)}
    assert cls.canonical == (1, 2)


def test_short_word_class_is_singleton():
    assert equivalence_class(C, (3, 2)).members == {(3, 2)}
    assert equivalence_class(A, (2,)).members == {(2,)}


def test_class_of_cube():
    cls = equivalence_class(A, (1, 1, 1))
    assert len(cls) == 9
    assert {(1, 1, 1), (2, 2, 1), (2, 3, 2)} <= cls.members
    assert cls.members == brute_class(A, (1, 1, 1))


def test_class_cap():
    small = MonoidInstance(3, 2, A.H, class_cap=4)
    with pytest.raises(BudgetExceeded):
        equivalence_class(small, (1, 1, 1))


@pytest.mark.parametrize(
    "u, v, expected",
    [((1, 2), (2, 3), True), ((1,), (2,), False), ((2, 2), (1, 1), True), ((1, 2), (1, 3), False), ((1, 2), (1, 2, 3), False)],
)
def test_words_equal_examples(u, v, expected):
    assert words_equal(A, u, v) is expected
    assert words_equal(A, u, v, method="bfs") is expected


def test_sweep_rejected_for_nonabelian():
    with pytest.raises(PreconditionError):
        words_equal(F, (1, 2), (2, 1), method="sweep")


def test_canonical_form_examples():
    assert canonical_form(A, (3, 1)) == (1, 2)
    assert canonical_form(A, (2,)) == (2,)
    assert canonical_form(A, (2, 2)) == (1, 1)


@pytest.mark.parametrize("key", sorted(S))
def test_canonical_form_is_class_minimum(key):
    I = S[key]
    for m in range(0, 4):
        part = brute_partition(I, m)
        for w, cls in part.items():
            assert canonical_form(I, w) == min(cls)


@pytest.mark.parametrize("key", ABELIAN)
def test_sweep_agrees_with_bfs(key):
    I = S[key]
    for m in range(0, 5):
        words = list(all_words(I.n, m))
        for u, v in itertools.product(words, repeat=2):
            assert words_equal(I, u, v, method="sweep") == words_equal(I, u, v, method="bfs")


@pytest.mark.parametrize("key", sorted(S))
def test_orbit_label_invariance(key):
    I = S[key]
    for m in range(I.l, I.l + 2):
        for w in all_words(I.n, m):
            labels = {tuple(I.orbit_label[x] for x in u) for u in equivalence_class(I, w).members}
            assert len(labels) == 1


@pytest.mark.parametrize("key", sorted(S))
def test_classes_are_an_equivalence(key):
    I = S[key]
    m = 2 if key == "F" else 3
    seen = {}
    for w in all_words(I.n, m):
        cls = equivalence_class(I, w)
        assert w in cls
        for u in cls.members:
            assert equivalence_class(I, u).members == cls.members
            seen.setdefault(u, cls.canonical)
            assert seen[u] == cls.canonical
    assert len(seen) == I.n**m


@pytest.mark.parametrize("key", sorted(S))
def test_orbit_powers_coincide(key):
    I = S[key]
    for i in range(1, I.n + 1):
        for j in I.H.orbit(i):
            assert words_equal(I, (i,) * I.l, (j,) * I.l)


@pytest.mark.parametrize("key", ["A", "B", "C", "F"])
def test_x1_power_is_central(key):
    I = S[key]
    z = (1,) * I.l

    def code(w):
        return int("".join(str(x - 1) for x in w) or "0", I.n)

    for m in range(0, 5):
        labels, _ = class_labels(I, m + I.l)
        for w in all_words(I.n, m):
            assert labels[code(z + w)] == labels[code(w + z)]


def test_factorize_x3x1():
    f = factorize_lemma_form(A, (3, 1))
    assert (f.w1, f.suffix) == ((1,), (2,))
    assert (f.prefix, f.w2) == ((3,), (1,))
    assert not words_equal(A, (3, 1), (2, 1))


def test_factorize_short_word():
    f = factorize_lemma_form(C, (4, 2))
    assert f == ((), (4, 2), (4, 2), ())


def test_factorize_cube():
    f = factorize_lemma_form(A, (2, 2, 2))
    assert f.w1 == (1, 1) and f.w2 == (1, 1)
    assert words_equal(A, (1, 1) + f.suffix, (2, 2, 2))
    # oracle: the suffix letter is the unique k with x1 x1 x_k = x2 x2 x2
    assert [k for k in range(1, 4) if words_equal(A, (1, 1, k), (2, 2, 2))] == list(f.suffix)


def test_factorize_too_short():
    with pytest.raises(PreconditionError):
        factorize_lemma_form(C, (1,))


@pytest.mark.parametrize("key", sorted(S))
def test_factorize_uses_representatives(key):
    I = S[key]
    reps = set(I.classification.orbit_representatives)
    for m in range(I.l - 1, I.l + 3):
        for w in all_words(I.n, m):
            f = factorize_lemma_form(I, w)
            assert set(f.w1) <= reps and set(f.w2) <= reps
            assert len(f.suffix) == len(f.prefix) == I.l - 1


@pytest.mark.parametrize("key", sorted(S))
def test_lemma_form_uniqueness(key):
    I = S[key]
    reps = set(I.classification.orbit_representatives)
    strict = I.classification.is_cancellative
    for m in range(I.l - 1, I.l + 3):
        k = m - I.l + 1
        for w in all_words(I.n, m):
            if canonical_form(I, w) != w:
                continue
            members = equivalence_class(I, w).members
            left = [u for u in members if set(u[:k]) <= reps]
            right = [u for u in members if set(u[m - k:]) <= reps]
            assert len({u[:k] for u in left}) == 1
            assert len({u[m - k:] for u in right}) == 1
            if strict:
                assert len(left) == 1 and len(right) == 1
            f = factorize_lemma_form(I, w)
            assert left[0][:k] == f.w1 and right[0][m - k:] == f.w2


def test_counts_examples():
    assert count_elements_of_length(A, 2) == 3
    assert count_elements_of_length(A, 0) == 1
    assert count_elements_of_length(D, 2) == 8


def test_count_budget():
    small = MonoidInstance(3, 2, A.H, enum_budget=50)
    with pytest.raises(BudgetExceeded):
        count_elements_of_length(small, 4)


@pytest.mark.parametrize("key", sorted(S))
def test_counts_match_brute_force(key):
    I = S[key]
    for m in range(0, 4):
        assert count_elements_of_length(I, m) == len(set(brute_partition(I, m).values()))


def test_growth_examples():
    assert growth_classify(A, 6) == ("linear", {m: 3 for m in range(1, 7)})
    assert growth_classify(D, 5) == ("exponential", {1: 4, 2: 8, 3: 16, 4: 32, 5: 64})
    assert growth_classify(G, 4) == ("exponential", {1: 2, 2: 4, 3: 8, 4: 16})


def test_growth_precondition():
    with pytest.raises(PreconditionError):
        growth_classify(C, 2)


def test_growth_inconsistency_aborts(monkeypatch):
    I = make(3, 2, (2, 3, 1))
    monkeypatch.setattr(rewriting, "count_elements_of_length", lambda inst, m: m + 1)
    with pytest.raises(InconsistencyError):
        growth_classify(I, 4)
    J = make(4, 2, (2, 1, 4, 3))
    monkeypatch.setattr(rewriting, "count_elements_of_length", lambda inst, m: 5)
    with pytest.raises(InconsistencyError):
        growth_classify(J, 4)


def test_cancellativity_witness_transposition():
    w = cancellativity_witness(E, 4)
    assert (w.a, w.b, w.c, w.side) == ((3,), (1,), (2,), "left")


def test_cancellativity_none_for_cyclic():
    assert cancellativity_witness(A, 5) is None


def test_cancellativity_witness_nonabelian_regular():
    w = cancellativity_witness(F, 5)
    assert w is not None
    lhs, rhs = (w.a + w.b, w.a + w.c) if w.side == "left" else (w.b + w.a, w.c + w.a)
    assert words_equal(F, lhs, rhs) and not words_equal(F, w.b, w.c)
    assert len(w.a) + len(w.b) <= F.l + 1


def test_cancellativity_precondition():
    with pytest.raises(PreconditionError):
        cancellativity_witness(C, 2)


@pytest.mark.parametrize(
    "gens, n",
    [([(2, 1, 3, 4)], 4), ([(2, 3, 1, 4, 5)], 5), ([(2, 1, 4, 3, 5, 6), (1, 2, 3, 4, 6, 5)], 6)],
)
def test_cancellativity_dichotomy_extra(gens, n):
    I = make(n, 2, *gens)
    found = cancellativity_witness(I, 4)
    assert (found is None) == I.classification.is_cancellative


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=0, max_size=7))
def test_canonical_form_idempotent_and_invariant(w):
    for I in (C, D, B):
        c = canonical_form(I, w)
        assert canonical_form(I, c) == c
        assert len(c) == len(w)
        assert words_equal(I, c, w)
