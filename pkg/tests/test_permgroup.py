from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from permrel.errors import PreconditionError
from permrel.permgroup import (
    Permutation,
    classify,
    compose,
    cyclic_group,
    generate_closure,
    regular_representation,
    sigma_map,
)

from conftest import suite, sym3

P = Permutation


def cyc(n, text):
    return P.parse_cycles(n, text)


def test_compose_identity():
    p = P((3, 1, 2))
    assert compose(P.identity(3), p) == p
    assert compose(p, P.identity(3)) == p


def test_compose_three_cycle_squares_to_inverse():
    s = cyc(3, "(1 2 3)")
    assert compose(s, s) == cyc(3, "(1 3 2)")


def test_compose_klein():
    assert compose(cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")) == cyc(4, "(1 4)(2 3)")


def test_compose_applies_right_factor_first():
    p, q = P((2, 1, 3)), P((1, 3, 2))
    r = compose(p, q)
    assert all(r(i) == p(q(i)) for i in range(1, 4))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(P((1, 2)), P((1, 2, 3)))


@pytest.mark.parametrize("images, msg", [((2, 2, 1), "value 2 repeated"), ((1, 4, 2), "out of range")])
def test_non_bijection_rejected(images, msg):
    with pytest.raises(ValueError, match=msg):
        P(images)


def test_cycle_parsing():
    assert cyc(4, "(1 2 3 4)").images == (2, 3, 4, 1)
    assert cyc(3, "()").is_identity()
    assert cyc(5, "(1,2)(3 4 5)").cycle_string() == "(1 2)(3 4 5)"
    with pytest.raises(ValueError):
        cyc(3, "1 2 3")


@pytest.mark.parametrize(
    "gens, n, order",
    [([], 3, 1), (["(1 2 3)"], 3, 3), (["(1 2)(3 4)", "(1 3)(2 4)"], 4, 4), (["(1 2)", "(1 2 3)"], 3, 6)],
)
def test_generate_closure_order(gens, n, order):
    H = generate_closure([cyc(n, g) for g in gens], n)
    assert H.order == order
    assert H.identity.is_identity()
    assert list(H.elements) == sorted(H.elements)


def test_closure_is_closed():
    H = sym3()
    for g, h in itertools.product(H.elements, repeat=2):
        assert compose(g, h) in H
        assert g.inverse() in H


def test_classify_cyclic3():
    c = classify(cyclic_group(3))
    assert (c.is_abelian, c.is_semiregular, c.is_transitive, c.is_regular) == (True, True, True, True)
    assert c.orbits == ((1, 2, 3),)


def test_classify_transposition():
    c = classify(generate_closure([cyc(3, "(1 2)")], 3))
    assert c.is_abelian and not c.is_semiregular and not c.is_transitive
    assert c.orbits == ((1, 2), (3,))
    assert c.orbit_representatives == (1, 3)


def test_classify_trivial():
    c = classify(generate_closure([], 2))
    assert c.is_abelian and c.is_semiregular and not c.is_transitive
    assert c.orbits == ((1,), (2,))


def test_classify_regular_sym3():
    c = classify(regular_representation(sym3()))
    assert not c.is_abelian and c.is_regular


def test_sigma_map_cyclic3():
    s = cyc(3, "(1 2 3)")
    sm = sigma_map(cyclic_group(3))
    assert sm[1].is_identity()
    assert sm[2] == compose(s, s)
    assert sm[3] == s


def test_sigma_map_klein():
    H = generate_closure([cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")], 4)
    sm = sigma_map(H)
    assert sm[2] == cyc(4, "(1 2)(3 4)")
    assert sm[3] == cyc(4, "(1 3)(2 4)")
    assert sm[4] == cyc(4, "(1 4)(2 3)")


def test_sigma_map_needs_regular():
    with pytest.raises(PreconditionError):
        sigma_map(generate_closure([cyc(3, "(1 2)")], 3))


@pytest.mark.parametrize("key", sorted(suite()))
def test_orbit_stabilizer(key):
    H = suite()[key].H
    for i in range(1, H.degree + 1):
        assert len(H.orbit(i)) * len(H.stabilizer(i)) == H.order


@pytest.mark.parametrize("key", sorted(suite()))
def test_classification_invariants(key):
    H = suite()[key].H
    c = classify(H)
    assert c.is_regular == (c.is_semiregular and c.is_transitive)
    assert c.is_semiregular == all(g(i) != i for g in H.elements[1:] for i in range(1, H.degree + 1))
    if c.is_semiregular:
        assert H.degree % H.order == 0
        assert all(len(o) == H.order for o in c.orbits)
    assert list(c.orbit_representatives) == sorted(min(o) for o in c.orbits)


@pytest.mark.parametrize("key", ["A", "B", "C"])
def test_sigma_identity_for_regular_abelian(key):
    # σ_{σ_j^{-1}(k)} = σ_j σ_k
    H = suite()[key].H
    sm = sigma_map(H)
    n = H.degree
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            assert sm[sm[j].inverse()(k)] == compose(sm[j], sm[k])


@given(st.permutations(list(range(1, 6))), st.permutations(list(range(1, 6))))
def test_inverse_and_associativity(a, b):
    p, q = P(tuple(a)), P(tuple(b))
    assert compose(p, p.inverse()).is_identity()
    assert compose(compose(p, q), q.inverse()) == p
    assert compose(p, q).inverse() == compose(q.inverse(), p.inverse())
