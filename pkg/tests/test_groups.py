"""Group law, normal form and serialization tests for every shipped family."""

import random

import pytest

from wordbound import groups as gr
from wordbound.errors import DomainError, UnsupportedFamilyError
from wordbound.groups import (
    INFINITE,
    CayleyTableGroup,
    DihedralFinite,
    DihedralInfinite,
    FiniteCyclic,
    Free,
    Heisenberg,
    IntVector,
    Product,
)

Z3_TABLE = {
    "elements": ["e", "g", "g2"],
    "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
}

FAMILIES = [
    FiniteCyclic(1),
    FiniteCyclic(5),
    FiniteCyclic(8),
    IntVector(1),
    IntVector(3),
    DihedralFinite(1),
    DihedralFinite(4),
    DihedralInfinite(),
    Heisenberg(),
    Free(1),
    Free(2),
    Product(IntVector(1), FiniteCyclic(2)),
    Product(DihedralFinite(4), FiniteCyclic(3)),
    Product(IntVector(1), DihedralFinite(4)),
    CayleyTableGroup.from_json(Z3_TABLE),
]


@pytest.mark.parametrize("G", FAMILIES, ids=str)
def test_group_laws(G):
    rng = random.Random(7)
    e = G.identity()
    assert G.contains(e)
    for _ in range(400):
        g = gr.random_element(G, rng, size=6)
        h = gr.random_element(G, rng, size=6)
        k = gr.random_element(G, rng, size=6)
        assert G.contains(g)
        assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k))
        assert G.mul(g, e) == g
        assert G.mul(e, g) == g
        assert G.mul(g, G.inv(g)) == e
        assert G.mul(G.inv(g), g) == e
        assert G.inv(G.inv(g)) == g


@pytest.mark.parametrize("G", FAMILIES, ids=str)
def test_power_matches_iterated_multiplication(G):
    rng = random.Random(11)
    for _ in range(50):
        g = gr.random_element(G, rng, size=4)
        acc = G.identity()
        for n in range(7):
            assert G.power(g, n) == acc
            acc = G.mul(acc, g)
        assert G.power(g, -3) == G.inv(G.power(g, 3))


def test_heisenberg_presentation_identities():
    G = Heisenberg()
    a, b, c = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert G.commutator(a, b) == c
    assert G.commutator(a, c) == G.identity()
    assert G.commutator(b, c) == G.identity()
    # [a^u, b^v] = c^(u*v)
    for u in range(-4, 5):
        for v in range(-4, 5):
            assert G.commutator(G.power(a, u), G.power(b, v)) == (0, 0, u * v)
    # conjugation moves only the central coordinate
    g = (2, 3, -1)
    for n in range(-3, 4):
        an = G.power(a, n)
        assert G.mul(G.mul(an, g), G.inv(an)) == (2, 3, -1 + n * 3)
        bn = G.power(b, n)
        assert G.mul(G.mul(bn, g), G.inv(bn)) == (2, 3, -1 - n * 2)


def test_heisenberg_center_commutator_exponent_is_determinant():
    G = Heisenberg()
    rng = random.Random(3)
    for _ in range(200):
        x = gr.random_element(G, rng, size=5)
        y = gr.random_element(G, rng, size=5)
        com = G.commutator(x, y)
        assert com == (0, 0, x[0] * y[1] - x[1] * y[0])


@pytest.mark.parametrize("G", [DihedralFinite(5), DihedralInfinite()], ids=str)
def test_dihedral_relations(G):
    s = (0, 1)
    t = (1, 0)
    assert G.mul(s, s) == G.identity()
    assert G.mul(G.mul(s, t), s) == G.inv(t)
    rng = random.Random(5)
    for _ in range(100):
        g = gr.random_element(G, rng, size=6)
        if g[1] == 1:
            assert G.mul(g, g) == G.identity()
            assert G.inv(g) == g


def test_free_reduction():
    G = Free(2)
    x, y = (1,), (2,)
    assert G.mul(x, G.inv(x)) == ()
    assert G.mul((1, 2), (-2, -1)) == ()
    assert G.mul((1, 2), (-2, 1)) == (1, 1)
    assert gr.reduce_letters([1, 2, -2, -1, 1]) == (1,)
    assert not G.contains((1, -1))  # unreduced
    assert not G.contains((3,))  # out of rank
    assert not G.contains((0,))


def test_element_orders():
    assert FiniteCyclic(12).element_order(8) == 3
    assert FiniteCyclic(12).element_order(5) == 12
    assert DihedralFinite(4).element_order((1, 0)) == 4
    assert DihedralFinite(4).element_order((1, 1)) == 2
    assert DihedralInfinite().element_order((3, 0)) is INFINITE
    assert DihedralInfinite().element_order((3, 1)) == 2
    assert Heisenberg().element_order((0, 0, 5)) is INFINITE
    assert IntVector(2).element_order((0, 0)) == 1
    P = Product(FiniteCyclic(4), FiniteCyclic(6))
    assert P.element_order((1, 1)) == 12
    T = CayleyTableGroup.from_json(Z3_TABLE)
    assert T.element_order(1) == 3


def test_enumeration_sizes():
    assert sorted(FiniteCyclic(5).elements()) == [0, 1, 2, 3, 4]
    assert len(list(DihedralFinite(4).elements())) == 8
    P = Product(DihedralFinite(4), FiniteCyclic(3))
    assert P.size == 24
    assert len(set(P.elements())) == 24
    with pytest.raises(UnsupportedFamilyError):
        list(IntVector(1).elements())


def test_domain_checks_reject_foreign_elements():
    with pytest.raises(DomainError):
        FiniteCyclic(5).check(5)
    with pytest.raises(DomainError):
        IntVector(2).check((1,))
    with pytest.raises(DomainError):
        Heisenberg().check((1, 2))
    with pytest.raises(DomainError):
        DihedralFinite(4).check((4, 0))


def test_cayley_table_validation():
    CayleyTableGroup.from_json(Z3_TABLE)
    with pytest.raises(ValueError, match="identity"):
        CayleyTableGroup(names=("e", "a"), table=((1, 0), (0, 1)))
    with pytest.raises(ValueError, match="inverse"):
        CayleyTableGroup(names=("e", "a"), table=((0, 1), (1, 1)))
    with pytest.raises(ValueError, match="associative"):
        CayleyTableGroup.from_json({
            "elements": ["e", "a", "b"],
            # a*a = e but a*b = b breaks associativity: (a*a)*b != a*(a*b)
            "table": [[0, 1, 2], [1, 0, 1], [2, 2, 0]],
        })
    with pytest.raises(ValueError, match="square"):
        CayleyTableGroup(names=("e",), table=((0, 0),))


def test_cayley_table_matches_cyclic_group():
    T = CayleyTableGroup.from_json(Z3_TABLE)
    C = FiniteCyclic(3)
    for a in range(3):
        for b in range(3):
            assert T.mul(a, b) == C.mul(a, b)


@pytest.mark.parametrize("G", FAMILIES, ids=str)
def test_group_descriptor_round_trip(G):
    obj = gr.group_to_obj(G)
    back = gr.group_from_obj(obj)
    assert back == G


@pytest.mark.parametrize("G", FAMILIES, ids=str)
def test_element_serialization_round_trip(G):
    rng = random.Random(13)
    for _ in range(30):
        g = gr.random_element(G, rng, size=5)
        assert gr.element_from_obj(G, gr.element_to_obj(G, g)) == g


@pytest.mark.parametrize("G", [
    FiniteCyclic(5),
    IntVector(3),
    DihedralFinite(4),
    DihedralInfinite(),
    Heisenberg(),
    Product(IntVector(1), DihedralFinite(4)),
], ids=str)
def test_flat_encoding_round_trip(G):
    rng = random.Random(17)
    for _ in range(30):
        g = gr.random_element(G, rng, size=5)
        flat = []

        def walk(H, x):
            if isinstance(H, Product):
                walk(H.left, x[0])
                walk(H.right, x[1])
            elif isinstance(x, tuple):
                flat.extend(x)
            else:
                flat.append(x)

        walk(G, g)
        assert gr.element_from_flat(G, tuple(flat)) == g


def test_flat_encoding_reduces_modular_slots():
    assert gr.element_from_flat(FiniteCyclic(5), (7,)) == 2
    assert gr.element_from_flat(DihedralFinite(4), (-1, 3)) == (3, 1)


def test_standard_generators_generate():
    for G in [FiniteCyclic(5), DihedralFinite(4),
              Product(DihedralFinite(4), FiniteCyclic(3))]:
        assert len(gr.closure(G, gr.standard_generators(G))) == G.size


def test_closure_of_proper_subgroup():
    G = FiniteCyclic(8)
    assert sorted(gr.closure(G, [2])) == [0, 2, 4, 6]
    D = DihedralFinite(4)
    assert len(gr.closure(D, [(0, 1)])) == 2
