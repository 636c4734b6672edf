import itertools

import pytest

from braidrack import groups as G
from braidrack.errors import StructureError


def test_table_validation_rejects_non_groups():
    with pytest.raises(StructureError):
        G.FiniteGroupTable([[0, 1], [1, 1]])
    with pytest.raises(StructureError):
        G.FiniteGroupTable([[0, 1, 2], [1, 2, 0]])
    # a Latin square with identity that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(StructureError):
        G.FiniteGroupTable(loop)


@pytest.mark.parametrize("name,order", [("S3", 6), ("S4", 24), ("A5", 60), ("C6", 6),
                                        ("D8", 8), ("V4", 4)])
def test_named_groups(name, order):
    g = G.by_name(name)
    assert g.order == order
    e = g.identity
    for a, b, c in itertools.islice(itertools.product(range(order), repeat=3), 2000):
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    assert all(g.mul(a, g.inv[a]) == e for a in range(order))


def test_conjugacy_classes_of_s4():
    sizes = sorted(len(c) for c in G.symmetric(4).conjugacy_classes())
    assert sizes == [1, 3, 6, 6, 8]


def test_commutator_subgroups():
    assert len(G.symmetric(4).commutator_subgroup) == 12
    assert len(G.alternating(5).commutator_subgroup) == 60
    assert G.abelianization_order(G.symmetric(3)) == 2


def test_abelian_rank():
    assert G.abelian_rank(G.by_name("V4")) == 2
    assert G.abelian_rank(G.cyclic(6)) == 1
    assert G.abelian_rank(G.alternating(5)) == 0
    c2 = G.cyclic(2)
    assert G.abelian_rank(G.direct_product(G.direct_product(c2, c2), c2)) == 3


def test_normal_subgroups_and_simple_quotients():
    assert sorted(len(n) for n in G.symmetric(4).normal_subgroups()) == [1, 4, 12, 24]
    assert G.symmetric(4).nonabelian_simple_quotients() == []
    # S_5 / A_5 is abelian, so S_5 has no nonabelian simple quotient
    assert G.symmetric(5).nonabelian_simple_quotients() == []
    assert [x.order for x in G.alternating(5).nonabelian_simple_quotients()] == [60]


def test_isomorphism_search():
    assert G.by_name("C6").is_isomorphic(G.direct_product(G.cyclic(2), G.cyclic(3)))
    assert not G.by_name("C6").is_isomorphic(G.symmetric(3))
    assert not G.by_name("V4").is_isomorphic(G.cyclic(4))
    d8 = G.by_name("D8")
    iso = G.find_isomorphism(d8, d8)
    assert iso is not None


def test_element_index_and_labels():
    g = G.symmetric(3)
    i = G.element_index(g, "(1 2)")
    assert g.label(i) == "(1 2)"
    assert g.element_order(G.element_index(g, "(1 2 3)")) == 3
