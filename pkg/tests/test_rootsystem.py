import pytest

from chevalley import RootSystem, RootSystemError, WeylGroup, height

CLOSED_FORM_POSITIVE = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
    ("B", 2): 4, ("C", 2): 4, ("C", 3): 9, ("D", 4): 12,
    ("G", 2): 6, ("F", 4): 24,
}

COXETER = {
    ("A", 1): 2, ("A", 2): 3, ("A", 3): 4, ("A", 4): 5,
    ("B", 2): 4, ("C", 2): 4, ("C", 3): 6, ("D", 4): 6,
    ("G", 2): 6, ("F", 4): 12,
}

BOURBAKI_CARTAN = {
    ("A", 2): ((2, -1), (-1, 2)),
    ("C", 2): ((2, -2), (-1, 2)),
    ("C", 3): ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    ("D", 4): ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    ("G", 2): ((2, -3), (-1, 2)),
}


@pytest.mark.parametrize("family,rank", sorted(CLOSED_FORM_POSITIVE))
def test_structure(family, rank):
    rs = RootSystem(family, rank)
    assert len(rs.positive_roots) == CLOSED_FORM_POSITIVE[(family, rank)]
    assert rs.coxeter_number == COXETER[(family, rank)]
    for i in range(rank):
        assert rs.cartan[i][i] == 2
        for j in range(rank):
            if i != j:
                assert rs.cartan[i][j] in (0, -1, -2, -3)
    # simple roots are the unit vectors and come first by height
    for i in range(rank):
        unit = tuple(1 if j == i else 0 for j in range(rank))
        assert unit in rs.positive_roots
    assert all(all(c >= 0 for c in r) for r in rs.positive_roots)


@pytest.mark.parametrize("family,rank", sorted(BOURBAKI_CARTAN))
def test_cartan_tables(family, rank):
    assert RootSystem(family, rank).cartan == BOURBAKI_CARTAN[(family, rank)]


@pytest.mark.parametrize("family,rank", sorted(CLOSED_FORM_POSITIVE))
def test_pairing_normalization(family, rank):
    rs = RootSystem(family, rank)
    for beta in rs.positive_roots:
        assert rs.pair(rs.root_to_weight(beta), beta) == 2


@pytest.mark.parametrize("family,rank", sorted(CLOSED_FORM_POSITIVE))
def test_inverse_cartan(family, rank):
    rs = RootSystem(family, rank)
    n = rs.rank
    for i in range(n):
        for j in range(n):
            entry = sum(rs.inverse_cartan[i][k] * rs.cartan[k][j]
                        for k in range(n))
            assert entry == (1 if i == j else 0)


def test_invalid_specs():
    for family, rank in [("E", 6), ("G", 3), ("F", 3), ("D", 2), ("A", 0),
                         ("B", 1), ("Z", 5)]:
        with pytest.raises(RootSystemError):
            RootSystem(family, rank)


def test_pair_examples():
    a2 = RootSystem("A", 2)
    assert a2.pair((1, 1), (1, 0)) == 1    # rho against a simple root
    assert a2.pair((0, 0), (1, 1)) == 0
    c2 = RootSystem("C", 2)
    assert c2.pair((1, 1), c2.highest_short_root) == 3  # h - 1
    with pytest.raises(RootSystemError):
        a2.pair((1, 0), (1, 2))            # not a root


def test_c2_catalog():
    c2 = RootSystem("C", 2)
    assert set(c2.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1)}
    assert c2.highest_root == (2, 1)
    assert c2.highest_short_root == (1, 1)
    assert c2.coxeter_number == 4


def test_weyl_dimension_examples():
    a2 = RootSystem("A", 2)
    assert a2.weyl_dimension((1, 0)) == 3
    assert a2.weyl_dimension((0, 0)) == 1
    assert a2.weyl_dimension((1, 1)) == 8
    a1 = RootSystem("A", 1)
    p, r = 3, 2
    assert a1.weyl_dimension(((p ** r - 1),)) == p ** (r * 1)
    with pytest.raises(RootSystemError):
        a2.weyl_dimension((-1, 0))


def test_weyl_dimension_duality():
    # dim is invariant under lam -> -w0(lam), small dominant weights
    for family, rank in [("A", 2), ("C", 2), ("A", 3), ("D", 4)]:
        rs = RootSystem(family, rank)
        group = WeylGroup(rs)
        from itertools import product
        for lam in product(range(4), repeat=rank):
            if rs.pair(lam, rs.highest_short_root) > 10:
                continue
            assert rs.weyl_dimension(lam) == rs.weyl_dimension(
                group.dual_weight(lam))


def test_weight_to_root_coords():
    from fractions import Fraction
    a2 = RootSystem("A", 2)
    assert a2.weight_to_root_coords((2, -1)) == (1, 0)
    assert a2.weight_to_root_coords((1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert a2.weight_to_root_coords((0, 0)) == (0, 0)


@pytest.mark.parametrize("family,rank", sorted(CLOSED_FORM_POSITIVE))
def test_root_coords_round_trip(family, rank):
    rs = RootSystem(family, rank)
    for beta in rs.positive_roots:
        assert rs.weight_to_root_coords(rs.root_to_weight(beta)) == beta


def test_height():
    assert height((1, 0)) == 1
    assert height((2, 1)) == 3
    assert height((2, 2)) == 4
