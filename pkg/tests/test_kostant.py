from itertools import product

import pytest

from chevalley import (PartitionTable, RootSystem, RootSystemError, WeylGroup,
                       brute_force_partition_count, weight_multiplicity,
                       height)


def cone_targets(rs, max_height):
    """All nonnegative root-lattice vectors up to the given height."""
    for nu in product(range(max_height + 1), repeat=rs.rank):
        if height(nu) <= max_height:
            yield nu


def test_basic_counts():
    a2 = RootSystem("A", 2)
    table = PartitionTable(a2)
    assert table.count((0, 0), 0) == 1
    assert table.count((1, 1), 2) == 1          # {a1, a2}
    assert table.count((2, 2), 3) == 1          # {a1, a2, a1+a2}
    for beta in a2.positive_roots:
        assert table.count(beta, 1) == 1
    assert table.count((1, 0), 2) == 0
    assert table.count((-1, 2), 1) == 0


def test_totals():
    a2 = RootSystem("A", 2)
    table = PartitionTable(a2)
    assert table.total((0, 0)) == 1
    assert table.total((1, 1)) == 2             # {a1+a2}, {a1,a2}
    assert table.total((-1, 0)) == 0


@pytest.mark.parametrize("family,rank", [("A", 2), ("C", 2), ("G", 2)])
def test_dp_matches_brute_force(family, rank):
    rs = RootSystem(family, rank)
    table = PartitionTable(rs)
    for nu in cone_targets(rs, 8):
        for n in range(height(nu) + 2):
            assert table.count(nu, n) == brute_force_partition_count(rs, nu, n), \
                (nu, n)


def test_brute_force_guard():
    a2 = RootSystem("A", 2)
    with pytest.raises(RootSystemError):
        brute_force_partition_count(a2, (7, 7), 3)


@pytest.mark.parametrize("family,rank", [("A", 2), ("C", 2), ("G", 2)])
def test_all_simple_partition_is_unique(family, rank):
    rs = RootSystem(family, rank)
    table = PartitionTable(rs)
    for nu in cone_targets(rs, 8):
        assert table.count(nu, height(nu)) == 1
        assert table.count(nu, height(nu) + 1) == 0


def test_memo_reproducible():
    rs = RootSystem("C", 2)
    warm = PartitionTable(rs)
    warm.total((4, 3))
    for key, value in warm.memo.items():
        fresh = PartitionTable(rs)
        k, nu, n = key
        assert fresh._count(k, nu, n) == value


def test_cache_round_trip(tmp_path):
    rs = RootSystem("A", 2)
    table = PartitionTable(rs, cache_dir=str(tmp_path))
    baseline = table.total((3, 3))
    table.save_cache()
    reloaded = PartitionTable(rs, cache_dir=str(tmp_path))
    assert reloaded.memo == table.memo
    assert reloaded.total((3, 3)) == baseline


def test_multiplicity_examples():
    a2 = RootSystem("A", 2)
    group = WeylGroup(a2)
    assert weight_multiplicity(group, (1, 1), (1, 1)) == 1
    assert weight_multiplicity(group, (1, 1), (0, 0)) == 2   # adjoint zero space
    assert weight_multiplicity(group, (1, 0), (5, 5)) == 0


def test_multiplicity_weyl_invariance():
    a2 = RootSystem("A", 2)
    group = WeylGroup(a2)
    lam = (2, 1)
    for w in group.elements:
        assert (weight_multiplicity(group, lam, w.apply((1, 0)))
                == weight_multiplicity(group, lam, (1, 0)))


@pytest.mark.parametrize("family,rank", [("A", 2), ("C", 2), ("A", 3)])
def test_multiplicity_sums_to_weyl_dimension(family, rank):
    rs = RootSystem(family, rank)
    group = WeylGroup(rs)
    table = PartitionTable(rs)
    for lam in product(range(7), repeat=rank):
        if not (0 < rs.pair(lam, rs.highest_short_root) <= 6):
            continue
        total = sum(
            weight_multiplicity(group, lam, mu, table=table)
            for mu in weight_orbit_box(rs, lam))
        assert total == rs.weyl_dimension(lam), lam


def weight_orbit_box(rs, lam):
    """All weights that can occur in the module of highest weight lam:
    mu with lam - u(mu) in the nonnegative root cone for dominant u(mu)."""
    # every weight of the module pairs with the highest coroot within +-cap
    cap = rs.pair(lam, rs.highest_short_root)
    coords = range(-cap, cap + 1)
    out = []
    for mu in product(coords, repeat=rs.rank):
        diff = rs.weight_to_root_coords(
            tuple(a - b for a, b in zip(lam, mu)))
        # mu must lie under lam in the real root cone of the orbit hull
        if all(c.denominator == 1 for c in diff):
            out.append(mu)
    return out
