"""Kostant partition functions: memoized dynamic programming, a brute-force
oracle, and the classical weight-multiplicity cross-check.

P_n(nu) counts the multisets of exactly n positive roots summing to nu (in
simple-root coordinates); P(nu) is the sum over all n.
"""

import json
import os
from itertools import combinations_with_replacement

from .rootsystem import height, RootSystemError

CACHE_SCHEMA_VERSION = 1


class PartitionTable:
    """Per-root-system memo table for P_n(nu).

    The memo may be warmed from / flushed to a JSON cache file; absence of a
    cache never changes results.  Recurrence over a fixed root ordering:
    f(k, nu, n) = f(k+1, nu, n) + f(k, nu - beta_k, n - 1).
    """

    def __init__(self, rs, cache_dir=None):
        self.root_system = rs
        # highest roots first: failing branches die sooner
        self.roots = tuple(sorted(rs.positive_roots,
                                  key=lambda r: (-height(r), r)))
        self.memo = {}
        self.cache_dir = cache_dir
        if cache_dir is not None:
            self._load_cache()

    # -- core counting ---------------------------------------------------

    def count(self, nu, n):
        """P_n(nu): multisets of exactly n positive roots summing to nu."""
        nu = tuple(nu)
        if n < 0 or any(c < 0 for c in nu):
            return 0
        ht = height(nu)
        if ht == 0:
            return 1 if n == 0 else 0
        if n == 0 or ht < n or ht > n * height(self.roots[0]):
            return 0
        return self._count(0, nu, n)

    def _count(self, k, nu, n):
        ht = height(nu)
        if ht == 0:
            return 1 if n == 0 else 0
        if n <= 0 or k >= len(self.roots) or ht < n:
            return 0
        key = (k, nu, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        skip = self._count(k + 1, nu, n)
        beta = self.roots[k]
        reduced = tuple(a - b for a, b in zip(nu, beta))
        if all(c >= 0 for c in reduced):
            use = self._count(k, reduced, n - 1)
        else:
            use = 0
        self.memo[key] = skip + use
        return skip + use

    def total(self, nu):
        """P(nu) = sum over all part counts; zero off the nonnegative cone."""
        nu = tuple(nu)
        if any(c < 0 for c in nu):
            return 0
        return sum(self.count(nu, n) for n in range(height(nu) + 1))

    # -- JSON cache ------------------------------------------------------

    def _cache_path(self):
        rs = self.root_system
        return os.path.join(self.cache_dir,
                            f"kostant_{rs.family}{rs.rank}.json")

    def _load_cache(self):
        path = self._cache_path()
        if not os.path.exists(path):
            return
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") != CACHE_SCHEMA_VERSION:
            return
        rs = self.root_system
        if data.get("family") != rs.family or data.get("rank") != rs.rank:
            return
        for key, value in data["memo"].items():
            k, coords, n = key.split("|")
            nu = tuple(int(c) for c in coords.split(","))
            self.memo[(int(k), nu, int(n))] = int(value)

    def save_cache(self):
        if self.cache_dir is None:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        rs = self.root_system
        payload = {
            "version": CACHE_SCHEMA_VERSION,
            "family": rs.family,
            "rank": rs.rank,
            "memo": {
                f"{k}|{','.join(map(str, nu))}|{n}": str(v)
                for (k, nu, n), v in sorted(self.memo.items())
            },
        }
        with open(self._cache_path(), "w") as fh:
            json.dump(payload, fh, sort_keys=True)


def brute_force_partition_count(rs, nu, n):
    """Oracle for P_n(nu): exhaustive enumeration of root multisets.

    Shares no code with PartitionTable; guarded to small heights.
    """
    nu = tuple(nu)
    if height(nu) > 12:
        raise RootSystemError("brute-force oracle limited to height <= 12")
    if n < 0 or any(c < 0 for c in nu):
        return 0
    if n == 0:
        return 1 if height(nu) == 0 else 0
    hits = 0
    for combo in combinations_with_replacement(rs.positive_roots, n):
        total = [0] * rs.rank
        for root in combo:
            for j in range(rs.rank):
                total[j] += root[j]
        if tuple(total) == nu:
            hits += 1
    return hits


def weight_multiplicity(group, lam, mu, table=None):
    """Multiplicity of the weight mu in the induced module of highest weight
    lam, via the alternating sum of total partition counts over the Weyl
    group (the classical multiplicity formula).
    """
    rs = group.root_system
    if not rs.is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    if table is None:
        table = PartitionTable(rs)
    total = 0
    for u in group.elements:
        diff = tuple(a - b for a, b in zip(u.dot_apply(lam), mu))
        coords = rs.weight_to_root_coords(diff)
        if any(c.denominator != 1 for c in coords):
            continue
        nu = tuple(int(c) for c in coords)
        term = table.total(nu)
        if term:
            total += (-1) ** u.length * term
    assert total >= 0, "weight multiplicity must be nonnegative"
    return total
