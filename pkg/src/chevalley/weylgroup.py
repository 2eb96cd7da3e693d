"""Exact enumeration of Weyl groups and their actions on weights.

Elements are identified by their integer action matrix on fundamental-weight
coordinates; the stored reduced word is the lexicographically least shortest
word in the simple reflections (0-based indices).
"""

from dataclasses import dataclass
from math import factorial

from .rootsystem import RootSystemError


class WeylCapError(RuntimeError):
    """Enumeration would exceed the configured element cap."""


DEFAULT_CAP = 2_000_000


def closed_form_order(family, rank):
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "G":
        return 12
    if family == "F":
        return 1152
    raise RootSystemError(f"unknown family {family!r}")


@dataclass(frozen=True)
class WeylElement:
    word: tuple            # simple-reflection indices, lex-least shortest
    matrix: tuple          # rank x rank integer matrix on weight coordinates

    @property
    def length(self):
        return len(self.word)

    def apply(self, lam):
        """w(lam), the ordinary linear action."""
        return tuple(sum(row[j] * lam[j] for j in range(len(lam)))
                     for row in self.matrix)

    def dot_apply(self, lam):
        """w . lam = w(lam + rho) - rho, the rho-shifted affine action."""
        shifted = tuple(a + 1 for a in lam)
        return tuple(v - 1 for v in self.apply(shifted))


def simple_reflection_matrix(rs, i):
    """Matrix of s_i on weight coordinates: s_i(lam) = lam - lam[i]*alpha_i."""
    rank = rs.rank
    alpha_i = rs.root_to_weight(tuple(1 if j == i else 0 for j in range(rank)))
    return tuple(tuple((1 if k == j else 0) - (alpha_i[k] if j == i else 0)
                       for j in range(rank))
                 for k in range(rank))


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n))
                 for i in range(n))


class WeylGroup:
    """The full Weyl group of a root system, enumerated exactly once."""

    def __init__(self, rs, cap=DEFAULT_CAP):
        expected = closed_form_order(rs.family, rs.rank)
        if expected > cap:
            raise WeylCapError(
                f"Weyl group of {rs.family}{rs.rank} has order {expected}, "
                f"exceeding the cap {cap}")
        self.root_system = rs
        rank = rs.rank
        gens = [simple_reflection_matrix(rs, i) for i in range(rank)]
        identity = tuple(tuple(1 if i == j else 0 for j in range(rank))
                         for i in range(rank))
        elements = {identity: ()}
        frontier = [((), identity)]
        while frontier:
            nxt = []
            # lex order on frontier words keeps first discovery lex-least
            for word, mat in sorted(frontier, key=lambda t: t[0]):
                for i in range(rank):
                    new_mat = _mat_mul(mat, gens[i])
                    if new_mat not in elements:
                        new_word = word + (i,)
                        elements[new_mat] = new_word
                        nxt.append((new_word, new_mat))
            frontier = nxt
        self.elements = tuple(sorted(
            (WeylElement(word=w, matrix=m) for m, w in elements.items()),
            key=lambda e: (e.length, e.word)))
        self.order = len(self.elements)
        assert self.order == expected, "enumeration disagrees with closed form"
        self.longest = self.elements[-1]
        assert self.longest.length == len(rs.positive_roots)

    @property
    def identity(self):
        return self.elements[0]

    def dual_weight(self, lam):
        """lam* = -w0(lam); dominant when lam is dominant."""
        return tuple(-v for v in self.longest.apply(lam))


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def decompose_pw(group, lam, p):
    """All pairs (w, mu) with mu dominant and lam = p*mu + w.0.

    An empty list certifies that the first-Frobenius-kernel cohomology of the
    induced module of highest weight lam vanishes in every degree.
    """
    if not is_prime(p):
        raise RootSystemError(f"{p} is not prime")
    rs = group.root_system
    if not rs.is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    zero = (0,) * rs.rank
    out = []
    for w in group.elements:
        w_dot_0 = w.dot_apply(zero)
        diff = [a - b for a, b in zip(lam, w_dot_0)]
        if all(d % p == 0 for d in diff):
            mu = tuple(d // p for d in diff)
            if rs.is_dominant(mu):
                out.append((w, mu))
    return out
