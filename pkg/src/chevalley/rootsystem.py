"""Exact construction of the finite irreducible root systems A-D, G2, F4.

Conventions: simple roots are numbered in the Bourbaki order (for B_n the
last simple root is the unique short one, for C_n the unique long one).
Weights are tuples of integers in fundamental-weight coordinates, i.e.
lambda[i] = <lambda, alpha_i^vee>.  Root-lattice elements are tuples of
integers in simple-root coordinates.  All arithmetic is exact (int and
Fraction); no Euclidean embedding is ever constructed.
"""

from fractions import Fraction

FAMILIES = ("A", "B", "C", "D", "G", "F")

# minimal rank per family (D_3 = A_3 is allowed; G and F have fixed rank)
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class RootSystemError(ValueError):
    """Invalid family/rank combination or ill-formed query."""


def cartan_matrix(family, rank):
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki order."""
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(upto):
        for i in range(upto):
            C[i][i + 1] = -1
            C[i + 1][i] = -1

    if family == "A":
        chain(rank - 1)
    elif family == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        chain(rank - 1)
        C[rank - 2][rank - 1] = -1
        C[rank - 1][rank - 2] = -2
    elif family == "C":
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        chain(rank - 1)
        C[rank - 2][rank - 1] = -2
        C[rank - 1][rank - 2] = -1
    elif family == "D":
        chain(rank - 2)
        C[rank - 3][rank - 1] = -1
        C[rank - 1][rank - 3] = -1
        C[rank - 2][rank - 1] = 0
        C[rank - 1][rank - 2] = 0
    elif family == "G":
        # alpha_1 short, alpha_2 long
        C[0][1] = -3
        C[1][0] = -1
    elif family == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        chain(3)
        C[2][1] = -2
    return tuple(tuple(row) for row in C)


def _symmetrizer(cartan):
    """Minimal positive integers d with d[i]*C[i][j] symmetric."""
    rank = len(cartan)
    d = [0] * rank
    d[0] = 1
    # propagate along the Dynkin graph
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            if d[i] == 0:
                continue
            for j in range(rank):
                if cartan[i][j] != 0 and i != j and d[j] == 0:
                    # d[i]*C[i][j] = d[j]*C[j][i]
                    val = Fraction(d[i] * cartan[i][j], cartan[j][i])
                    d[j] = val
                    changed = True
    # clear denominators, then divide by gcd
    from math import gcd, lcm

    denom = lcm(*[Fraction(x).denominator for x in d])
    ints = [int(Fraction(x) * denom) for x in d]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def _invert_rational(matrix):
    """Exact inverse of a square integer matrix, as Fractions."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def height(nu):
    """Sum of simple-root coordinates."""
    return sum(nu)


class RootSystem:
    """Immutable catalog of one irreducible root system.

    Attributes: family, rank, cartan, symmetrizer, positive_roots (sorted by
    height then coordinates), rho, coxeter_number, highest_root,
    highest_short_root, inverse_cartan.
    """

    def __init__(self, family, rank):
        if family not in FAMILIES:
            raise RootSystemError(f"unknown family {family!r}")
        if family == "G":
            if rank != 2:
                raise RootSystemError("G fixes rank 2")
        elif family == "F":
            if rank != 4:
                raise RootSystemError("F fixes rank 4")
        elif rank < _MIN_RANK[family]:
            raise RootSystemError(
                f"{family} requires rank >= {_MIN_RANK[family]}, got {rank}")
        self.family = family
        self.rank = rank
        self.cartan = cartan_matrix(family, rank)
        self.symmetrizer = _symmetrizer(self.cartan)
        self.inverse_cartan = _invert_rational(self.cartan)
        self.positive_roots = self._generate_positive_roots()
        self._root_set = frozenset(self.positive_roots) | frozenset(
            tuple(-c for c in r) for r in self.positive_roots)
        self.rho = (1,) * rank
        self.highest_root = self.positive_roots[-1]
        self.highest_short_root = self._find_highest_short()
        self.coxeter_number = self.pair(self.rho, self.highest_short_root) + 1

    # -- construction helpers -------------------------------------------

    def _generate_positive_roots(self):
        """All roots as the reflection orbit of the simple roots; keep the
        ones with nonnegative coordinates."""
        rank = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(rank))
                   for i in range(rank)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for beta in frontier:
                pairs = self._weight_form(beta)
                for i in range(rank):
                    refl = list(beta)
                    refl[i] -= pairs[i]
                    refl = tuple(refl)
                    if refl not in seen:
                        seen.add(refl)
                        nxt.append(refl)
            frontier = nxt
        pos = [r for r in seen if all(c >= 0 for c in r)]
        pos.sort(key=lambda r: (height(r), r))
        return tuple(pos)

    def _weight_form(self, beta):
        """Fundamental-weight coordinates of a root-lattice element: C . beta."""
        return tuple(sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
                     for i in range(self.rank))

    def _norm2(self, beta):
        """Squared length w.r.t. the symmetrized form (alpha_i,alpha_i)=2d_i."""
        d, C = self.symmetrizer, self.cartan
        return sum(beta[i] * d[i] * C[i][j] * beta[j]
                   for i in range(self.rank) for j in range(self.rank))

    def _find_highest_short(self):
        min_norm = min(self._norm2(r) for r in self.positive_roots)
        short = [r for r in self.positive_roots if self._norm2(r) == min_norm]
        return max(short, key=height)

    # -- public operations ----------------------------------------------

    def root_to_weight(self, beta):
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        return self._weight_form(beta)

    def is_root(self, beta):
        return tuple(beta) in self._root_set

    def pair(self, lam, beta):
        """<lam, beta^vee> for a root beta; always an integer."""
        beta = tuple(beta)
        if beta not in self._root_set:
            raise RootSystemError(f"{beta} is not a root of {self.family}{self.rank}")
        d = self.symmetrizer
        num = 2 * sum(lam[j] * d[j] * beta[j] for j in range(self.rank))
        den = self._norm2(beta)
        q, r = divmod(num, den)
        assert r == 0, "coroot pairing must be integral"
        return q

    def is_dominant(self, lam):
        return all(c >= 0 for c in lam)

    def weyl_dimension(self, lam):
        """dim of the induced module of highest weight lam: the exact product
        of <lam+rho, beta^vee> / <rho, beta^vee> over positive roots."""
        if not self.is_dominant(lam):
            raise RootSystemError(f"{lam} is not dominant")
        lam_rho = tuple(a + 1 for a in lam)
        num = den = 1
        for beta in self.positive_roots:
            num *= self.pair(lam_rho, beta)
            den *= self.pair(self.rho, beta)
        q, r = divmod(num, den)
        assert r == 0
        return q

    def weight_to_root_coords(self, lam):
        """Exact rational v with lam = sum v[j] alpha_j (v = C^-1 . lam)."""
        inv = self.inverse_cartan
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank))
                     for i in range(self.rank))

    def __repr__(self):
        return f"RootSystem({self.family!r}, {self.rank})"


def build_root_system(family, rank):
    """Construct and return the root system of the given type."""
    return RootSystem(family, rank)
