"""Weight-region predicates and enumerators, base-p digit decomposition,
restriction-isomorphism thresholds, and the p-dilated linkage relation.

Region kinds (all cut out of the dominant cone by one exact inequality):

  GammaChastkofsky   <nu, alpha0^vee> < h          (alpha0 = highest short root)
  Gamma              <nu, alpha0^vee> < h - 1
  Gamma2h1           <nu, alpha0^vee> < 2h - 1
  Pi                 <lam + rho, alpha0^vee> <= 2 p^r (h - 1)
  Cp                 <lam, alphatilde^vee> <= p(p-1)  (alphatilde = highest root)
  D                  sum_ij lam_i b_ij < p(p-1)/2, b the inverse pairing matrix
  Xr                 every coordinate in [0, p^r - 1]

The two Gamma thresholds are both published; callers pick which one they mean.
"""

from fractions import Fraction
from itertools import product

from .rootsystem import RootSystemError
from .weylgroup import is_prime

REGION_KINDS = ("GammaChastkofsky", "Gamma", "Gamma2h1", "Pi", "Cp", "D", "Xr")
_NEEDS_P = ("Pi", "Cp", "D", "Xr")
_NEEDS_R = ("Pi", "Xr")


def is_restricted(lam, p, r=1):
    """True iff every coordinate lies in [0, p^r - 1]."""
    bound = p ** r - 1
    return all(0 <= c <= bound for c in lam)


def steinberg_digits(lam, p):
    """Coordinatewise base-p digits of a dominant weight, least power first.

    Each digit is restricted and sum(digit[i] * p**i) == lam.
    """
    if any(c < 0 for c in lam):
        raise RootSystemError(f"{lam} is not dominant")
    digits = []
    rest = list(lam)
    while True:
        digits.append(tuple(c % p for c in rest))
        rest = [c // p for c in rest]
        if all(c == 0 for c in rest):
            break
    return digits


def _check_params(kind, p, r):
    if kind not in REGION_KINDS:
        raise RootSystemError(f"unknown region kind {kind!r}")
    if kind in _NEEDS_P:
        if p is None or not is_prime(p):
            raise RootSystemError(f"region {kind} needs a prime p, got {p}")
    if kind in _NEEDS_R and (r is None or r < 1):
        raise RootSystemError(f"region {kind} needs an integer r >= 1")


def _d_form(rs, lam):
    """sum_ij lam_i b_ij with b the inverse of the matrix <alpha_i, alpha_j^vee>."""
    # <alpha_i, alpha_j^vee> = cartan[j][i], so b is the transposed inverse
    inv = rs.inverse_cartan
    n = rs.rank
    return sum(Fraction(lam[i]) * inv[j][i] for i in range(n) for j in range(n))


def in_region(rs, lam, kind, p=None, r=None):
    """Exact membership test for a dominant weight in the named region."""
    _check_params(kind, p, r)
    if not rs.is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    h = rs.coxeter_number
    if kind == "GammaChastkofsky":
        return rs.pair(lam, rs.highest_short_root) < h
    if kind == "Gamma":
        return rs.pair(lam, rs.highest_short_root) < h - 1
    if kind == "Gamma2h1":
        return rs.pair(lam, rs.highest_short_root) < 2 * h - 1
    if kind == "Pi":
        lam_rho = tuple(c + 1 for c in lam)
        return rs.pair(lam_rho, rs.highest_short_root) <= 2 * p ** r * (h - 1)
    if kind == "Cp":
        return rs.pair(lam, rs.highest_root) <= p * (p - 1)
    if kind == "D":
        return _d_form(rs, lam) < Fraction(p * (p - 1), 2)
    # Xr
    return is_restricted(lam, p, r)


def _coordinate_bounds(rs, kind, p, r):
    """Per-coordinate upper bounds (inclusive) covering the region."""
    n = rs.rank
    if kind == "Xr":
        return [p ** r - 1] * n
    unit = lambda i: tuple(1 if j == i else 0 for j in range(n))
    if kind in ("GammaChastkofsky", "Gamma", "Gamma2h1", "Pi"):
        h = rs.coxeter_number
        if kind == "GammaChastkofsky":
            limit = h - 1
        elif kind == "Gamma":
            limit = h - 2
        elif kind == "Gamma2h1":
            limit = 2 * h - 2
        else:  # Pi: subtract <rho, alpha0^vee> = h - 1 from the shifted bound
            limit = 2 * p ** r * (h - 1) - (h - 1)
        coeffs = [rs.pair(unit(i), rs.highest_short_root) for i in range(n)]
        return [limit // c for c in coeffs]
    if kind == "Cp":
        limit = p * (p - 1)
        coeffs = [rs.pair(unit(i), rs.highest_root) for i in range(n)]
        return [limit // c for c in coeffs]
    # D: coefficient of lam_i is sum_j b_ij, always positive
    inv = rs.inverse_cartan
    limit = Fraction(p * (p - 1), 2)
    coeffs = [sum(inv[j][i] for j in range(n)) for i in range(n)]
    return [int(limit / c) for c in coeffs]


def enumerate_region(rs, kind, p=None, r=None):
    """All dominant weights in the region, sorted lexicographically."""
    _check_params(kind, p, r)
    bounds = _coordinate_bounds(rs, kind, p, r)
    out = [lam for lam in product(*[range(b + 1) for b in bounds])
           if in_region(rs, lam, kind, p, r)]
    out.sort()
    return out


def res_iso_threshold(rs, p, r, source):
    """Published bound on <mu, alpha0^vee> below which restriction from the
    ambient group to the finite subgroup is an isomorphism on cohomology.
    """
    h = rs.coxeter_number
    fam = rs.family
    if source == "Jantzen":
        if fam == "G":
            return p ** r - 3 * p ** (r - 1) - 3
        return p ** r - 2 * p ** (r - 1) - 2
    if source == "Andersen":
        if p < 3 * (h - 1):
            raise RootSystemError(
                f"Andersen threshold needs p >= 3(h-1) = {3 * (h - 1)}, got {p}")
        if fam == "A" and rs.rank == 1:
            raise RootSystemError("Andersen threshold excludes type A1")
        return p ** r - p ** (r - 1) - 2
    if source == "BNP":
        if r < 2:
            raise RootSystemError("BNP threshold needs r >= 2")
        if fam == "A":
            if rs.rank == 1:
                return p ** r - 2 * p ** (r - 1)
            return p ** r - p ** (r - 1)
        if fam in ("B", "C", "D"):
            return p ** r
        # F4, G2 share the row with E8
        return 2 * p ** r - p ** (r - 1) + 1
    raise RootSystemError(f"unknown threshold source {source!r}")


def is_linked(group, lam, nu, p):
    """True iff some Weyl element u has nu + rho - u(lam + rho) in p times
    the root lattice (dot-orbit linkage under the p-dilated affine group).
    """
    if not is_prime(p):
        raise RootSystemError(f"{p} is not prime")
    rs = group.root_system
    for u in group.elements:
        diff = tuple(a - b for a, b in zip(nu, u.dot_apply(lam)))
        coords = rs.weight_to_root_coords(diff)
        if all(c.denominator == 1 and c % p == 0 for c in coords):
            return True
    return False
