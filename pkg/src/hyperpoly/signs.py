"""Division, irreducibility and factorization search for sign polynomials.

Everything here is desk-scale exact computation over {-1, 0, 1}:
division by a linear term runs a four-case recursion keyed to the
lowest nonzero coefficient and the first sign flip, and the remaining
operations are exhaustive sweeps over coefficient vectors, bounded by
``max_degree`` (default 12, beyond which they refuse to run).

Unique factorization fails over the sign field, so factorizations are
reported as multisets of monic irreducibles together with a witness
arrangement: the n-fold product depends on the nesting, and a multiset
counts as soon as one bracketing of one ordering contains the target.

Root multiplicity is computed by the recursive rule "one plus the
largest multiplicity among all quotients"; this follows the standard
notion for roots over hyperfields and is not derivable from the
division algorithm alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import (
    ConstantPolynomialError,
    DegreeBoundExceeded,
    InternalInvariantError,
    NotARootError,
)
from .fields import SIGN
from .parsing import format_polynomial
from .polynomials import (
    Polynomial,
    _product_rows,
    is_root,
    poly_sort_key,
    sign_poly,
)

__all__ = [
    "DEFAULT_DEGREE_BOUND",
    "MONIC_IRREDUCIBLES",
    "Factorization",
    "divide_sign",
    "all_quotients_sign",
    "is_irreducible_sign",
    "classify_irreducibles",
    "all_factorizations_sign",
    "multiplicity_sign",
]

DEFAULT_DEGREE_BOUND = 12

# the complete list of monic irreducible sign polynomials
MONIC_IRREDUCIBLES = (
    sign_poly((0, 1)),      # T
    sign_poly((-1, 1)),     # T - 1
    sign_poly((1, 1)),      # T + 1
    sign_poly((1, 0, 1)),   # T^2 + 1
)


def _check_bound(n, max_degree):
    if n > max_degree:
        raise DegreeBoundExceeded(f"degree {n} exceeds the bound {max_degree}")


def _check_sign_value(a):
    if a not in (-1, 0, 1):
        raise ValueError(f"sign values are -1, 0 or 1, got {a!r}")


def divide_sign(p: Polynomial, a: int) -> Polynomial:
    """A quotient q with p in (T - a) * q, for a root a of p.

    For a = 0 the quotient is the coefficient shift.  For a = +/-1 let l
    be the lowest nonzero coefficient index and k the first index whose
    successor coefficient flips sign against c_l (relative to powers of
    a); then, descending from i = n-1:

    * d_i = c_{i+1}          if c_{i+1} != 0 and i > k
    * d_i = a * d_{i+1}      if c_{i+1} == 0 and i > k
    * d_i = -a^{i+1-l} * c_l if l <= i <= k
    * d_i = 0                if i < l
    """
    _check_sign_value(a)
    if p.is_zero or p.degree < 1:
        raise ConstantPolynomialError("a polynomial of degree >= 1 is required")
    n = p.degree
    c = p.coeffs

    if a == 0:
        if c[0] != 0:
            raise NotARootError("0 is not a root (the constant coefficient is nonzero)")
        return Polynomial(SIGN, c[1:])

    if not is_root(p, a):
        raise NotARootError(f"{a} is not a root of the polynomial")

    l = next(i for i, v in enumerate(c) if v != 0)
    k = None
    for i in range(n):
        if c[i + 1] == -SIGN.pow(a, i + 1 - l) * c[l]:
            k = i
            break
    if k is None:
        raise InternalInvariantError("no sign flip found although a is a root")

    d = [0] * n
    for i in range(n - 1, -1, -1):
        if i > k:
            d[i] = c[i + 1] if c[i + 1] != 0 else a * d[i + 1]
        elif i >= l:
            d[i] = -SIGN.pow(a, i + 1 - l) * c[l]
        # below l the coefficients stay 0
    return Polynomial(SIGN, tuple(d))


def all_quotients_sign(p: Polynomial, a: int,
                       max_degree: int = DEFAULT_DEGREE_BOUND) -> list:
    """The exact set {q : deg q = deg p - 1 and p in (T - a) * q}, sorted.

    Enumerates the 3^n coefficient vectors as a depth-first sweep with
    the membership relations checked as each position is filled, which
    prunes to the same set the raw enumeration produces.
    """
    _check_sign_value(a)
    if p.is_zero or p.degree < 1:
        raise ConstantPolynomialError("a polynomial of degree >= 1 is required")
    n = p.degree
    _check_bound(n, max_degree)
    c = p.coeffs

    if a == 0:
        return [Polynomial(SIGN, c[1:])] if c[0] == 0 else []

    out = []
    d0 = -a * c[0]  # forced by c_0 = -a d_0 since a is a unit
    stack = [(d0,)]
    while stack:
        d = stack.pop()
        i = len(d)
        if i == n:
            if d[n - 1] == c[n]:
                out.append(Polynomial(SIGN, d))
            continue
        for v in (1, 0, -1):
            if c[i] in SIGN.hyperadd((-a * v, d[i - 1])):
                stack.append(d + (v,))
    out.sort(key=poly_sort_key)
    return out


def is_irreducible_sign(p: Polynomial,
                        max_degree: int = DEFAULT_DEGREE_BOUND) -> bool:
    """Brute force over all two-factor splits into positive degrees."""
    if p.is_zero or p.degree < 1:
        raise ConstantPolynomialError("irreducibility needs degree >= 1")
    n = p.degree
    _check_bound(n, max_degree)
    rows_target = p.coeffs
    for d1 in range(1, n // 2 + 1):
        d2 = n - d1
        # q1 can be taken monic: p in q1*q2 iff p in (-q1)*(-q2)
        for c1 in iter_product((-1, 0, 1), repeat=d1):
            q1 = Polynomial(SIGN, c1 + (1,))
            for c2 in iter_product((-1, 0, 1), repeat=d2):
                for lead in (1, -1):
                    q2 = Polynomial(SIGN, c2 + (lead,))
                    if _box_contains(rows_target, q1, q2):
                        return False
    return True


def _box_contains(target_coeffs, q1, q2):
    rows = _product_rows(q1, q2)
    if len(rows) != len(target_coeffs):
        return False
    return all(target_coeffs[i] in rows[i] for i in range(len(rows)))


def classify_irreducibles(max_degree: int,
                          hard_cap: int = DEFAULT_DEGREE_BOUND) -> list:
    """All monic irreducible sign polynomials of degree <= max_degree."""
    _check_bound(max_degree, hard_cap)
    found = []
    for n in range(1, max_degree + 1):
        for cs in iter_product((-1, 0, 1), repeat=n):
            p = Polynomial(SIGN, cs + (1,))
            if is_irreducible_sign(p, max_degree=hard_cap):
                found.append(p)
    return found


@dataclass(frozen=True)
class Factorization:
    """A multiset of monic irreducible factors with the unit and one
    arrangement (ordering plus nesting) that witnessed membership."""

    factors: tuple
    unit: int
    witness_nesting: str

    def to_json_dict(self) -> dict:
        return {
            "factors": [format_polynomial(q) for q in self.factors],
            "unit": self.unit,
            "witness_nesting": self.witness_nesting,
        }


def all_factorizations_sign(p: Polynomial,
                            max_degree: int = DEFAULT_DEGREE_BOUND) -> list:
    """All multisets of monic irreducibles whose product reaches p.

    Membership is tested over every bracketing of every ordering of the
    multiset (binary products commute, so unordered recursive splits
    cover them all); the first successful arrangement is recorded as the
    witness.
    """
    if p.is_zero or p.degree < 1:
        raise ConstantPolynomialError("factorization needs degree >= 1")
    n = p.degree
    _check_bound(n, max_degree)
    unit = p.lead
    target = p.scale(unit).coeffs  # unit^2 = 1, so this is the monic associate

    basis = MONIC_IRREDUCIBLES
    memo = {}

    def product_sets(counts):
        """Map coefficient tuple -> witness string over all arrangements."""
        if counts in memo:
            return memo[counts]
        total = sum(counts)
        if total == 1:
            q = basis[counts.index(1)]
            result = {q.coeffs: format_polynomial(q)}
            memo[counts] = result
            return result
        result = {}
        for sub in _submultisets(counts):
            rest = tuple(c - s for c, s in zip(counts, sub))
            if sub > rest:  # unordered split, visit each pair once
                continue
            left = product_sets(sub)
            right = product_sets(rest)
            for ca, wa in left.items():
                pa = Polynomial(SIGN, ca)
                for cb, wb in right.items():
                    rows = _product_rows(pa, Polynomial(SIGN, cb))
                    for combo in iter_product(*(sorted(r) for r in rows)):
                        if combo[-1] != 0 and combo not in result:
                            result[combo] = f"({wa} * {wb})"
        memo[counts] = result
        return result

    found = []
    for counts in _degree_partitions(n):
        reachable = product_sets(counts)
        if target in reachable:
            factors = []
            for q, count in zip(basis, counts):
                factors.extend([q] * count)
            factors.sort(key=poly_sort_key)
            found.append(Factorization(tuple(factors), unit, reachable[target]))
    found.sort(key=lambda f: (len(f.factors), tuple(poly_sort_key(q) for q in f.factors)))
    return found


def _degree_partitions(n):
    """Count vectors over MONIC_IRREDUCIBLES with total degree n."""
    degrees = [q.degree for q in MONIC_IRREDUCIBLES]
    out = []

    def rec(idx, remaining, acc):
        if idx == len(degrees):
            if remaining == 0:
                out.append(tuple(acc))
            return
        for count in range(remaining // degrees[idx] + 1):
            rec(idx + 1, remaining - count * degrees[idx], acc + [count])

    rec(0, n, [])
    return out


def _submultisets(counts):
    ranges = [range(c + 1) for c in counts]
    for sub in iter_product(*ranges):
        if any(sub) and sub != counts:
            yield sub


def multiplicity_sign(p: Polynomial, a: int,
                      max_degree: int = DEFAULT_DEGREE_BOUND) -> int:
    """Root multiplicity: 0 for a non-root, else one plus the largest
    multiplicity of a over all quotients by T - a."""
    _check_sign_value(a)
    if p.is_zero:
        raise ConstantPolynomialError("multiplicity of the zero polynomial is undefined")
    _check_bound(p.degree if p.degree >= 1 else 0, max_degree)
    memo = {}

    def rec(poly):
        key = poly.coeffs
        if key in memo:
            return memo[key]
        if poly.degree < 1 or not is_root(poly, a):
            memo[key] = 0
            return 0
        best = 0
        for q in all_quotients_sign(poly, a, max_degree=max_degree):
            best = max(best, rec(q))
        memo[key] = 1 + best
        return memo[key]

    return rec(p)
