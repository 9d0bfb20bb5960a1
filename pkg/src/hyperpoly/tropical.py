"""Newton-polygon roots and division for tropical polynomials.

A tropical polynomial of degree n has exactly n roots counted with
multiplicity.  In log coordinates they are read off the lower convex
hull of the points (i, -e_i) taken over the indices with a nonzero
coefficient c_i = exp(e_i): the hull's slope over each unit step is the
log coordinate of one root, and every leading zero coefficient
contributes one zero root.  Zero coefficients elsewhere impose no
constraint on the hull and are simply omitted from its input.

Division by a linear term T + a follows a three-step recursion: the
coefficients above the divided root locus descend from the leading one,
the coefficients below climb from the constant one, and the locus
itself is filled with explicit suffix products of the roots.  The
result is the coefficientwise-maximal polynomial q with p in (T+a)*q;
the quotient is unique exactly when all roots are simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iter_product

from .errors import ConstantPolynomialError, InternalInvariantError, NotARootError
from .fields import TROPICAL, TropValue
from .polynomials import Polynomial, divides_linearly, poly_sort_key

__all__ = [
    "NewtonPolygon",
    "RootLocus",
    "newton_polygon",
    "roots_with_multiplicities",
    "factor",
    "divide",
    "is_quotient",
    "search_quotients",
    "render_newton_svg",
]


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull data of a tropical polynomial.

    ``vertices`` lists (index, height) pairs; a ``None`` height marks a
    leading zero coefficient (no constraint, conventionally +infinity).
    ``slopes`` are the per-unit-step hull increments, nondecreasing; the
    number of finite slopes plus ``zero_root_multiplicity`` equals the
    degree.
    """

    vertices: tuple
    slopes: tuple
    zero_root_multiplicity: int

    def to_json_dict(self) -> dict:
        return {
            "vertices": [[i, "+inf" if h is None else str(h)] for i, h in self.vertices],
            "slopes": [str(s) for s in self.slopes],
            "zero_mult": self.zero_root_multiplicity,
        }


@dataclass(frozen=True)
class RootLocus:
    """A root with its multiplicity and 1-based start position in the
    nondecreasing root list."""

    root: TropValue
    multiplicity: int
    start: int


def _require_positive_degree(p: Polynomial):
    if p.is_zero or p.degree < 1:
        raise ConstantPolynomialError("a polynomial of degree >= 1 is required")


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(p: Polynomial) -> NewtonPolygon:
    """Lower convex hull of the points (i, -e_i) over nonzero coefficients."""
    _require_positive_degree(p)
    points = [(i, -c.exponent) for i, c in enumerate(p.coeffs) if not c.is_zero]
    zero_mult = points[0][0]  # leading zero coefficients c_0..c_{l-1}

    hull = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)

    slopes = []
    for (i1, h1), (i2, h2) in zip(hull, hull[1:]):
        step = Fraction(h2 - h1, i2 - i1)
        slopes.extend([step] * (i2 - i1))

    vertices = tuple((i, None) for i in range(zero_mult)) + tuple(hull)
    return NewtonPolygon(vertices, tuple(slopes), zero_mult)


def roots_with_multiplicities(p: Polynomial) -> list:
    """The sorted root loci of p (zero roots first, then hull slopes)."""
    polygon = newton_polygon(p)
    roots = [TropValue.zero()] * polygon.zero_root_multiplicity
    roots.extend(TropValue(s) for s in polygon.slopes)
    loci = []
    pos = 0
    while pos < len(roots):
        end = pos
        while end < len(roots) and roots[end] == roots[pos]:
            end += 1
        loci.append(RootLocus(roots[pos], end - pos, pos + 1))
        pos = end
    return loci


def _sorted_roots(p: Polynomial) -> list:
    out = []
    for locus in roots_with_multiplicities(p):
        out.extend([locus.root] * locus.multiplicity)
    return out


def factor(p: Polynomial):
    """Unique factorization: the unit c_n and the linear factors T + a_i, ascending."""
    _require_positive_degree(p)
    factors = [Polynomial(TROPICAL, (a, TROPICAL.one)) for a in _sorted_roots(p)]
    return p.lead, factors


def divide(p: Polynomial, a: TropValue) -> Polynomial:
    """The maximal q with p in (T + a) * q; raises NotARootError otherwise.

    A zero root shifts the coefficients down by one.  For a nonzero root
    of multiplicity m starting at position k in the sorted root list,
    the recursion runs in three ranges:

    * i = n-1 down to k+m-1:  d_i = max(c_{i+1}, a * d_{i+1})
    * i = 1 up to k-2:        d_i = max(c_i / a, d_{i-1} / a), after d_0 = c_0 / a
    * i = k-1 .. k+m-2:       d_i = a_{i+2} * ... * a_n * c_n
    """
    _require_positive_degree(p)
    n = p.degree
    c = p.coeffs

    if a.is_zero:
        if not c[0].is_zero:
            raise NotARootError("zero is not a root (the constant coefficient is nonzero)")
        return Polynomial(TROPICAL, c[1:])

    roots = _sorted_roots(p)
    if a not in roots:
        raise NotARootError(f"{a} is not a root of the polynomial")
    k = roots.index(a) + 1
    m = roots.count(a)

    inv_a = a.inv()
    d = [None] * n

    if k <= n - m:
        d[n - 1] = c[n]
        for i in range(n - 2, k + m - 2, -1):
            d[i] = max(c[i + 1], a * d[i + 1])
    if k >= 2:
        d[0] = inv_a * c[0]
        for i in range(1, k - 1):
            d[i] = max(inv_a * c[i], inv_a * d[i - 1])
    suffix = c[n]
    products = [suffix]  # products[j] = a_{n-j+1} * ... * a_n * c_n
    for root in reversed(roots):
        suffix = suffix * root
        products.append(suffix)
    for i in range(k - 1, k + m - 1):
        d[i] = products[n - i - 1]  # a_{i+2} * ... * a_n * c_n

    if any(v is None for v in d):
        raise InternalInvariantError("division recursion left a coefficient unset")
    return Polynomial(TROPICAL, tuple(d))


def is_quotient(p: Polynomial, a: TropValue, q: Polynomial) -> bool:
    """Exact check of p in (T + a) * q via the coefficient relations."""
    return divides_linearly(p, a, q)


def search_quotients(p: Polynomial, a: TropValue, *, deltas=(1, 2), max_changed: int = 2) -> list:
    """Bounded search for valid quotients near the maximal one.

    Perturbs up to ``max_changed`` coefficients of ``divide(p, a)`` to
    lowered values (exponent minus each delta, and zero) and filters by
    :func:`is_quotient`; the maximal quotient itself is always included.
    Intended for exploring the quotient set at desk scale, not for
    characterizing it.
    """
    top = divide(p, a)
    found = {top}
    coeffs = list(top.coeffs)
    positions = range(len(coeffs))

    def candidates(i):
        c = coeffs[i]
        out = []
        if not c.is_zero:
            out.extend(TropValue(c.exponent - Fraction(d)) for d in deltas)
        out.append(TropValue.zero())
        return out

    for count in range(1, min(max_changed, len(coeffs)) + 1):
        for idxs in combinations(positions, count):
            pools = [candidates(i) for i in idxs]
            for combo in iter_product(*pools):
                trial = list(coeffs)
                for i, v in zip(idxs, combo):
                    trial[i] = v
                cand = Polynomial(TROPICAL, tuple(trial))
                if cand.degree == top.degree and is_quotient(p, a, cand):
                    found.add(cand)
    return sorted(found, key=poly_sort_key)


def render_newton_svg(p: Polynomial, polygon: NewtonPolygon | None = None) -> str:
    """Draw the polygon: finite points, the hull polyline, axes labeled i
    and rho(i); zero coefficients are annotated in the margin."""
    if polygon is None:
        polygon = newton_polygon(p)
    finite = [(i, -c.exponent) for i, c in enumerate(p.coeffs) if not c.is_zero]
    missing = [i for i, c in enumerate(p.coeffs) if c.is_zero]
    hull = [(i, h) for i, h in polygon.vertices if h is not None]

    xs = [float(i) for i, _ in finite]
    ys = [float(h) for _, h in finite]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi += 1
    if y_hi == y_lo:
        y_hi += 1

    width, height, margin = 420.0, 300.0, 50.0

    def sx(x):
        return margin + (float(x) - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def sy(y):
        return height - margin - (float(y) - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<line x1="{margin:.1f}" y1="{height - margin:.1f}" x2="{width - margin / 2:.1f}" '
        f'y2="{height - margin:.1f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{margin:.1f}" y1="{height - margin:.1f}" x2="{margin:.1f}" '
        f'y2="{margin / 2:.1f}" stroke="black" stroke-width="1"/>',
        f'<text x="{width - margin / 2 + 4:.1f}" y="{height - margin + 4:.1f}" '
        f'font-size="12">i</text>',
        f'<text x="{margin - 10:.1f}" y="{margin / 2 - 4:.1f}" font-size="12">ρ(i)</text>',
    ]
    path = " ".join(f"{sx(i):.2f},{sy(h):.2f}" for i, h in hull)
    lines.append(f'<polyline points="{path}" fill="none" stroke="black" stroke-width="2"/>')
    for i, h in finite:
        lines.append(f'<circle cx="{sx(i):.2f}" cy="{sy(h):.2f}" r="3" fill="black"/>')
        lines.append(
            f'<text x="{sx(i) + 5:.2f}" y="{sy(h) - 5:.2f}" font-size="10">({i}, {h})</text>')
    for k, i in enumerate(missing):
        lines.append(
            f'<text x="{margin:.1f}" y="{12 + 12 * k:.1f}" font-size="10">'
            f'c_{i} = zero (height +inf)</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
