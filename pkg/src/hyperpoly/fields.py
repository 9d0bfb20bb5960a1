"""Exact elements of the tropical and the sign hyperfield.

Tropical values live in logarithmic coordinates: ``TropValue.log(e)``
denotes the positive real exp(e) for an exact rational exponent ``e``,
and ``TropValue.zero()`` is the absorbing zero.  The base of the
logarithm is irrelevant (everything below only adds and compares
exponents), so all computation is exact rational arithmetic; this is
what keeps Newton-polygon slopes and division results closed under the
algorithms in :mod:`hyperpoly.tropical`.

Sign values are the plain integers -1, 0 and 1; integer multiplication
restricted to them is already the right product.

Hyperadditions are multi-valued.  The tropical sum of a list is either
a single value or the full interval [0, max], captured by
:class:`TropSubset`; the sign sum is one of {0}, {1}, {-1} or the whole
field, captured by a plain ``frozenset`` of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable

from .errors import EmptySumError

__all__ = [
    "TropValue",
    "TropSubset",
    "TROP_ZERO",
    "TROP_ONE",
    "trop_hyperadd",
    "trop_contains",
    "trop_hyperadd_subset",
    "SIGN_ELEMENTS",
    "SIGN_ALL",
    "sign_hyperadd",
    "sign_hyperadd_subset",
    "TropicalField",
    "SignField",
    "TROPICAL",
    "SIGN",
    "field_by_name",
]


@total_ordering
@dataclass(frozen=True)
class TropValue:
    """A tropical number: exp(exponent), or the zero when ``exponent`` is None.

    The total order puts zero below every finite value and orders finite
    values by exponent; multiplication adds exponents and is absorbed by
    zero.  Negation is the identity (every tropical number is its own
    additive inverse).
    """

    exponent: Fraction | None = None

    @classmethod
    def zero(cls) -> "TropValue":
        return cls(None)

    @classmethod
    def log(cls, e) -> "TropValue":
        return cls(Fraction(e))

    @classmethod
    def coerce(cls, x) -> "TropValue":
        """Accept a TropValue, None or "zero" (the zero), or any Fraction input."""
        if isinstance(x, TropValue):
            return x
        if x is None:
            return cls(None)
        if isinstance(x, str) and x.strip() == "zero":
            return cls(None)
        if isinstance(x, float):
            raise ValueError("tropical exponents must be exact rationals, not floats")
        return cls(Fraction(x))

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "TropValue") -> "TropValue":
        if self.exponent is None or other.exponent is None:
            return TropValue(None)
        return TropValue(self.exponent + other.exponent)

    def inv(self) -> "TropValue":
        if self.exponent is None:
            raise ZeroDivisionError("the tropical zero has no multiplicative inverse")
        return TropValue(-self.exponent)

    def __truediv__(self, other: "TropValue") -> "TropValue":
        return self * other.inv()

    def __pow__(self, k: int) -> "TropValue":
        if self.exponent is None:
            if k == 0:
                return TropValue(Fraction(0))
            if k < 0:
                raise ZeroDivisionError("negative power of the tropical zero")
            return TropValue(None)
        return TropValue(self.exponent * k)

    def __neg__(self) -> "TropValue":
        return self

    def __lt__(self, other: "TropValue") -> bool:
        if self.exponent is None:
            return other.exponent is not None
        if other.exponent is None:
            return False
        return self.exponent < other.exponent

    def sort_key(self):
        if self.exponent is None:
            return (0, Fraction(0))
        return (1, self.exponent)

    def __str__(self) -> str:
        return "zero" if self.exponent is None else str(self.exponent)

    def __repr__(self) -> str:
        return f"TropValue({self})"


TROP_ZERO = TropValue(None)
TROP_ONE = TropValue(Fraction(0))


@dataclass(frozen=True)
class TropSubset:
    """Value of a tropical hypersum: a singleton {top} or the interval [0, top].

    The two descriptions of {0} (singleton zero and degenerate interval)
    denote the same set; construction normalizes both to the interval
    form so that dataclass equality is set equality.
    """

    top: TropValue
    interval: bool

    def __post_init__(self):
        if self.top.is_zero and not self.interval:
            object.__setattr__(self, "interval", True)

    @classmethod
    def singleton(cls, v: TropValue) -> "TropSubset":
        return cls(v, False)

    @classmethod
    def closed_interval(cls, top: TropValue) -> "TropSubset":
        return cls(top, True)

    def contains(self, x: TropValue) -> bool:
        return x <= self.top if self.interval else x == self.top

    @property
    def contains_zero(self) -> bool:
        return self.interval or self.top.is_zero

    def scale(self, u: TropValue) -> "TropSubset":
        return TropSubset(self.top * u, self.interval)

    def __str__(self) -> str:
        return f"[0, {self.top}]" if self.interval else f"{{{self.top}}}"


def trop_hyperadd(values: Iterable[TropValue]) -> TropSubset:
    """Multi-valued sum over the tropical hyperfield.

    Returns the singleton {max} when the maximum is attained exactly
    once, and the interval [0, max] when it is attained at least twice.
    """
    vs = list(values)
    if not vs:
        raise EmptySumError("hyperaddition needs at least one summand")
    top = max(vs)
    repeated = sum(1 for v in vs if v == top) >= 2
    return TropSubset(top, repeated)


def trop_contains(c: TropValue, summands: Iterable[TropValue]) -> bool:
    """Membership c in the hypersum of ``summands``.

    Equivalent to: the maximum of {c} and the summands is attained at
    least twice, counting c itself.
    """
    vs = list(summands)
    if not vs:
        raise EmptySumError("hyperaddition needs at least one summand")
    top = max(vs)
    if c > top:
        return False
    if c == top:
        return True
    return sum(1 for v in vs if v == top) >= 2


def trop_hyperadd_subset(a: TropValue, s: TropSubset) -> TropSubset:
    """Union of a + d over all d in s, in closed form.

    For an interval [0, x] the union is {a} when a > x (a dominates every
    member) and [0, x] otherwise.
    """
    if not s.interval:
        return trop_hyperadd([a, s.top])
    if a > s.top:
        return TropSubset(a, False)
    return TropSubset(s.top, True)


SIGN_ELEMENTS = (-1, 0, 1)
SIGN_ALL = frozenset(SIGN_ELEMENTS)


def sign_hyperadd(values: Iterable[int]) -> frozenset:
    """Multi-valued sum over the sign hyperfield.

    {0} when all summands are zero, {s} when every summand lies in
    {0, s} for one nonzero sign s, and the whole field when both signs
    occur.
    """
    vs = list(values)
    if not vs:
        raise EmptySumError("hyperaddition needs at least one summand")
    has_pos = 1 in vs
    has_neg = -1 in vs
    if has_pos and has_neg:
        return SIGN_ALL
    if has_pos:
        return frozenset((1,))
    if has_neg:
        return frozenset((-1,))
    return frozenset((0,))


def sign_hyperadd_subset(a: int, s: frozenset) -> frozenset:
    """Union of a + d over all d in s."""
    out = frozenset()
    for d in s:
        out |= sign_hyperadd([a, d])
    return out


class TropicalField:
    """Operation table of the tropical hyperfield, in log coordinates."""

    name = "tropical"
    finite = False

    zero = TROP_ZERO
    one = TROP_ONE

    @staticmethod
    def is_zero(x: TropValue) -> bool:
        return x.is_zero

    @staticmethod
    def mul(a: TropValue, b: TropValue) -> TropValue:
        return a * b

    @staticmethod
    def neg(a: TropValue) -> TropValue:
        return a

    @staticmethod
    def inv(a: TropValue) -> TropValue:
        return a.inv()

    @staticmethod
    def pow(a: TropValue, k: int) -> TropValue:
        return a ** k

    @staticmethod
    def hyperadd(values) -> TropSubset:
        return trop_hyperadd(values)

    @staticmethod
    def hyperadd_subset(a, s) -> TropSubset:
        return trop_hyperadd_subset(a, s)

    @staticmethod
    def subset_contains(s: TropSubset, x: TropValue) -> bool:
        return s.contains(x)

    @staticmethod
    def subset_contains_zero(s: TropSubset) -> bool:
        return s.contains_zero

    @staticmethod
    def sort_key(x: TropValue):
        return x.sort_key()

    @staticmethod
    def format_element(x: TropValue) -> str:
        return str(x)

    @staticmethod
    def parse_element(text: str) -> TropValue:
        return TropValue.coerce(text.strip())

    @staticmethod
    def element_to_json(x: TropValue):
        return str(x)

    def __repr__(self):
        return "TROPICAL"


class SignField:
    """Operation table of the sign hyperfield on the integers -1, 0, 1."""

    name = "sign"
    finite = True

    zero = 0
    one = 1
    elements = SIGN_ELEMENTS

    @staticmethod
    def is_zero(x: int) -> bool:
        return x == 0

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a * b

    @staticmethod
    def neg(a: int) -> int:
        return -a

    @staticmethod
    def inv(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return a

    @staticmethod
    def pow(a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        # a in {1, -1}: only the parity of k matters
        return a if k % 2 else 1

    @staticmethod
    def hyperadd(values) -> frozenset:
        return sign_hyperadd(values)

    @staticmethod
    def hyperadd_subset(a, s) -> frozenset:
        return sign_hyperadd_subset(a, s)

    @staticmethod
    def subset_contains(s: frozenset, x: int) -> bool:
        return x in s

    @staticmethod
    def subset_contains_zero(s: frozenset) -> bool:
        return 0 in s

    @staticmethod
    def sort_key(x: int):
        return x

    @staticmethod
    def format_element(x: int) -> str:
        return str(x)

    @staticmethod
    def parse_element(text: str) -> int:
        v = int(text.strip())
        if v not in SIGN_ELEMENTS:
            raise ValueError(f"sign values are -1, 0 or 1, got {v}")
        return v

    @staticmethod
    def element_to_json(x: int):
        return x

    def __repr__(self):
        return "SIGN"


TROPICAL = TropicalField()
SIGN = SignField()

_FIELDS = {"tropical": TROPICAL, "sign": SIGN}


def field_by_name(name: str):
    try:
        return _FIELDS[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; use 'tropical' or 'sign'") from None
