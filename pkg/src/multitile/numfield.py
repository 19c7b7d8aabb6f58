"""Exact arithmetic in a real algebraic number field Q(a).

An element is stored as its coordinate vector ``(x_0, ..., x_{d-1})`` with
respect to the power basis ``1, a, ..., a^{d-1}``, using exact
arbitrary-precision rationals (``gmpy2.mpq``) for the coordinates.  Because the defining polynomial is assumed to be the
minimal polynomial of ``a``, equality and zero tests are purely coordinate
based.  Ordering uses the real embedding fixed by an isolating interval for
``a``; the interval is refined by bisection only to resolve signs, never to
decide equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from gmpy2 import mpq as Rational
from gmpy2 import mpz

__all__ = [
    "FieldError",
    "FieldMismatchError",
    "ReducibleMinpolyError",
    "FieldSpec",
    "FieldElement",
    "QQ",
    "Rational",
    "parse_rational",
    "format_rational",
]

Scalar = Union[int, Fraction, Rational]
_SCALARS = (int, Fraction, type(Rational(0)), type(mpz(0)))

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class FieldError(ValueError):
    """Invalid field specification or element."""


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


class ReducibleMinpolyError(FieldError):
    """The defining polynomial turned out not to be irreducible."""


def parse_rational(text) -> Rational:
    """Parse a ``"p/q"`` or ``"p"`` literal (optional leading minus)."""
    if isinstance(text, bool):
        raise FieldError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Rational(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise FieldError(f"not a rational literal: {text!r}")
    q = Rational(text.strip())
    return q


def format_rational(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --- dense polynomial helpers over Q, lowest degree first ------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_eval(p: Sequence, x) -> Rational:
    acc = Rational(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Rational(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        coef = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        a.pop()
        _trim(a)
    return q, a


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Rational(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Rational(c) for c in out])


_DIVISOR_SEARCH_LIMIT = 10 ** 12


def _divisors(n: int) -> list:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _rational_root(coeffs: Sequence):
    """Some rational root of the polynomial, or None (rational root theorem).

    Gives up (returns None) when the integer coefficients are too large to
    factor by trial division; the lazy checks still apply then.
    """
    if coeffs[0] == 0:
        return Rational(0)
    scale = math.lcm(*(int(c.denominator) for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    if max(abs(ints[0]), abs(ints[-1])) > _DIVISOR_SEARCH_LIMIT:
        return None
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Rational(p, q), Rational(-p, q)):
                if _poly_eval(coeffs, cand) == 0:
                    return cand
    return None


def _interval_mul(a: tuple, b: tuple) -> tuple:
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(a) with ``a`` the root of ``minpoly`` inside ``root_interval``.

    ``minpoly`` holds the d+1 coefficients of the monic polynomial A, constant
    term first.  Rational roots are rejected up front, which settles
    irreducibility for d <= 3; any other nontrivial factor is reported lazily
    by :meth:`FieldElement.inverse`.  Uniqueness of the root inside the
    interval is the caller's responsibility.
    """

    minpoly: tuple
    root_interval: tuple
    name: str = field(default="a", compare=False)

    def __post_init__(self):
        coeffs = tuple(Rational(c) for c in self.minpoly)
        lo, hi = (Rational(c) for c in self.root_interval)
        object.__setattr__(self, "minpoly", coeffs)
        object.__setattr__(self, "root_interval", (lo, hi))
        if len(coeffs) < 2:
            raise FieldError("minpoly must have degree >= 1")
        if coeffs[-1] != 1:
            raise FieldError("minpoly must be monic")
        if not lo < hi:
            raise FieldError("root_interval must satisfy lo < hi")
        if _poly_eval(coeffs, lo) * _poly_eval(coeffs, hi) >= 0:
            raise FieldError("minpoly must change sign strictly across root_interval")
        if len(coeffs) > 2:
            root = _rational_root(coeffs)
            if root is not None:
                raise ReducibleMinpolyError(f"minpoly has the rational root {root}")

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @classmethod
    def quadratic(cls, n: int) -> "FieldSpec":
        """Q(sqrt(n)) for a non-square positive integer n."""
        r = math.isqrt(n)
        if r * r == n or n <= 0:
            raise FieldError(f"{n} is not a positive non-square")
        return cls((-n, 0, 1), (r, r + 1), name=f"sqrt{n}")

    def __call__(self, *coords: Scalar) -> "FieldElement":
        return self.element(coords)

    def element(self, coords: Iterable[Scalar]) -> "FieldElement":
        coords = [Rational(c) for c in coords]
        if len(coords) > self.degree:
            raise FieldError(f"expected at most {self.degree} coordinates")
        coords += [Rational(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def zero(self) -> "FieldElement":
        return self.element(())

    def one(self) -> "FieldElement":
        return self.element((1,))

    def gen(self) -> "FieldElement":
        """The generator a itself."""
        if self.degree == 1:
            return self.element((-self.minpoly[0],))
        return self.element((0, 1))

    def root_enclosure(self, bits: int) -> tuple:
        """An interval of width <= 2**-bits around a (cached, pure)."""
        return _refine_root(self, bits)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "minpoly": [format_rational(c) for c in self.minpoly],
            "root_interval": [format_rational(c) for c in self.root_interval],
        }

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if not isinstance(obj, dict):
            raise FieldError("field: expected an object")
        try:
            minpoly = [parse_rational(c) for c in obj["minpoly"]]
            interval = [parse_rational(c) for c in obj["root_interval"]]
        except KeyError as exc:
            raise FieldError(f"field: missing key {exc.args[0]!r}") from None
        except TypeError:
            raise FieldError("field: minpoly/root_interval must be lists") from None
        if len(interval) != 2:
            raise FieldError("field.root_interval: expected two endpoints")
        if "degree" in obj and obj["degree"] != len(minpoly) - 1:
            raise FieldError("field.degree does not match minpoly length")
        return cls(tuple(minpoly), tuple(interval))


QQ = FieldSpec((0, 1), (-1, 1), name="Q")


@lru_cache(maxsize=None)
def _refine_root(spec: FieldSpec, bits: int) -> tuple:
    lo, hi = spec.root_interval
    if bits > 32:
        lo, hi = _refine_root(spec, bits // 2)
    target = Rational(1, 2 ** bits)
    A = spec.minpoly
    f_lo = _poly_eval(A, lo)
    while hi - lo > target:
        mid = (lo + hi) / 2
        f_mid = _poly_eval(A, mid)
        if f_mid == 0:
            if spec.degree > 1:
                raise ReducibleMinpolyError(f"minpoly has the rational root {mid}")
            return mid, mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return lo, hi


class FieldElement:
    """An immutable element of a :class:`FieldSpec`.

    Supports ``+ - * /``, unary minus, comparisons (via the real embedding),
    and mixing with ``int``, ``Fraction`` or ``mpq`` operands.
    """

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: FieldSpec, coords: tuple):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("operands belong to different fields")
            return other
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return self.field.element((other,))
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return FieldElement(self.field, tuple(x * other for x in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        a, b = self.coords, other.coords
        if d == 1:
            return FieldElement(self.field, (a[0] * b[0],))
        A = self.field.minpoly
        if d == 2:
            # a^2 = -A0 - A1*a
            hi = a[1] * b[1]
            mid = a[0] * b[1] + a[1] * b[0]
            return FieldElement(self.field, (a[0] * b[0] - hi * A[0], mid - hi * A[1]))
        prod = _poly_mul(a, b)
        # reduce modulo the monic A, highest degree first
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i in range(d):
                    prod[k - d + i] -= c * A[i]
        prod = prod[:d] + [Rational(0)] * (d - len(prod))
        return FieldElement(self.field, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm on (x(X), A(X))."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return self.field.element((1 / self.coords[0],))
        A = list(self.field.minpoly)
        # invariant: s_i * p == r_i (mod A)
        r0, r1 = A, _trim(list(self.coords))
        s0, s1 = [], [Rational(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not r1:
                raise ReducibleMinpolyError(
                    "minimal polynomial is reducible: nontrivial gcd with "
                    f"{[format_rational(c) for c in self.coords]}"
                )
        c = r1[0]
        inv = [x / c for x in s1]
        _, rem = _poly_divmod(inv, A)
        return self.field.element(rem)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.field, tuple(x / other for x in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- exact predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coords[0].denominator == 1

    def rational_ratio(self, other: "FieldElement"):
        """``self / other`` if that quotient is rational, else ``None``.

        Decided on coordinates alone: the quotient is the rational r iff
        ``self == r * other``.  ``other`` must be nonzero.
        """
        other = self._coerce(other)
        r = None
        for x, y in zip(self.coords, other.coords):
            if y == 0:
                if x != 0:
                    return None
            elif r is None:
                r = x / y
            elif x != r * y:
                return None
        if r is None:
            raise ZeroDivisionError("ratio with zero denominator")
        return r

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords[0]) if self.is_rational() else hash((self.field, self.coords))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- real embedding -------------------------------------------------------

    def enclosure(self, bits: int) -> tuple:
        """A closed rational interval containing the embedded value."""
        if self.is_rational():
            return self.coords[0], self.coords[0]
        a_int = self.field.root_enclosure(bits)
        acc = (self.coords[-1], self.coords[-1])
        for c in reversed(self.coords[:-1]):
            lo, hi = _interval_mul(acc, a_int)
            acc = (lo + c, hi + c)
        return acc

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coords[0] > 0 else -1
        bits = 32
        while True:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        if self.is_rational():
            return int(math.floor(self.coords[0]))
        bits = 32
        while True:
            lo, hi = self.enclosure(bits)
            m = int(math.floor(lo))
            if math.floor(hi) == m:
                return m
            bits *= 2

    def ceil(self) -> int:
        return -((-self).floor())

    def approx(self, eps) -> Rational:
        """A rational within ``eps`` of the embedded value."""
        eps = Rational(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        if self.is_rational():
            return self.coords[0]
        bits = 32
        while True:
            lo, hi = self.enclosure(bits)
            if hi - lo <= 2 * eps:
                return (lo + hi) / 2
            bits *= 2

    def __float__(self):
        return float(self.approx(Rational(1, 2 ** 60)))

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- io -----------------------------------------------------------------

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coords]

    @classmethod
    def from_json(cls, spec: FieldSpec, obj) -> "FieldElement":
        if isinstance(obj, (str, int)) and not isinstance(obj, bool):
            return spec.element((parse_rational(obj),))
        if not isinstance(obj, list) or len(obj) != spec.degree:
            raise FieldError(f"field element: expected a list of {spec.degree} rationals, got {obj!r}")
        return spec.element(parse_rational(c) for c in obj)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                power = self.field.name if i == 1 else f"{self.field.name}^{i}"
                terms.append(power if c == 1 else f"({format_rational(c)})*{power}")
        return " + ".join(terms) if terms else "0"
