"""Exact number types: rationals, rational polynomials, quadratic surds.

Everything downstream is decided by signs of exact quantities, so no floats
appear anywhere in this package's arithmetic. Rationals are stdlib
``fractions.Fraction`` (normalized form, positive denominator, structural
equality). On top of that this module supplies

* :class:`Polynomial` -- univariate polynomials with rational coefficients,
  dense ascending representation with trailing zeros stripped;
* :class:`Surd` -- numbers of the form ``rat + coef*sqrt(rad)`` with a
  square-free integer radicand, enough to handle quadratic irrationalities
  like ``sqrt(n**2 - 1)`` exactly;
* :func:`quadratic_roots` -- exact roots of a rational quadratic as surds.

General algebraic-number arithmetic is deliberately not built: all surds in a
computation share a single radicand, and mixing incommensurable radicands
raises :class:`~fanoslope.errors.IncomparableRadicands`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import AllCoefficientsZero, IncomparableRadicands

Rational = Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "Surd",
    "compare",
    "quadratic_roots",
    "render_value",
]


def _squarefree_decompose(m):
    """Write m = s*s*k with k square-free; return (s, k). m must be >= 0."""
    if m < 0:
        raise ValueError("radicand must be non-negative")
    s, k = 1, 1
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            count = 0
            while rest % d == 0:
                rest //= d
                count += 1
            s *= d ** (count // 2)
            if count % 2:
                k *= d
        d += 1 if d == 2 else 2
    return s, k * rest


def _as_fraction(value):
    if isinstance(value, _RationalABC):
        return Fraction(value)
    return None


class Surd:
    """A real number ``rat + coef * sqrt(rad)`` with exact arithmetic.

    ``rad`` is kept square-free and ``rad = 0``, ``coef = 0`` is the canonical
    form of a rational value, so structural equality is semantic equality.
    Instances are immutable.
    """

    __slots__ = ("rat", "coef", "rad")

    def __init__(self, rat=0, coef=0, rad=0):
        rat = Fraction(rat)
        coef = Fraction(coef)
        if not isinstance(rad, int):
            raise TypeError("radicand must be an int")
        if rad < 0:
            raise ValueError("radicand must be non-negative")
        if coef != 0 and rad != 0:
            square, rad = _squarefree_decompose(rad)
            coef *= square
            if rad == 1:
                rat += coef
                coef = Fraction(0)
                rad = 0
        else:
            coef = Fraction(0)
            rad = 0
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "rad", rad)

    def __setattr__(self, name, value):
        raise AttributeError("Surd instances are immutable")

    @classmethod
    def sqrt(cls, value):
        """Exact square root of a non-negative rational, as a Surd."""
        v = Fraction(value)
        if v < 0:
            raise ValueError("cannot take the square root of a negative number")
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, v.denominator), v.numerator * v.denominator)

    @property
    def is_rational(self):
        return self.coef == 0

    def as_fraction(self):
        """The value as a Fraction; raises ValueError if irrational."""
        if self.coef != 0:
            raise ValueError("surd is irrational")
        return self.rat

    def sign(self):
        """Exact sign: -1, 0, or 1."""
        a, b, m = self.rat, self.coef, self.rad
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # Opposite signs: compare a^2 with b^2*m. Equality would force
        # sqrt(m) rational, impossible for square-free m >= 2.
        left, right = a * a, b * b * m
        if a > 0:
            return 1 if left > right else -1
        return 1 if right > left else -1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Surd):
            return other
        frac = _as_fraction(other)
        if frac is not None:
            return Surd(frac)
        return None

    def _joint_rad(self, other):
        if self.coef == 0:
            return other.rad
        if other.coef == 0:
            return self.rad
        if self.rad != other.rad:
            raise IncomparableRadicands(
                f"cannot combine sqrt({self.rad}) with sqrt({other.rad})"
            )
        return self.rad

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rad = self._joint_rad(other)
        return Surd(self.rat + other.rat, self.coef + other.coef, rad)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.rat, -self.coef, self.rad)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rad = self._joint_rad(other)
        rat = self.rat * other.rat + self.coef * other.coef * rad
        coef = self.rat * other.coef + self.coef * other.rat
        return Surd(rat, coef, rad)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.sign() == 0:
            raise ZeroDivisionError("division by zero surd")
        if other.coef == 0:
            return Surd(self.rat / other.rat, self.coef / other.rat, self.rad)
        # 1/(a + b*sqrt(m)) = (a - b*sqrt(m)) / (a^2 - b^2*m)
        norm = other.rat * other.rat - other.coef * other.coef * other.rad
        inverse = Surd(other.rat / norm, -other.coef / norm, other.rad)
        return self * inverse

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (
                self.rat == other.rat
                and self.coef == other.coef
                and self.rad == other.rad
            )
        frac = _as_fraction(other)
        if frac is not None:
            return self.coef == 0 and self.rat == frac
        return NotImplemented

    def __hash__(self):
        if self.coef == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.rad))

    def _compare(self, other, op):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return op((self - other).sign(), 0)

    def __lt__(self, other):
        return self._compare(other, lambda s, z: s < z)

    def __le__(self, other):
        return self._compare(other, lambda s, z: s <= z)

    def __gt__(self, other):
        return self._compare(other, lambda s, z: s > z)

    def __ge__(self, other):
        return self._compare(other, lambda s, z: s >= z)

    def __float__(self):
        return float(self.rat) + float(self.coef) * math.sqrt(self.rad)

    def __repr__(self):
        return f"Surd({self.rat!r}, {self.coef!r}, {self.rad!r})"

    def __str__(self):
        if self.coef == 0:
            return str(self.rat)
        root = f"sqrt({self.rad})"
        if self.coef == 1:
            radical = root
        elif self.coef == -1:
            radical = f"-{root}"
        else:
            radical = f"{self.coef}*{root}"
        if self.rat == 0:
            return radical
        joiner = "+" if self.coef > 0 else "-"
        magnitude = radical.lstrip("-") if self.coef < 0 else radical
        return f"{self.rat} {joiner} {magnitude}"


def compare(left, right):
    """Exact three-way comparison of rationals and surds: -1, 0, or 1.

    Both arguments may be int, Fraction, or Surd. Comparing two irrational
    surds with different radicands raises IncomparableRadicands; every chain
    of rules in this package stays inside a single quadratic field, so that
    situation signals a modelling mistake rather than a gap to work around.
    """
    if not isinstance(left, Surd):
        left = Surd(Fraction(left))
    return (left - right).sign()


def render_value(value):
    """Human-readable exact rendering: '18/5', '3', '2*sqrt(2)', ..."""
    if isinstance(value, Surd):
        return str(value)
    return str(Fraction(value))


class Polynomial:
    """Univariate polynomial over Fraction, dense ascending coefficients.

    The zero polynomial is the empty coefficient tuple and reports degree -1.
    Instances are immutable; arithmetic returns new objects. Evaluation uses
    Horner's scheme and accepts rational or Surd points, returning whatever
    type the point arithmetic produces.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial instances are immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, value):
        return cls([Fraction(value)])

    @classmethod
    def monomial(cls, power, coefficient=1):
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls([Fraction(0)] * power + [Fraction(coefficient)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, power):
        """Coefficient of x**power (zero beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        frac = _as_fraction(other)
        if frac is not None:
            return Polynomial([c * frac for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, point):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def differentiate(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def integrate_from_zero(self):
        """The antiderivative with zero constant term."""
        return Polynomial(
            [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.format()

    def format(self, variable="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coefficient(power)
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                x = variable if power == 1 else f"{variable}^{power}"
                body = x if abs(c) == 1 else f"{abs(c)}*{x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def quadratic_roots(a, b, c):
    """Exact real roots of a*x**2 + b*x + c, ascending, as Surds.

    Returns a tuple of zero, one, or two roots. Degenerate cases follow the
    usual conventions: a linear equation has its single root, a non-zero
    constant has none, and the identically zero equation raises
    AllCoefficientsZero because every number would qualify.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        if b == 0:
            if c == 0:
                raise AllCoefficientsZero("every number solves 0 = 0")
            return ()
        return (Surd(-c / b),)
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    if disc == 0:
        return (Surd(-b / (2 * a)),)
    root = Surd.sqrt(disc)
    first = (Surd(-b) - root) / (2 * a)
    second = (Surd(-b) + root) / (2 * a)
    if compare(first, second) > 0:
        first, second = second, first
    return (first, second)
