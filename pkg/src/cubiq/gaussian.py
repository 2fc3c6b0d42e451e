"""
Gaussian integers
Exact arithmetic, Euclidean division, gcd, factorization and squarefree splitting in Z[i]
"""

import re
from dataclasses import dataclass
from math import isqrt, prod

from sympy import factorint

from .errors import InvalidInput, ZeroDivisorError


@dataclass(frozen=True, slots=True)
class GInt:
    """A Gaussian integer re + im*i."""

    re: int
    im: int = 0

    @classmethod
    def of(cls, value):
        """Coerce an int or GInt to a GInt."""
        if isinstance(value, GInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to GInt")

    @property
    def norm(self):
        return self.re * self.re + self.im * self.im

    def conjugate(self):
        return GInt(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_unit(self):
        return self.norm == 1

    def __add__(self, other):
        if not isinstance(other, (GInt, int)):
            return NotImplemented
        other = GInt.of(other)
        return GInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GInt, int)):
            return NotImplemented
        other = GInt.of(other)
        return GInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GInt.of(other) - self

    def __neg__(self):
        return GInt(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (GInt, int)):
            return NotImplemented
        other = GInt.of(other)
        return GInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise InvalidInput("negative powers are not Gaussian integers")
        result = GInt(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        return format_gint(self)


ONE = GInt(1, 0)
I = GInt(0, 1)

# Multiplying by these in order walks the four associates of a number
UNITS = (ONE, I, GInt(-1, 0), GInt(0, -1))


def _round_half_up(num, den):
    """Nearest integer to num/den (den > 0), ties toward +infinity."""
    return (2 * num + den) // (2 * den)


def g_divmod(a, b):
    """
    Euclidean division a = b*q + r with norm(r) <= norm(b)/2

    Args:
        a: dividend
        b: nonzero divisor

    Returns:
        (q, r) where q rounds each coordinate of a/b to the nearest integer
    """
    a, b = GInt.of(a), GInt.of(b)
    n = b.norm
    if n == 0:
        raise ZeroDivisorError("Gaussian division by zero")
    num = a * b.conjugate()
    q = GInt(_round_half_up(num.re, n), _round_half_up(num.im, n))
    return q, a - b * q


def g_divides(d, z):
    """True when d divides z in Z[i]. Zero divides only zero."""
    d, z = GInt.of(d), GInt.of(z)
    if d.is_zero():
        return z.is_zero()
    return g_divmod(z, d)[1].is_zero()


def g_exact_div(z, d):
    """Quotient z/d, which must be exact."""
    q, r = g_divmod(z, d)
    if not r.is_zero():
        raise InvalidInput(f"{format_gint(GInt.of(d))} does not divide {format_gint(GInt.of(z))}")
    return q


def g_canonical(z):
    """The associate of z with re > 0 and im >= 0 (zero maps to zero)."""
    z = GInt.of(z)
    if z.is_zero():
        return z
    for unit in UNITS:
        w = z * unit
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("no first-quadrant associate")


def g_associates(a, b):
    """True when a and b differ by a unit factor."""
    a, b = GInt.of(a), GInt.of(b)
    return any(a * unit == b for unit in UNITS)


def g_gcd(a, b):
    """
    Generator of the ideal (a, b), canonicalized to the first quadrant

    Args:
        a, b: Gaussian integers, not both zero

    Returns:
        gcd with re > 0 and im >= 0
    """
    a, b = GInt.of(a), GInt.of(b)
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, g_divmod(a, b)[1]
    return g_canonical(a)


def _sqrt_minus_one(p):
    # exhaustive search keeps the split deterministic
    for x in range(1, p):
        if (x * x + 1) % p == 0:
            return x
    raise InvalidInput(f"-1 is not a square modulo {p}")


def _split_prime(p):
    """Canonical Gaussian prime over p = 1 mod 4, with re > im > 0."""
    pi = g_gcd(GInt(p), GInt(_sqrt_minus_one(p), 1))
    for unit in UNITS:
        w = pi * unit
        if w.re > abs(w.im) > 0:
            return w if w.im > 0 else w.conjugate()
    raise AssertionError(f"no canonical prime above {p}")


def _divide_out(z, prime):
    count = 0
    while True:
        q, r = g_divmod(z, prime)
        if not r.is_zero():
            return z, count
        z, count = q, count + 1


def g_factor(z):
    """
    Factor a nonzero Gaussian integer into canonical Gaussian primes

    Args:
        z: nonzero Gaussian integer

    Returns:
        (unit, [(prime, exponent), ...]) with z = unit * prod(prime**exponent),
        ordered by the rational prime below each factor
    """
    z = GInt.of(z)
    if z.is_zero():
        raise InvalidInput("cannot factor zero")
    rest = z
    factors = []
    for p in sorted(factorint(z.norm)):
        if p == 2:
            candidates = [GInt(1, 1)]
        elif p % 4 == 3:
            candidates = [GInt(p)]
        else:
            upper = _split_prime(p)
            candidates = [upper, upper.conjugate()]
        for prime in candidates:
            rest, exponent = _divide_out(rest, prime)
            if exponent:
                factors.append((prime, exponent))
    if not rest.is_unit():
        raise AssertionError(f"factorization of {z} left a non-unit {rest}")
    return rest, factors


def g_squarefree_split(z):
    """
    Write z = u * s**2 * t with t squarefree

    Args:
        z: nonzero Gaussian integer

    Returns:
        (s, t, u): t a product of distinct canonical primes, u a unit
    """
    z = GInt.of(z)
    _, factors = g_factor(z)
    s = prod((prime ** (e // 2) for prime, e in factors), start=ONE)
    t = prod((prime ** (e % 2) for prime, e in factors), start=ONE)
    u = g_exact_div(z, s * s * t)
    return s, t, u


def two_square_count(d):
    """Number of (x, y) in Z^2 with x^2 + y^2 = d, from the factorization of d."""
    if d < 1:
        raise InvalidInput("d must be positive")
    count = 4
    for p, e in factorint(d).items():
        if p % 4 == 3 and e % 2:
            return 0
        if p % 4 == 1:
            count *= e + 1
    return count


def two_square_representations(d):
    """All (x, y) with x^2 + y^2 = d, by enumeration."""
    reps = []
    bound = isqrt(d)
    for x in range(-bound, bound + 1):
        rest = d - x * x
        y = isqrt(rest)
        if y * y == rest:
            reps.append((x, y))
            if y:
                reps.append((x, -y))
    return sorted(reps)


_GINT_RE = re.compile(r"^(?:(?P<re>[+-]?\d+)(?=[+-]|$))?(?:(?P<im>[+-]?\d*)i)?$")


def parse_gint(text):
    """Parse "a+bi", "a-bi", "a", "bi" or "i" into a GInt."""
    text = text.strip().replace(" ", "")
    match = _GINT_RE.match(text)
    if not text or not match:
        raise InvalidInput(f"not a Gaussian integer: {text!r}")
    real = int(match.group("re")) if match.group("re") else 0
    imag = match.group("im")
    if imag is None:
        imaginary = 0
    elif imag in ("", "+"):
        imaginary = 1
    elif imag == "-":
        imaginary = -1
    else:
        imaginary = int(imag)
    return GInt(real, imaginary)


def format_gint(z):
    """Serialize as "a+bi" / "a-bi", or just "a" when the imaginary part is 0."""
    if z.im == 0:
        return str(z.re)
    return f"{z.re}{z.im:+d}i"
