"""
Hurwitz quaternions
Arithmetic and right-Euclidean number theory in the Hurwitz order, stored in doubled coordinates
"""

import itertools
import re
from dataclasses import dataclass
from math import gcd, isqrt

from sympy import divisor_sigma

from .config import HURWITZ_NORM_BUDGET, check_budget
from .errors import InvalidInput, NoDivisor, PDividesAlpha, ZeroDivisorError


@dataclass(frozen=True, slots=True)
class HQuat:
    """
    The quaternion (e0 + e1*i + e2*j + e3*k) / 2

    All four doubled coordinates share a parity: all even is a Lipschitz
    quaternion, all odd is a half-integer Hurwitz quaternion.
    """

    e0: int
    e1: int = 0
    e2: int = 0
    e3: int = 0

    def __post_init__(self):
        if (self.e0 - self.e1) % 2 or (self.e0 - self.e2) % 2 or (self.e0 - self.e3) % 2:
            raise InvalidInput(f"doubled coordinates {self.doubled()} do not share a parity")

    @classmethod
    def lipschitz(cls, a, b=0, c=0, d=0):
        """Build a + b*i + c*j + d*k from integer coefficients."""
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @classmethod
    def pure(cls, x, y, z):
        """The pure quaternion x*i + y*j + z*k."""
        return cls(0, 2 * x, 2 * y, 2 * z)

    @classmethod
    def of(cls, value):
        """Coerce an int, GInt or HQuat."""
        if isinstance(value, HQuat):
            return value
        if isinstance(value, int):
            return cls(2 * value, 0, 0, 0)
        if hasattr(value, "re") and hasattr(value, "im"):
            return cls(2 * value.re, 2 * value.im, 0, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to HQuat")

    def doubled(self):
        return (self.e0, self.e1, self.e2, self.e3)

    @property
    def norm(self):
        return (self.e0 ** 2 + self.e1 ** 2 + self.e2 ** 2 + self.e3 ** 2) // 4

    @property
    def trace(self):
        return self.e0

    @property
    def is_lipschitz(self):
        return self.e0 % 2 == 0

    def is_zero(self):
        return not any(self.doubled())

    def is_pure(self):
        return self.e0 == 0

    def coefficients(self):
        """Integer coefficients (a, b, c, d); only defined for Lipschitz quaternions."""
        if not self.is_lipschitz:
            raise InvalidInput(f"{format_hquat(self)} has half-integer coefficients")
        return tuple(e // 2 for e in self.doubled())

    def vector_part(self):
        """(b, c, d) of a pure Lipschitz quaternion b*i + c*j + d*k."""
        if not self.is_pure():
            raise InvalidInput(f"{format_hquat(self)} is not pure")
        return self.coefficients()[1:]

    def conjugate(self):
        return HQuat(self.e0, -self.e1, -self.e2, -self.e3)

    def __add__(self, other):
        if not isinstance(other, (HQuat, int)):
            return NotImplemented
        other = HQuat.of(other)
        return HQuat(*(x + y for x, y in zip(self.doubled(), other.doubled())))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (HQuat, int)):
            return NotImplemented
        other = HQuat.of(other)
        return HQuat(*(x - y for x, y in zip(self.doubled(), other.doubled())))

    def __rsub__(self, other):
        return HQuat.of(other) - self

    def __neg__(self):
        return HQuat(-self.e0, -self.e1, -self.e2, -self.e3)

    def __mul__(self, other):
        if isinstance(other, int):
            return HQuat(*(other * e for e in self.doubled()))
        if not isinstance(other, HQuat):
            return NotImplemented
        A, B, C, D = self.doubled()
        E, F, G, H = other.doubled()
        P = A * E - B * F - C * G - D * H
        Q = A * F + B * E + C * H - D * G
        R = A * G - B * H + C * E + D * F
        S = A * H + B * G - C * F + D * E
        # the Hurwitz order is closed under multiplication, so all four are even
        return HQuat(P // 2, Q // 2, R // 2, S // 2)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self):
        return format_hquat(self)


ONE = HQuat(2, 0, 0, 0)
I = HQuat(0, 2, 0, 0)
J = HQuat(0, 0, 2, 0)
K = HQuat(0, 0, 0, 2)
SIGMA = HQuat(1, 1, 1, 1)

# Fixed order: 1, i, j, k, -1, -i, -j, -k, then (±1±i±j±k)/2 with
# sign patterns in itertools.product((1, -1), repeat=4) order.
UNITS = (
    ONE, I, J, K, -ONE, -I, -J, -K,
    *(HQuat(*signs) for signs in itertools.product((1, -1), repeat=4)),
)


def hq_units():
    """The 24 Hurwitz units in their fixed order."""
    return list(UNITS)


def hq_mul(a, b):
    return HQuat.of(a) * HQuat.of(b)


def scalar_div(q, k):
    """
    Exact quotient q/k by a nonzero integer

    Returns:
        HQuat, or None when q/k is not in the Hurwitz order
    """
    if k == 0:
        raise ZeroDivisorError("quaternion division by zero")
    if any(e % k for e in q.doubled()):
        return None
    parts = [e // k for e in q.doubled()]
    if any((parts[0] - e) % 2 for e in parts[1:]):
        return None
    return HQuat(*parts)


def hq_divides_integer(a, p):
    """True when a/p lies in the Hurwitz order."""
    return scalar_div(a, p) is not None


def hq_left_divides(d, a):
    """True when a = d*x for some Hurwitz x."""
    if d.is_zero():
        return a.is_zero()
    return scalar_div(d.conjugate() * a, d.norm) is not None


def hq_right_divides(d, a):
    """True when a = x*d for some Hurwitz x."""
    if d.is_zero():
        return a.is_zero()
    return scalar_div(a * d.conjugate(), d.norm) is not None


def _nearest_integer(num, den):
    # ties toward +infinity
    return (2 * num + den) // (2 * den)


def hq_divmod_right(a, b):
    """
    Right-Euclidean division a = b*w + r with norm(r) < norm(b)

    The quotient is the Hurwitz point nearest to b^-1 a: the better of the
    nearest integer point and the nearest half-odd point, the integer point
    winning a tie.

    Args:
        a: dividend
        b: nonzero divisor

    Returns:
        (w, r)
    """
    a, b = HQuat.of(a), HQuat.of(b)
    n = b.norm
    if n == 0:
        raise ZeroDivisorError("quaternion division by zero")
    # b^-1 a = conj(b) a / n, whose doubled coordinates are num/n
    num = (b.conjugate() * a).doubled()
    whole = tuple(2 * _nearest_integer(x, 2 * n) for x in num)
    # the nearest point of Z + 1/2 is floor(x) + 1/2 (an exact integer x ties upward)
    half = tuple(2 * (x // (2 * n)) + 1 for x in num)

    def distance(candidate):
        return sum((c * n - x) ** 2 for c, x in zip(candidate, num))

    w = HQuat(*(whole if distance(whole) <= distance(half) else half))
    return w, a - b * w


def hq_right_associates(a):
    """a*u for each of the 24 units, in unit order."""
    return [a * u for u in UNITS]


def hq_canonical_right(a):
    """The right associate with the lexicographically largest doubled tuple."""
    return max(hq_right_associates(a), key=HQuat.doubled)


def hq_gcd_right_ideal(a, b):
    """
    Generator of the right ideal aE + bE

    Args:
        a, b: quaternions, not both zero

    Returns:
        canonical right associate of the generator; it left-divides a and b
    """
    a, b = HQuat.of(a), HQuat.of(b)
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd of two zero quaternions is undefined")
    while not b.is_zero():
        a, b = b, hq_divmod_right(a, b)[1]
    return hq_canonical_right(a)


def hq_left_divisor_norm_p(a, p):
    """
    Left divisor of norm p, unique up to right association

    For p = 2 only a Lipschitz quotient a/2 is rejected: every quaternion of
    norm 2 is a right associate of 1+i, so 2*sigma still has a unique answer.

    Args:
        a: quaternion with p | norm(a) and p not dividing a
        p: rational prime

    Returns:
        canonical pi with norm(pi) = p and a = pi * a'
    """
    a = HQuat.of(a)
    if a.norm % p:
        raise NoDivisor(f"{p} does not divide norm {a.norm} of {format_hquat(a)}")
    quotient = scalar_div(a, p)
    if quotient is not None and (p != 2 or quotient.is_lipschitz):
        raise PDividesAlpha(f"{p} divides {format_hquat(a)}")
    if quotient is not None:
        # a = 2 * (half-odd), and gcd(a, 2) is 2 itself
        return hq_canonical_right(ONE + I)
    pi = hq_gcd_right_ideal(a, p)
    if pi.norm != p:
        raise AssertionError(f"gcd({format_hquat(a)}, {p}) has norm {pi.norm}")
    return pi


def hq_lipschitz_right_associate(a):
    """
    First right associate a*eps with integer coefficients

    Returns:
        (a * eps, eps) with eps the first unit in UNITS that works
    """
    a = HQuat.of(a)
    if a.is_zero():
        raise InvalidInput("zero has no Lipschitz associate")
    for eps in UNITS:
        candidate = a * eps
        if candidate.is_lipschitz:
            return candidate, eps
    raise AssertionError(f"no Lipschitz associate of {format_hquat(a)}")


@dataclass(frozen=True, slots=True)
class LipschitzFlag:
    is_lipschitz: bool
    is_primitive: bool


def lipschitz_flag(a):
    if not a.is_lipschitz:
        return LipschitzFlag(False, False)
    return LipschitzFlag(True, gcd(*a.coefficients()) == 1)


def hq_enumerate_norm(n):
    """
    All Hurwitz quaternions of norm n

    Args:
        n: positive integer within the Hurwitz enumeration budget

    Returns:
        list of HQuat sorted by doubled tuple, of length 24 * sigma_odd(n)
    """
    if n < 1:
        raise InvalidInput("norm must be positive")
    check_budget(n, HURWITZ_NORM_BUDGET, "Hurwitz enumeration norm")
    target = 4 * n
    found = []
    bound = isqrt(target)
    for e0 in range(-bound, bound + 1):
        r0 = target - e0 * e0
        b1 = isqrt(r0)
        for e1 in range(-b1, b1 + 1):
            if (e1 - e0) % 2:
                continue
            r1 = r0 - e1 * e1
            b2 = isqrt(r1)
            for e2 in range(-b2, b2 + 1):
                if (e2 - e0) % 2:
                    continue
                r2 = r1 - e2 * e2
                e3 = isqrt(r2)
                if e3 * e3 != r2 or (e3 - e0) % 2:
                    continue
                found.append(HQuat(e0, e1, e2, e3))
                if e3:
                    found.append(HQuat(e0, e1, e2, -e3))
    return sorted(found, key=HQuat.doubled)


def sigma_odd(n):
    """Sum of the odd positive divisors of n."""
    while n % 2 == 0:
        n //= 2
    return int(divisor_sigma(n))


def right_coprime_count(pi1, p, l):
    """Number of alpha with norm p**l such that p does not divide alpha * pi1."""
    return sum(1 for alpha in hq_enumerate_norm(p ** l) if not hq_divides_integer(alpha * pi1, p))


_TERM_RE = re.compile(r"([+-]?)(\d*)(/2)?([ijk]?)")


def parse_hquat(text):
    """
    Parse "m+ni+pj+qk" with integer or "e/2" coefficients

    Terms may be omitted or reordered; "i" alone means coefficient 1.
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise InvalidInput("empty quaternion")
    doubled = [0, 0, 0, 0]
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise InvalidInput(f"not a quaternion: {text!r}")
        sign, digits, halved, unit = match.groups()
        if not digits and not unit:
            raise InvalidInput(f"not a quaternion: {text!r}")
        value = int(digits) if digits else 1
        value = value if halved else 2 * value
        doubled["_ijk".index(unit or "_")] += -value if sign == "-" else value
        pos = match.end()
    return HQuat(*doubled)


def _format_coefficient(e):
    return str(e // 2) if e % 2 == 0 else f"{e}/2"


def format_hquat(q):
    """Serialize as "m+ni+pj+qk", e.g. "1/2+1/2i+1/2j+1/2k"."""
    text = _format_coefficient(q.e0)
    for e, unit in zip((q.e1, q.e2, q.e3), "ijk"):
        coefficient = _format_coefficient(e)
        text += (coefficient if coefficient.startswith("-") else "+" + coefficient) + unit
    return text
