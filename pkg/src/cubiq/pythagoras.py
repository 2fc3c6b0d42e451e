"""
Pythagorean quadruples
Euler parameterizations of a^2 + b^2 + c^2 = d^2 through a Gaussian gcd
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidInput, NotNormalForm
from .gaussian import UNITS, GInt, g_exact_div, g_gcd


@dataclass(frozen=True)
class PythQuadruple:
    a: int
    b: int
    c: int
    d: int

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)

    def normal_form_violation(self):
        """The first normal-form condition that fails, or None."""
        a, b, c, d = self.as_tuple()
        if a * a + b * b + c * c != d * d:
            return "a^2 + b^2 + c^2 = d^2"
        if d <= 0:
            return "d > 0"
        if gcd(a, b, c) != 1:
            return "gcd(a, b, c) = 1"
        if a % 2 == 0:
            return "a odd"
        return None

    def __str__(self):
        return " ".join(str(x) for x in self.as_tuple())


def quadruple_from_params(m, n, p, q):
    """(a, b, c, d) produced by the Euler parameters (m, n, p, q)."""
    return PythQuadruple(
        m * m + n * n - p * p - q * q,
        2 * (m * q + n * p),
        2 * (-m * p + n * q),
        m * m + n * n + p * p + q * q,
    )


@dataclass(frozen=True)
class Normalization:
    """
    How a quadruple was brought to normal form

    Args:
        perm: source index in (a, b, c) of each normal-form coordinate
        d_sign: sign applied to d
    """

    perm: tuple
    d_sign: int


def normalize_quadruple(a, b, c, d):
    """
    Move the odd leg first and make d positive

    Returns:
        (PythQuadruple, Normalization)
    """
    legs = (a, b, c)
    if a * a + b * b + c * c != d * d:
        raise NotNormalForm("a^2 + b^2 + c^2 = d^2")
    if d == 0:
        raise NotNormalForm("d > 0")
    if gcd(a, b, c) != 1:
        raise NotNormalForm("gcd(a, b, c) = 1")
    odd = next(t for t in range(3) if legs[t] % 2)
    perm = (odd,) + tuple(t for t in range(3) if t != odd)
    sign = 1 if d > 0 else -1
    quadruple = PythQuadruple(*(legs[t] for t in perm), sign * d)
    return quadruple, Normalization(perm, sign)


def gauss_product_param(x, y, gamma):
    """
    The four (m, n, p, q) with x = |m+ni|^2, y = |p+qi|^2 and gamma = (m+ni)(p+qi)

    Args:
        x, y: nonnegative integers, not both zero, with x * y = norm(gamma)
        gamma: Gaussian integer with gcd(x, y, gamma, conj(gamma)) a unit

    Returns:
        list of four tuples, m+ni running over gcd(x, gamma) times 1, i, -1, -i
    """
    gamma = GInt.of(gamma)
    if x < 0 or y < 0 or (x == 0 and y == 0):
        raise InvalidInput("x and y must be nonnegative and not both zero")
    if x * y != gamma.norm:
        raise InvalidInput(f"x * y = {x * y} differs from norm(gamma) = {gamma.norm}")
    common = g_gcd(g_gcd(g_gcd(x, y), gamma), gamma.conjugate())
    if not common.is_unit():
        raise InvalidInput("gcd(x, y, gamma, conj(gamma)) is not a unit")

    if x == 0:
        # gamma = 0 and y = 1: only the second factor survives
        second = g_gcd(y, gamma)
        return [(0, 0, (u * second).re, (u * second).im) for u in UNITS]
    first = g_gcd(x, gamma)
    if first.norm != x:
        raise AssertionError(f"gcd({x}, {gamma}) has norm {first.norm}")
    params = []
    for u in UNITS:
        mn = first * u
        pq = g_exact_div(gamma, mn)
        params.append((mn.re, mn.im, pq.re, pq.im))
    return params


def euler_param(q):
    """
    The four Euler parameterizations of a normal-form quadruple

    Args:
        q: PythQuadruple with a odd, d > 0 and gcd(a, b, c) = 1

    Returns:
        list of four (m, n, p, q)
    """
    violation = q.normal_form_violation()
    if violation:
        raise NotNormalForm(violation)
    a, b, c, d = q.as_tuple()
    params = gauss_product_param((d + a) // 2, (d - a) // 2, GInt(-c // 2, b // 2))
    for param in params:
        if quadruple_from_params(*param) != q:
            raise AssertionError(f"parameters {param} do not reproduce {q}")
    return params


def brute_force_params(q):
    """Every (m, n, p, q) reproducing the quadruple, by search over m^2+n^2+p^2+q^2 = d."""
    d = q.d
    found = []
    bound = isqrt(d)
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            rest = d - m * m - n * n
            if rest < 0:
                continue
            for p in range(-isqrt(rest), isqrt(rest) + 1):
                last = rest - p * p
                root = isqrt(last)
                if root * root != last:
                    continue
                for s in {root, -root}:
                    if quadruple_from_params(m, n, p, s) == q:
                        found.append((m, n, p, s))
    return sorted(found)


def quadruples_with_d(d, verify=True):
    """
    Normal-form quadruples with the given d, one per sign and b/c swap

    Args:
        d: odd positive integer
        verify: check that each has exactly four Euler parameterizations

    Returns:
        quadruples with a > 0 and 0 <= b <= c, sorted
    """
    if d < 1 or d % 2 == 0:
        raise InvalidInput(f"d must be odd and positive, got {d}")
    found = []
    for a in range(1, d + 1, 2):
        for b in range(0, isqrt((d * d - a * a) // 2) + 1):
            rest = d * d - a * a - b * b
            c = isqrt(rest)
            if c >= b and c * c == rest and gcd(a, b, c) == 1:
                found.append(PythQuadruple(a, b, c, d))
    if verify:
        for q in found:
            if len(euler_param(q)) != 4:
                raise AssertionError(f"{q} does not have four parameterizations")
    return found
