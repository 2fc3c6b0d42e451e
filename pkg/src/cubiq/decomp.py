"""
Pure-quaternion decomposition
delta = g * alpha * beta * conj(alpha), divisibility of such products by a prime,
and closed-form counts of integer vectors of a given norm
"""

from dataclasses import dataclass
from math import prod

from sympy import divisor_sigma, factorint, legendre_symbol

from .errors import InvalidInput, NotSquarefree
from .hurwitz import (
    I,
    ONE,
    UNITS,
    HQuat,
    format_hquat,
    hq_divides_integer,
    hq_enumerate_norm,
    hq_left_divides,
    hq_left_divisor_norm_p,
    scalar_div,
)
from .lattice import IVec, enumerate_norm_vectors


@dataclass(frozen=True)
class PureRepresentation:
    """
    delta = content * alpha * beta * conj(alpha)

    Args:
        alpha: quaternion of norm m
        beta: pure quaternion of squarefree norm n
        content: integer content g of delta
        m: square root of the square part of norm(delta / g)
        n: squarefree part of norm(delta / g)
    """

    alpha: HQuat
    beta: HQuat
    content: int
    m: int
    n: int

    def reassemble(self):
        return self.content * (self.alpha * self.beta * self.alpha.conjugate())


def squarefree_decompose(M):
    """Split M = n * m**2 with n squarefree; returns (n, m)."""
    if M < 1:
        raise InvalidInput("M must be positive")
    factors = factorint(M)
    n = prod(p ** (e % 2) for p, e in factors.items())
    m = prod(p ** (e // 2) for p, e in factors.items())
    return n, m


def represent_pure(delta):
    """
    Write a pure quaternion as g * alpha * beta * conj(alpha)

    One norm-p left divisor is peeled per prime factor p of m, the primitive
    core shrinking by conj(pi) * core * pi / p**2 each time.

    Args:
        delta: nonzero pure Lipschitz quaternion

    Returns:
        PureRepresentation with alpha canonical among its right associates and
        beta = i when n = 1
    """
    delta = HQuat.of(delta)
    if delta.is_zero() or not delta.is_pure():
        raise InvalidInput(f"{format_hquat(delta)} is not a nonzero pure quaternion")
    g, core = IVec.from_quat(delta).primitive_split()
    n, m = squarefree_decompose(core.norm)

    alpha, beta = ONE, core.to_quat()
    for p, e in sorted(factorint(m).items()):
        for _ in range(e):
            pi = hq_left_divisor_norm_p(beta, p)
            beta = scalar_div(pi.conjugate() * beta * pi, p * p)
            alpha = alpha * pi

    candidates = [(alpha * u, u.conjugate() * beta * u) for u in UNITS]
    if n == 1:
        candidates = [c for c in candidates if c[1] == I]
    alpha, beta = max(candidates, key=lambda c: c[0].doubled())
    return PureRepresentation(alpha, beta, g, m, n)


P_DIVIDES_FACTOR = "p divides alpha or beta"
TWO_DIVIDES_NORM = "p = 2 divides norm(alpha)"
RIGHT_DIVISOR_WITNESS = "right divisor witness"
NOT_DIVISIBLE = "not divisible"


@dataclass(frozen=True)
class DivisibilityReport:
    """
    Verdict on whether p divides alpha * beta * conj(alpha)

    Args:
        case: one of the case labels above
        divisible: the verdict
        witness: (pi, h) for the right-divisor case, pi a right divisor of alpha
            of norm p with conj(pi) left-dividing h + beta
    """

    case: str
    divisible: bool
    witness: tuple = None


def divisibility_analysis(alpha, beta, p):
    """
    Decide p | alpha * beta * conj(alpha) by case analysis

    Args:
        alpha: quaternion
        beta: pure quaternion
        p: rational prime

    Returns:
        DivisibilityReport
    """
    alpha, beta = HQuat.of(alpha), HQuat.of(beta)
    if hq_divides_integer(alpha, p) or hq_divides_integer(beta, p):
        report = DivisibilityReport(P_DIVIDES_FACTOR, True)
    elif p == 2 and alpha.norm % 2 == 0:
        report = DivisibilityReport(TWO_DIVIDES_NORM, True)
    elif p > 2 and alpha.norm % p == 0:
        # right divisors of alpha are conjugates of left divisors of conj(alpha)
        pi = hq_left_divisor_norm_p(alpha.conjugate(), p).conjugate()
        report = DivisibilityReport(NOT_DIVISIBLE, False)
        for h in range(p):
            if hq_left_divides(pi.conjugate(), beta + h):
                report = DivisibilityReport(RIGHT_DIVISOR_WITNESS, True, (pi, h))
                break
    else:
        report = DivisibilityReport(NOT_DIVISIBLE, False)

    direct = hq_divides_integer(alpha * beta * alpha.conjugate(), p)
    if report.divisible != direct:
        raise AssertionError(f"case analysis disagrees with direct division by {p}")
    return report


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime p; 0 when p divides a."""
    return int(legendre_symbol(a % p, p))


def count_primitive_vectors(n, m):
    """
    Number of primitive vectors of norm n * m**2

    Args:
        n: squarefree positive integer
        m: positive integer

    Returns:
        0 for even m, else p(n) * prod(p**l - (-n/p) * p**(l-1)) over p**l || m
    """
    if n < 1 or m < 1:
        raise InvalidInput("n and m must be positive")
    if any(e > 1 for e in factorint(n).values()):
        raise NotSquarefree(f"{n} is not squarefree")
    if m % 2 == 0:
        return 0
    # every vector of squarefree norm is primitive
    count = len(enumerate_norm_vectors(n))
    for p, l in factorint(m).items():
        count *= p ** l - legendre(-n, p) * p ** (l - 1)
    return count


def count_all_vectors(M):
    """
    Number of integer vectors of norm M

    Returns:
        s(n) * prod(sigma(p**l) - (-n/p) * sigma(p**(l-1))) over odd p**l || m,
        where M = n * m**2 with n squarefree
    """
    n, m = squarefree_decompose(M)
    count = len(enumerate_norm_vectors(n))
    for p, l in factorint(m).items():
        if p == 2:
            continue
        count *= int(divisor_sigma(p ** l)) - legendre(-n, p) * int(divisor_sigma(p ** (l - 1)))
    return count


def count_nondivisible_conjugates(beta, p, l):
    """
    Number of distinct alpha * beta * conj(alpha) not divisible by p, over norm(alpha) = p**l

    Args:
        beta: pure quaternion not divisible by p
        p: rational prime
        l: positive exponent
    """
    beta = HQuat.of(beta)
    if l < 1:
        raise InvalidInput("l must be positive")
    if hq_divides_integer(beta, p):
        raise InvalidInput(f"{p} divides {format_hquat(beta)}")
    if p == 2:
        return 0
    e = len({u * beta * u.conjugate() for u in UNITS})
    if beta.norm % p == 0:
        return e * p ** l
    if legendre(-beta.norm, p) == 1:
        return e * (p ** l - p ** (l - 1))
    return e * (p ** l + p ** (l - 1))


def nondivisible_conjugates_by_search(beta, p, l):
    """Brute-force count behind count_nondivisible_conjugates."""
    beta = HQuat.of(beta)
    images = set()
    for alpha in hq_enumerate_norm(p ** l):
        image = alpha * beta * alpha.conjugate()
        if not hq_divides_integer(image, p):
            images.add(image)
    return len(images)
