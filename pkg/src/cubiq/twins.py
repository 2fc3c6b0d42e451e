"""
Twin pairs
Parameterization of orthogonal equal-norm vector pairs by (alpha, z), twin counts,
extension to icubes, maximal cubic lattices and twin-completeness
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from sympy import divisor_sigma, factorint

from .config import TWINS_SEARCH_BUDGET, check_budget
from .decomp import represent_pure, squarefree_decompose
from .errors import InvalidInput, NotExtendable, NotPrimitive, NotTwins
from .euler import euler_matrix
from .gaussian import GInt, g_squarefree_split
from .hurwitz import I, J, K, ONE, UNITS, HQuat, hq_divides_integer, hq_enumerate_norm, hq_left_divisor_norm_p, scalar_div
from .lattice import CubicLattice, IVec, cross, enumerate_norm_vectors, orbit_representatives

logger = logging.getLogger(__name__)

# Squarefree twin-complete numbers known so far
TWIN_COMPLETE_BASE = (1, 2, 5, 10, 13, 37, 58, 85, 130)


@dataclass(frozen=True)
class TwinPair:
    theta: IVec
    eta: IVec


@dataclass(frozen=True)
class TwinParam:
    """
    theta = alpha * z*j * conj(alpha), eta = alpha * z*k * conj(alpha)

    Args:
        alpha: Hurwitz quaternion
        z: Gaussian integer
        canonical: z squarefree and the representative chosen among its four equivalents
    """

    alpha: HQuat
    z: GInt
    canonical: bool = False


def is_twin_pair(x, y):
    """True when x and y are orthogonal 3-vectors of equal nonzero norm."""
    return x.dim == 3 and y.dim == 3 and x.norm == y.norm and x.norm > 0 and x.dot(y) == 0


def _require_twins(x, y):
    if not is_twin_pair(x, y):
        raise NotTwins(f"{x} and {y} are not twins")


def make_twins(alpha, z):
    """
    The twin pair parameterized by (alpha, z)

    Args:
        alpha: nonzero quaternion
        z: nonzero Gaussian integer

    Returns:
        TwinPair
    """
    alpha, z = HQuat.of(alpha), GInt.of(z)
    if alpha.is_zero() or z.is_zero():
        raise InvalidInput("alpha and z must be nonzero")
    zq = HQuat.of(z)
    conj = alpha.conjugate()
    theta = alpha * zq * J * conj
    eta = alpha * zq * K * conj
    return TwinPair(IVec.from_quat(theta), IVec.from_quat(eta))


def _content(q):
    return gcd(*q.doubled()) // 2


def _leading_positive(z):
    return z.re > 0 or (z.re == 0 and z.im > 0)


def twin_equivalents(param):
    """The four parameters (alpha*rho, z / rho**2), rho a Gaussian unit, giving the same twins."""
    alpha, z = param.alpha, param.z
    return [
        TwinParam(alpha, z, param.canonical),
        TwinParam(-alpha, z, param.canonical),
        TwinParam(alpha * I, -z, param.canonical),
        TwinParam(-(alpha * I), -z, param.canonical),
    ]


def parameterize_twins(theta, eta):
    """
    Canonical (alpha, z) with make_twins(alpha, z) == (theta, eta)

    Norm-p left divisors are peeled off while p**2 divides the norm of the
    content-free pair; the squarefree remainder is rotated so that its product
    is a multiple of i, which exposes z, and squares are moved from z into alpha.

    Args:
        theta, eta: twin 3-vectors

    Returns:
        TwinParam with squarefree z in the half plane re > 0 (or re = 0, im > 0).
        That leaves alpha and -alpha; the one with the lexicographically larger
        doubled tuple is kept, so (j, k) gives alpha = 1 rather than -1.
    """
    _require_twins(theta, eta)
    th, et = theta.to_quat(), eta.to_quat()
    alpha = ONE
    while True:
        d = gcd(_content(th), _content(et))
        core_t, core_e = scalar_div(th, d), scalar_div(et, d)
        square_primes = [p for p, e in sorted(factorint(core_t.norm).items()) if e >= 2]
        if not square_primes:
            break
        p = square_primes[0]
        # p cannot divide both cores, so peel from one it does not divide
        source = core_e if hq_divides_integer(core_t, p) else core_t
        pi = hq_left_divisor_norm_p(source, p)
        th = d * scalar_div(pi.conjugate() * core_t * pi, p * p)
        et = d * scalar_div(pi.conjugate() * core_e * pi, p * p)
        alpha = alpha * pi
        logger.debug("peeled a norm-%d divisor", p)

    n = core_t.norm
    axis = scalar_div(core_t * core_e, n)
    u = next(u for u in UNITS if u * I * u.conjugate() == axis)
    alpha = alpha * u
    rotated = u.conjugate() * core_t * u
    _, b, c, e = rotated.coefficients()
    if b:
        raise AssertionError("rotated twin has an i component")
    z = GInt(c, e) * d

    s, t, unit = g_squarefree_split(z)
    alpha = alpha * HQuat.of(s)
    z = unit * t
    if not _leading_positive(z):
        alpha, z = alpha * I, -z
    alpha = max(alpha, -alpha, key=HQuat.doubled)

    result = TwinParam(alpha, z, True)
    if make_twins(alpha, z) != TwinPair(theta, eta):
        raise AssertionError(f"parameterization of {theta}, {eta} does not reassemble")
    return result


def _sigma(n):
    return int(divisor_sigma(n))


def twin_count(M):
    """
    Number of ordered twin pairs of norm M

    Returns:
        24 * prod g(p**e) * prod h(q**e) over p = 1 and q = 3 mod 4 dividing M
    """
    if M < 1:
        raise InvalidInput("M must be positive")
    count = 24
    for p, e in factorint(M).items():
        if p == 2:
            continue
        half = e // 2
        if p % 4 == 1:
            if e % 2:
                count *= 2 * _sigma(p ** half)
            else:
                count *= _sigma(p ** half) + _sigma(p ** (half - 1))
        elif e % 2:
            return 0
        else:
            count *= _sigma(p ** half) + _sigma(p ** (half - 1))
    return count


def ordered_twin_pairs(M):
    """Count ordered twin pairs of norm M by enumeration."""
    vectors = enumerate_norm_vectors(M)
    return sum(1 for x in vectors for y in vectors if x.dot(y) == 0)


def max_cubic_lattice(x):
    """
    The unique cubic lattice of edge m containing a primitive x of norm n * m**2

    Args:
        x: primitive nonzero 3-vector

    Returns:
        CubicLattice whose basis is the columns of E(alpha)
    """
    if x.dim != 3 or x.is_zero():
        raise InvalidInput("x must be a nonzero 3-vector")
    if not x.is_primitive():
        raise NotPrimitive(f"{x} is not primitive")
    rep = represent_pure(x.to_quat())
    basis = tuple(IVec(column) for column in euler_matrix(rep.alpha).columns())
    return CubicLattice(basis, rep.m * rep.m, rep.alpha)


def twins_of(x):
    """
    Every y forming a twin pair with x

    A primitive x is read off its maximal cubic lattice: with coordinates (a, b, c)
    it has no twin when all are nonzero, two twins when one is zero and four when
    two are zero. Other vectors are searched exhaustively.

    Args:
        x: nonzero 3-vector

    Returns:
        sorted list of IVec
    """
    if x.dim != 3 or x.is_zero():
        raise InvalidInput("x must be a nonzero 3-vector")
    if not x.is_primitive():
        check_budget(x.norm, TWINS_SEARCH_BUDGET, "twin search norm")
        return [y for y in enumerate_norm_vectors(x.norm) if x.dot(y) == 0]

    lattice = max_cubic_lattice(x)
    coords = lattice.coordinates_of(x)
    zeros = [t for t in range(3) if coords[t] == 0]
    others = [t for t in range(3) if coords[t] != 0]
    basis = lattice.basis
    if not zeros:
        return []
    if len(zeros) == 1:
        r, s = others
        twin = basis[r] * coords[s] - basis[s] * coords[r]
        return sorted([twin, -twin], key=lambda v: v.coords)
    r, s = zeros
    return sorted([basis[r], -basis[r], basis[s], -basis[s]], key=lambda v: v.coords)


def extend_to_icube(x, y):
    """
    Third edge (x cross y) / m of the icube on twins x, y of integer length m

    Returns:
        IVec z with (x, y, z) an icube
    """
    _require_twins(x, y)
    m = isqrt(x.norm)
    if m * m != x.norm:
        raise NotExtendable(f"common norm {x.norm} is not a perfect square")
    return cross(x, y).exact_div(m)


def is_four_power_form(N):
    """True when N = 4**a * (8k + 7), the norms with no vector in Z^3."""
    while N % 4 == 0:
        N //= 4
    return N % 8 == 7


def _two_positive_squares(n):
    """(a, b) with a >= b >= 0, a > 0 and a^2 + b^2 = n, or None."""
    for b in range(isqrt(n // 2) + 1):
        a = isqrt(n - b * b)
        if a * a + b * b == n and a > 0:
            return (a, b)
    return None


def _three_positive_squares(n):
    """(a, b, c) with 1 <= a <= b <= c and a^2 + b^2 + c^2 = n, or None."""
    for a in range(1, isqrt(n // 3) + 1):
        for b in range(a, isqrt((n - a * a) // 2) + 1):
            rest = n - a * a - b * b
            c = isqrt(rest)
            if c >= b and c * c == rest:
                return (a, b, c)
    return None


@dataclass(frozen=True)
class TwinCompleteness:
    """
    Verdict with certificate

    Args:
        verdict: every vector of norm N has a twin
        squarefree_part: n with N = n * m**2
        representation: (a, b) with n = a^2 + b^2 on acceptance
        witness: a vector of norm n with three nonzero coordinates on rejection
        reason: short explanation
    """

    verdict: bool
    squarefree_part: int
    representation: tuple = None
    witness: IVec = None
    reason: str = ""


def is_twin_complete(N):
    """
    Decide twin-completeness from the squarefree part of N

    A squarefree n qualifies when it is a sum of at most two positive squares
    but not of three positive squares.

    Returns:
        TwinCompleteness
    """
    if N < 1:
        raise InvalidInput("N must be positive")
    n, _ = squarefree_decompose(N)
    if is_four_power_form(N):
        return TwinCompleteness(False, n, reason="no vectors of this norm")
    two = _two_positive_squares(n)
    three = _three_positive_squares(n)
    if two and not three:
        return TwinCompleteness(True, n, representation=two, reason="sum of at most two positive squares only")
    if three is None:
        raise AssertionError(f"{n} is neither a sum of two nor of three positive squares")
    return TwinCompleteness(False, n, witness=IVec(three), reason="sum of three positive squares")


def lift_witness(witness, N):
    """
    A twinless vector of norm N built from a twinless primitive witness of norm n

    The odd part of m is absorbed by some alpha with alpha * w * conj(alpha)
    primitive; powers of two scale the result.
    """
    n, m = squarefree_decompose(N)
    if witness.norm != n:
        raise InvalidInput(f"witness norm {witness.norm} is not the squarefree part {n}")
    two_power = 1
    while m % 2 == 0:
        m //= 2
        two_power *= 2
    beta = witness.to_quat()
    for alpha in hq_enumerate_norm(m):
        image = IVec.from_quat(alpha * beta * alpha.conjugate())
        if image.is_primitive():
            return image * two_power
    raise AssertionError(f"no primitive conjugate of {witness} by norm {m}")


def definitional_twin_complete(N):
    """True when N has vectors and every vector of norm N has a twin (orbit representatives suffice)."""
    reps = orbit_representatives(N)
    return bool(reps) and all(twins_of(rep) for rep in reps)


def conjectured_twin_complete(limit):
    """The known squarefree list closed under multiplication by squares, up to limit."""
    found = set()
    for base in TWIN_COMPLETE_BASE:
        m = 1
        while base * m * m <= limit:
            found.add(base * m * m)
            m += 1
    return sorted(found)


def twin_complete_list(limit):
    """
    Every twin-complete N up to limit

    The result is compared against the known list and any difference is logged.
    """
    if limit < 1:
        raise InvalidInput("limit must be positive")
    found = [N for N in range(1, limit + 1) if is_twin_complete(N).verdict]
    expected = conjectured_twin_complete(limit)
    if found != expected:
        logger.warning(
            "twin-complete numbers up to %d differ from the known list: extra %s, missing %s",
            limit,
            sorted(set(found) - set(expected)),
            sorted(set(expected) - set(found)),
        )
    return found
