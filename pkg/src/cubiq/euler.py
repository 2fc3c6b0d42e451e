"""
Euler matrices
E(alpha), the signed-permutation action of the extended unit group, generator types
and the decomposition of an icube as d * E(alpha) up to signed permutation
"""

import itertools
import json
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidInput, NotIcube, NotPrimitive
from .decomp import represent_pure
from .hurwitz import I, J, K, ONE, SIGMA, UNITS, HQuat, format_hquat, hq_enumerate_norm, lipschitz_flag, scalar_div

TYPE1 = "Type1"
TYPE2 = "Type2Witness"
TYPE3 = "Type3Witness"
NOT_INTEGRAL = "NotIntegral"


def matrix_columns(entries):
    return tuple(tuple(row[t] for row in entries) for t in range(3))


def matrix_from_columns(columns):
    return tuple(tuple(column[r] for column in columns) for r in range(3))


@dataclass(frozen=True)
class EulerMatrix:
    """
    A 3x3 integer matrix with pairwise orthogonal columns of equal norm

    Args:
        entries: rows of the matrix
        generator: quaternion whose Euler matrix this is (after any scaling)
        scale_class: generator type when the matrix is integral and primitive
    """

    entries: tuple
    generator: HQuat = None
    scale_class: str = None

    def columns(self):
        return matrix_columns(self.entries)

    def __str__(self):
        return format_matrix(self.entries)


@dataclass(frozen=True)
class SignedPerm:
    """
    Column action M -> M' with M'[:, t] = signs[t] * M[:, perm[t]]

    perm holds 0-based source columns.
    """

    perm: tuple
    signs: tuple

    def apply(self, entries):
        columns = matrix_columns(entries)
        return matrix_from_columns(
            tuple(tuple(s * x for x in columns[p]) for p, s in zip(self.perm, self.signs))
        )

    def compose(self, other):
        """The action of applying other first, then self."""
        return SignedPerm(
            tuple(other.perm[p] for p in self.perm),
            tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs)),
        )

    def inverse(self):
        perm = [0, 0, 0]
        signs = [1, 1, 1]
        for t, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = t
            signs[p] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def is_orientation_preserving(self):
        inversions = sum(1 for a, b in itertools.combinations(self.perm, 2) if a > b)
        product = self.signs[0] * self.signs[1] * self.signs[2]
        return product * (-1) ** inversions == 1

    def __str__(self):
        return "(" + ",".join(f"{'+' if s > 0 else '-'}{p + 1}" for p, s in zip(self.perm, self.signs)) + ")"


IDENTITY = SignedPerm((0, 1, 2), (1, 1, 1))


def all_signed_perms():
    """All 48 signed permutations; permutations outer, sign patterns inner."""
    return [
        SignedPerm(perm, signs)
        for perm in itertools.permutations(range(3))
        for signs in itertools.product((1, -1), repeat=3)
    ]


def euler_matrix(alpha):
    """
    The Euler matrix of a nonzero Hurwitz quaternion

    Args:
        alpha: nonzero quaternion

    Returns:
        EulerMatrix with columns alpha*u*conj(alpha) for u = i, j, k
    """
    alpha = HQuat.of(alpha)
    if alpha.is_zero():
        raise InvalidInput("the Euler matrix of zero is undefined")
    conj = alpha.conjugate()
    columns = tuple((alpha * u * conj).vector_part() for u in (I, J, K))
    flag = lipschitz_flag(alpha)
    scale_class = TYPE1 if flag.is_primitive and alpha.norm % 2 else None
    return EulerMatrix(matrix_from_columns(columns), alpha, scale_class)


@dataclass(frozen=True)
class ExtendedUnit:
    """An element of the 48-element group: numerator, divided by sqrt(2) when root_two."""

    numerator: HQuat
    root_two: bool = False

    def __str__(self):
        text = format_hquat(self.numerator)
        return f"({text})/sqrt2" if self.root_two else text


LAMBDA = HQuat(2, 2, 0, 0)

# index k < 24 is UNITS[k]; index 24 + k is UNITS[k] * (1+i)/sqrt2
EXTENDED_UNITS = tuple(ExtendedUnit(u) for u in UNITS) + tuple(ExtendedUnit(u * LAMBDA, True) for u in UNITS)


def extended_units():
    return list(EXTENDED_UNITS)


def _halve_matrix(entries, factor):
    if any(x % factor for row in entries for x in row):
        raise AssertionError("matrix not divisible by its scale")
    return tuple(tuple(x // factor for x in row) for row in entries)


def unit_action(eps_index):
    """
    The signed permutation by which E(alpha * eps) differs from E(alpha)

    Args:
        eps_index: index into EXTENDED_UNITS (0..47)

    Returns:
        SignedPerm sp with E(alpha * eps) == sp.apply(E(alpha))
    """
    if not isinstance(eps_index, int) or not 0 <= eps_index < len(EXTENDED_UNITS):
        raise InvalidInput(f"unit index must be in 0..{len(EXTENDED_UNITS) - 1}, got {eps_index!r}")
    eps = EXTENDED_UNITS[eps_index]
    entries = euler_matrix(eps.numerator).entries
    if eps.root_two:
        entries = _halve_matrix(entries, 2)
    perm, signs = [], []
    for column in matrix_columns(entries):
        row = next(r for r, x in enumerate(column) if x)
        perm.append(row)
        signs.append(column[row])
    return SignedPerm(tuple(perm), tuple(signs))


@dataclass(frozen=True)
class GeneratorClass:
    """
    Type of a primitive Lipschitz beta as a generator of an integral Euler matrix

    Args:
        kind: TYPE1, TYPE2, TYPE3 or NOT_INTEGRAL
        beta: the classified quaternion
        generator: odd-norm primitive Lipschitz quaternion whose Euler matrix equals
            matrix up to signed permutation
        witness_unit: for TYPE2 the quaternion 1+u (the unit is (1+u)/sqrt2), for
            TYPE3 sigma or its inverse; None for TYPE1
        matrix: the integral primitive matrix E(beta), E(beta)/2 or E(beta)/4
    """

    kind: str
    beta: HQuat
    generator: HQuat = None
    witness_unit: HQuat = None
    matrix: EulerMatrix = None


def _checked(cls):
    if not is_primitive_matrix(cls.matrix.entries):
        raise AssertionError(f"{cls.kind} matrix of {format_hquat(cls.beta)} is not primitive")
    return cls


def classify_generator(beta):
    """
    Classify a primitive Lipschitz quaternion by the integral Euler matrix it yields

    Args:
        beta: primitive Lipschitz quaternion

    Returns:
        GeneratorClass
    """
    beta = HQuat.of(beta)
    if not lipschitz_flag(beta).is_primitive:
        raise NotPrimitive(f"{format_hquat(beta)} is not a primitive Lipschitz quaternion")
    n = beta.norm
    entries = euler_matrix(beta).entries
    if n % 2:
        return _checked(GeneratorClass(TYPE1, beta, beta, None, EulerMatrix(entries, beta, TYPE1)))
    if n % 4 == 2:
        for u in (I, J, K, -I, -J, -K):
            generator = scalar_div(beta * (ONE + u), 2)
            if generator is not None and generator.is_lipschitz:
                matrix = EulerMatrix(_halve_matrix(entries, 2), generator, TYPE2)
                return _checked(GeneratorClass(TYPE2, beta, generator, ONE + u, matrix))
        raise AssertionError(f"no unit witness for {format_hquat(beta)}")
    if n % 8 == 4 and all(c % 2 for c in beta.coefficients()):
        # beta/2 has the odd coefficients of beta as doubled coordinates
        half = HQuat(*beta.coefficients())
        for unit in (SIGMA, SIGMA.conjugate()):
            generator = half * unit
            if generator.is_lipschitz:
                matrix = EulerMatrix(_halve_matrix(entries, 4), generator, TYPE3)
                return _checked(GeneratorClass(TYPE3, beta, generator, unit, matrix))
        raise AssertionError(f"no sigma witness for {format_hquat(beta)}")
    return GeneratorClass(NOT_INTEGRAL, beta)


def odd_diagonal_count(entries):
    return sum(1 for t in range(3) if entries[t][t] % 2)


def is_primitive_matrix(entries):
    return gcd(*(x for row in entries for x in row)) == 1


def _validate_icube(entries):
    if len(entries) != 3 or any(len(row) != 3 for row in entries):
        raise NotIcube("matrix must be 3x3")
    columns = matrix_columns(entries)
    norms = [sum(x * x for x in column) for column in columns]
    if 0 in norms or len(set(norms)) != 1:
        raise NotIcube("columns must be nonzero and of equal norm")
    for a, b in itertools.combinations(columns, 2):
        if sum(x * y for x, y in zip(a, b)):
            raise NotIcube("columns must be pairwise orthogonal")
    return columns, norms[0]


def sarkozy_decompose(M):
    """
    Write an icube as d * (E(alpha) acted on by sp)

    Args:
        M: 3x3 integer matrix (rows) whose columns form an icube

    Returns:
        (d, alpha, sp) with alpha primitive Lipschitz of odd norm; among valid alphas
        those with positive real part come first, then the smallest doubled tuple
    """
    entries = tuple(tuple(int(x) for x in row) for row in M)
    columns, norm = _validate_icube(entries)
    d = gcd(*(x for row in entries for x in row))
    core = tuple(tuple(x // d for x in row) for row in entries)
    edge = isqrt(norm // (d * d))
    if edge * edge * d * d != norm:
        raise NotIcube(f"edge norm {norm} is not a perfect square")
    core_columns = matrix_columns(core)

    bases = []
    primitive = [c for c in core_columns if gcd(*c) == 1]
    if primitive:
        bases.append(represent_pure(HQuat.pure(*primitive[0])).alpha)
    else:
        bases.extend(hq_enumerate_norm(edge))

    valid = []
    signed_perms = all_signed_perms()
    for base in bases:
        for eps in UNITS:
            alpha = base * eps
            if not alpha.is_lipschitz or not lipschitz_flag(alpha).is_primitive:
                continue
            image = euler_matrix(alpha).entries
            for index, sp in enumerate(signed_perms):
                if sp.apply(image) == core:
                    valid.append((alpha.e0 <= 0, alpha.doubled(), index, alpha, sp))
    if not valid:
        raise NotIcube(f"no Euler matrix matches {format_matrix(entries)}")
    _, _, _, alpha, sp = min(valid, key=lambda item: item[:3])
    return d, alpha, sp


def format_matrix(entries):
    """Row-major "[[a,b,c],[d,e,f],[g,h,i]]"."""
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in entries) + "]"


def parse_matrix(text):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        raise InvalidInput(f"not a matrix: {text!r}") from None
    if not isinstance(rows, list) or len(rows) != 3 or any(
        not isinstance(row, list) or len(row) != 3 or not all(isinstance(x, int) for x in row) for row in rows
    ):
        raise InvalidInput(f"not a 3x3 integer matrix: {text!r}")
    return tuple(tuple(row) for row in rows)
