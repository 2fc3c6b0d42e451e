"""
Lattice geometry
Integer vectors, the pure-quaternion bridge, norm enumeration, square sublattices
and the higher-dimension twin explorer
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from .config import NORM_VECTOR_BUDGETS, check_budget
from .errors import InvalidInput, NotPrimitive
from .hurwitz import HQuat

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class IVec:
    """An integer vector; dimension 3 unless stated."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def of(cls, *coords):
        return cls(tuple(coords))

    @property
    def norm(self):
        return sum(c * c for c in self.coords)

    @property
    def dim(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def __add__(self, other):
        return IVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return IVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return IVec(tuple(-c for c in self.coords))

    def __mul__(self, k):
        return IVec(tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def content(self):
        return gcd(*self.coords)

    def is_primitive(self):
        return self.content() == 1

    def primitive_split(self):
        """
        Split v = g * u with g > 0 and u primitive

        Returns:
            (g, u)
        """
        g = self.content()
        if g == 0:
            raise InvalidInput("the zero vector has no primitive part")
        return g, self.exact_div(g)

    def exact_div(self, k):
        if any(c % k for c in self.coords):
            raise InvalidInput(f"{self} is not divisible by {k}")
        return IVec(tuple(c // k for c in self.coords))

    def to_quat(self):
        """The pure quaternion V(v) = v1*i + v2*j + v3*k."""
        if self.dim != 3:
            raise InvalidInput("only 3-vectors correspond to pure quaternions")
        return HQuat.pure(*self.coords)

    @classmethod
    def from_quat(cls, q):
        return cls(q.vector_part())

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


def parse_ivec(text):
    """Parse "x,y,z" (no spaces required) into an IVec."""
    try:
        return IVec(tuple(int(part) for part in text.strip().split(",")))
    except ValueError:
        raise InvalidInput(f"not an integer vector: {text!r}") from None


def cross(x, y):
    """Cross product of two 3-vectors."""
    return IVec((
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ))


@dataclass(frozen=True)
class CubicLattice:
    """
    The lattice spanned by an icube

    Args:
        basis: three pairwise orthogonal vectors of norm edge_norm
        edge_norm: common squared length of the basis vectors
        generator: quaternion whose Euler matrix has the basis as columns, if known
    """

    basis: tuple
    edge_norm: int
    generator: HQuat = None

    @property
    def edge(self):
        """Edge length; only defined when edge_norm is a perfect square."""
        m = isqrt(self.edge_norm)
        return m if m * m == self.edge_norm else None

    def coordinates_of(self, x):
        """Integer coordinates of x in the basis, or None if x is not in the lattice."""
        products = [x.dot(b) for b in self.basis]
        if any(p % self.edge_norm for p in products):
            return None
        return tuple(p // self.edge_norm for p in products)

    def contains(self, x):
        return self.coordinates_of(x) is not None

    def signed_basis(self):
        """The six vectors plus and minus each basis vector."""
        return frozenset(self.basis) | frozenset(-b for b in self.basis)


def _check_dim_budget(M, dim):
    if dim not in NORM_VECTOR_BUDGETS:
        raise InvalidInput(f"dimension must be one of {sorted(NORM_VECTOR_BUDGETS)}, got {dim}")
    check_budget(M, NORM_VECTOR_BUDGETS[dim], f"norm in dimension {dim}")


def iter_norm_vectors(M, dim=3):
    """Yield every integer vector of squared length M in lexicographic order."""

    def walk(prefix, remaining, slots):
        if slots == 1:
            root = isqrt(remaining)
            if root * root == remaining:
                if root:
                    yield IVec(prefix + (-root,))
                yield IVec(prefix + (root,))
            return
        bound = isqrt(remaining)
        for c in range(-bound, bound + 1):
            yield from walk(prefix + (c,), remaining - c * c, slots - 1)

    yield from walk((), M, dim)


def enumerate_norm_vectors(M, dim=3):
    """
    All integer vectors of squared length M, lexicographically sorted

    Args:
        M: positive norm within the budget for dim
        dim: 3, 5 or 7

    Returns:
        list of IVec
    """
    if M < 1:
        raise InvalidInput("norm must be positive")
    _check_dim_budget(M, dim)
    return list(iter_norm_vectors(M, dim))


def norm_census(limit):
    """
    Count all and primitive 3-vectors of each norm up to limit in one pass

    Returns:
        (all_counts, primitive_counts), lists indexed by norm
    """
    check_budget(limit, NORM_VECTOR_BUDGETS[3], "census norm")
    all_counts = [0] * (limit + 1)
    primitive_counts = [0] * (limit + 1)
    bound = isqrt(limit)
    for x in range(-bound, bound + 1):
        rx = limit - x * x
        by = isqrt(rx)
        for y in range(-by, by + 1):
            ry = rx - y * y
            bz = isqrt(ry)
            g = gcd(x, y)
            for z in range(-bz, bz + 1):
                n = x * x + y * y + z * z
                if n == 0:
                    continue
                all_counts[n] += 1
                if gcd(g, z) == 1:
                    primitive_counts[n] += 1
    return all_counts, primitive_counts


def orbit_representatives(M, dim=3):
    """Vectors of norm M with nonincreasing nonnegative coordinates (one per signed-permutation orbit)."""

    def walk(prefix, remaining, slots, cap):
        if slots == 0:
            if remaining == 0:
                yield IVec(prefix)
            return
        for c in range(min(cap, isqrt(remaining)), -1, -1):
            yield from walk(prefix + (c,), remaining - c * c, slots - 1, c)

    return list(walk((), M, dim, isqrt(M)))


def is_odd_vector(v):
    return all(c % 2 for c in v)


def has_twin(v):
    """True when some integer vector of the same norm is orthogonal to v (exhaustive)."""
    return any(v.dot(y) == 0 for y in iter_norm_vectors(v.norm, v.dim))


def even_dimension_twin(v):
    """The explicit twin (-b, a, ..., -d, c) of an even-dimensional vector (a, b, ..., c, d)."""
    if v.dim % 2:
        raise InvalidInput("explicit twins exist only in even dimension")
    coords = []
    for a, b in zip(v.coords[::2], v.coords[1::2]):
        coords.extend((-b, a))
    return IVec(tuple(coords))


def explore_twin_conjecture(dim, d_max):
    """
    Search for non-odd vectors without a twin in dimension 5 or 7

    Args:
        dim: 5 or 7
        d_max: largest norm searched

    Returns:
        counterexamples as orbit representatives; empty when none exist
    """
    if dim not in (5, 7):
        raise InvalidInput(f"explorer dimension must be 5 or 7, got {dim}")
    if d_max < 1:
        raise InvalidInput("d_max must be positive")
    _check_dim_budget(d_max, dim)
    counterexamples = []
    for d in range(1, d_max + 1):
        for rep in orbit_representatives(d, dim):
            if is_odd_vector(rep):
                continue
            if not has_twin(rep):
                logger.warning("no twin for %s (norm %d, dim %d)", rep, d, dim)
                counterexamples.append(rep)
        logger.debug("explored norm %d in dimension %d", d, dim)
    return counterexamples


def _echelon(generators, pivots):
    """Basis of the Z-span of vectors lying in a plane that projects injectively onto pivots."""
    basis = []
    rest = [list(g) for g in generators if any(g)]
    for pivot in pivots:
        rows = [r for r in rest if r[pivot]]
        others = [r for r in rest if not r[pivot]]
        while len(rows) > 1:
            rows.sort(key=lambda r: abs(r[pivot]))
            head, reduced = rows[0], []
            for r in rows[1:]:
                q = r[pivot] // head[pivot]
                r = [a - q * b for a, b in zip(r, head)]
                (reduced if r[pivot] else others).append(r)
            rows = [head] + reduced
        basis.extend(IVec(tuple(r)) for r in rows)
        rest = [r for r in others if any(r)]
    if rest:
        raise AssertionError("generators do not lie in a plane")
    return basis


def _nearest(num, den):
    return (2 * num + den) // (2 * den)


def _gauss_reduce(b1, b2):
    while True:
        if b2.norm < b1.norm:
            b1, b2 = b2, b1
        mu = _nearest(b1.dot(b2), b1.norm)
        if mu == 0:
            return b1, b2
        b2 = b2 - b1 * mu


def greatest_square_sublattice(v):
    """
    Greatest square sublattice of the plane lattice orthogonal to v

    The lattice is the sum of the three square sublattices spanned by
    (0, -c*l, b*l), (b^2+c^2, -a*b, -a*c) and their cyclic analogues; each is
    invariant under the quarter turn x -> v x x / l, so the sum is too.

    Args:
        v: primitive 3-vector of integer length l

    Returns:
        ((u, w), index) with u, w orthogonal of length l and index = l
    """
    if v.dim != 3 or v.is_zero():
        raise InvalidInput("v must be a nonzero 3-vector")
    if not v.is_primitive():
        raise NotPrimitive(f"{v} is not primitive")
    l = isqrt(v.norm)
    if l * l != v.norm:
        raise InvalidInput(f"{v} does not have integer length")
    a, b, c = v
    generators = [
        (0, -c * l, b * l), (b * b + c * c, -a * b, -a * c),
        (c * l, 0, -a * l), (-a * b, a * a + c * c, -b * c),
        (-b * l, a * l, 0), (-a * c, -b * c, a * a + b * b),
    ]
    free = next(t for t in range(3) if v[t])
    pivots = [t for t in range(3) if t != free]
    b1, b2 = _echelon(generators, pivots)
    u, _ = _gauss_reduce(b1, b2)
    w = cross(v, u).exact_div(l)
    index = u.norm // l
    return (u, w), index


def icubes_containing(x, edge_norm, vectors=None):
    """
    Every cubic lattice with the given edge norm that contains x (exhaustive)

    Args:
        x: 3-vector
        edge_norm: perfect square
        vectors: precomputed enumerate_norm_vectors(edge_norm), if at hand

    Returns:
        set of frozensets, each the six signed basis vectors of one lattice
    """
    m = isqrt(edge_norm)
    if m * m != edge_norm:
        raise InvalidInput("icube edge norm must be a perfect square")
    if vectors is None:
        vectors = enumerate_norm_vectors(edge_norm)
    candidates = [u for u in vectors if x.dot(u) % edge_norm == 0]
    found = set()
    for u in candidates:
        for v in candidates:
            if u.dot(v):
                continue
            w = cross(u, v).exact_div(m)
            if x.dot(w) % edge_norm == 0:
                found.add(frozenset({u, -u, v, -v, w, -w}))
    return found
