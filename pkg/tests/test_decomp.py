import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiq.decomp import (
    NOT_DIVISIBLE,
    P_DIVIDES_FACTOR,
    RIGHT_DIVISOR_WITNESS,
    TWO_DIVIDES_NORM,
    count_all_vectors,
    count_nondivisible_conjugates,
    count_primitive_vectors,
    divisibility_analysis,
    legendre,
    nondivisible_conjugates_by_search,
    represent_pure,
    squarefree_decompose,
)
from cubiq.errors import InvalidInput, NotSquarefree
from cubiq.hurwitz import I, J, K, HQuat, hq_divides_integer, hq_enumerate_norm, hq_left_divides, hq_right_associates, scalar_div
from cubiq.lattice import enumerate_norm_vectors, orbit_representatives
from tests.strategies import hquats, ivecs


def L(a, b=0, c=0, d=0):
    return HQuat.lipschitz(a, b, c, d)


def P(x, y, z):
    return HQuat.pure(x, y, z)


@pytest.mark.parametrize("M, expected", [(1, (1, 1)), (72, (2, 6)), (245, (5, 7)), (30, (30, 1)), (49, (1, 7))])
def test_squarefree_decompose(M, expected):
    assert squarefree_decompose(M) == expected


def test_squarefree_decompose_rejects_zero():
    with pytest.raises(InvalidInput):
        squarefree_decompose(0)


def test_represent_pure_square_norm():
    delta = P(2, 2, 1)
    rep = represent_pure(delta)
    assert (rep.m, rep.n, rep.content) == (3, 1, 1)
    assert rep.beta == I
    assert rep.alpha in hq_right_associates(L(1, 0, 1, 1))
    assert rep.reassemble() == delta


def test_represent_pure_squarefree_norm():
    rep = represent_pure(P(1, 1, 0))
    assert rep.alpha == L(1)
    assert rep.beta == P(1, 1, 0)
    assert (rep.m, rep.n, rep.content) == (1, 2, 1)


def test_represent_pure_mixed_norm():
    delta = P(8, -10, 9)
    rep = represent_pure(delta)
    assert (rep.m, rep.n, rep.content) == (7, 5, 1)
    assert rep.alpha.norm == 7 and rep.beta.norm == 5
    assert rep.reassemble() == delta


def test_represent_pure_with_content():
    rep = represent_pure(P(2, 4, 4))
    assert rep.content == 2 and rep.m == 3
    assert rep.reassemble() == P(2, 4, 4)


@pytest.mark.parametrize("delta", [L(0), L(1, 1), HQuat(1, 1, 1, 1)])
def test_represent_pure_rejects(delta):
    with pytest.raises(InvalidInput):
        represent_pure(delta)


@settings(max_examples=200)
@given(ivecs())
def test_represent_pure_reassembles(v):
    rep = represent_pure(v.to_quat())
    g, core = v.primitive_split()
    assert rep.reassemble() == v.to_quat()
    assert rep.content == g
    assert rep.alpha.norm == rep.m and rep.beta.norm == rep.n
    assert rep.m * rep.m * rep.n == core.norm
    assert rep.beta.is_pure()


@pytest.mark.slow
def test_alpha_is_unique_up_to_right_associates():
    by_norm = {}
    for M in range(1, 501):
        for x in orbit_representatives(M):
            if not x.is_primitive():
                continue
            delta = x.to_quat()
            rep = represent_pure(delta)
            m = rep.m
            if m not in by_norm:
                by_norm[m] = hq_enumerate_norm(m)
            found = {a for a in by_norm[m] if scalar_div(a.conjugate() * delta * a, m * m) is not None}
            assert found == set(hq_right_associates(rep.alpha)), x


def test_divisibility_p_divides_factor():
    report = divisibility_analysis(3, I, 3)
    assert report.case == P_DIVIDES_FACTOR and report.divisible


def test_divisibility_two_divides_norm():
    report = divisibility_analysis(L(1, 1), J, 2)
    assert report.case == TWO_DIVIDES_NORM and report.divisible


def test_divisibility_not_divisible():
    report = divisibility_analysis(L(1, 0, 1, 1), K, 3)
    assert report.case == NOT_DIVISIBLE and not report.divisible
    assert divisibility_analysis(L(1, 2), I, 3).case == NOT_DIVISIBLE


def test_divisibility_right_divisor_witness():
    alpha, beta = L(1, 0, 1, 1), P(0, 1, 1)
    report = divisibility_analysis(alpha, beta, 3)
    assert report.case == RIGHT_DIVISOR_WITNESS and report.divisible
    pi, h = report.witness
    assert pi.norm == 3
    assert hq_left_divides(pi.conjugate(), beta + h)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divisibility_agrees_with_direct_division(p):
    # divisibility_analysis raises if its verdict differs from dividing outright
    for alpha in [L(1, 1), L(1, 0, 1, 1), L(2, 1), L(1, 1, 1, 1), HQuat(1, 1, 1, 1), L(3, 1, 1)]:
        for beta in [I, J, K, P(1, 1, 0), P(1, 2, 2), P(0, 1, 1)]:
            divisibility_analysis(alpha, beta, p)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(hquats(10, nonzero=True), ivecs(10), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_divisibility_verdict_on_random_triples(alpha, v, p):
    beta = v.to_quat()
    report = divisibility_analysis(alpha, beta, p)
    assert report.divisible == hq_divides_integer(alpha * beta * alpha.conjugate(), p)


def test_legendre():
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert legendre(14, 7) == 0
    assert legendre(-1, 5) == 1


@pytest.mark.parametrize("n, m, expected", [(1, 1, 6), (1, 5, 24), (1, 2, 0), (3, 3, 24), (2, 3, 24), (7, 1, 0)])
def test_count_primitive_vectors(n, m, expected):
    assert count_primitive_vectors(n, m) == expected


def test_count_primitive_vectors_rejects():
    with pytest.raises(NotSquarefree):
        count_primitive_vectors(4, 1)
    with pytest.raises(InvalidInput):
        count_primitive_vectors(0, 1)


@pytest.mark.parametrize("M, expected", [(1, 6), (4, 6), (7, 0), (9, 30), (25, 30)])
def test_count_all_vectors(M, expected):
    assert count_all_vectors(M) == expected


def test_counts_match_enumeration():
    for M in range(1, 301):
        vectors = enumerate_norm_vectors(M)
        n, m = squarefree_decompose(M)
        assert count_all_vectors(M) == len(vectors), M
        assert count_primitive_vectors(n, m) == sum(1 for v in vectors if v.is_primitive()), M


@pytest.mark.parametrize(
    "beta, p, l, expected",
    [(K, 5, 1, 24), (K, 2, 1, 0), (P(1, 1, 0), 3, 1, 24), (K, 3, 1, 24), (K, 3, 2, 72)],
)
def test_count_nondivisible_conjugates(beta, p, l, expected):
    assert count_nondivisible_conjugates(beta, p, l) == expected
    assert nondivisible_conjugates_by_search(beta, p, l) == expected


def test_count_nondivisible_conjugates_rejects():
    with pytest.raises(InvalidInput):
        count_nondivisible_conjugates(3 * K, 3, 1)
    with pytest.raises(InvalidInput):
        count_nondivisible_conjugates(K, 3, 0)
