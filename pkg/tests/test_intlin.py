from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cimc.intlin import determinant, is_mixed_dominating, minors_gcd, rank, smith_invariant_factors

PROP_COMPLETE_M = [[5, 0, 1], [-3, 0, 1], [0, 2, -1], [0, -3, -1]]


def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


def brute_minors_gcd(M, k):
    vals = [
        cofactor_det([[M[r][c] for c in cols] for r in rows])
        for rows in combinations(range(len(M)), k)
        for cols in combinations(range(len(M[0])), k)
    ]
    return reduce(gcd, (abs(v) for v in vals), 0)


def brute_rank(M):
    k = min(len(M), len(M[0]))
    while k and brute_minors_gcd(M, k) == 0:
        k -= 1
    return k


def brute_mixed_dominating(P):
    mixed = lambda rows: all(any(x > 0 for x in r) and any(x < 0 for x in r) for r in rows)  # noqa: E731
    if not mixed(P):
        return False
    for k in range(1, min(len(P), len(P[0])) + 1):
        for rows in combinations(range(len(P)), k):
            for cols in combinations(range(len(P[0])), k):
                if mixed([[P[r][c] for c in cols] for r in rows]):
                    return False
    return True


def test_smith_examples():
    assert smith_invariant_factors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert smith_invariant_factors([[2, 0], [0, 4]]) == [2, 4]
    assert smith_invariant_factors(PROP_COMPLETE_M) == [1, 1, 1]
    assert smith_invariant_factors([[2, 4], [6, 8]]) == [2, 4]
    with pytest.raises(ValueError, match="zero matrix has no invariant factors"):
        smith_invariant_factors([[0, 0], [0, 0]])


def test_minors_gcd_examples():
    assert minors_gcd([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == 1
    assert minors_gcd(PROP_COMPLETE_M, 3) == 1 == brute_minors_gcd(PROP_COMPLETE_M, 3)
    assert minors_gcd([[2, 0], [0, 4]], 2) == 8
    assert minors_gcd([[1, 2], [2, 4]], 2) == 0
    with pytest.raises(ValueError):
        minors_gcd([[1]], 0)
    with pytest.raises(ValueError):
        minors_gcd([[1, 2]], 2)


def test_mixed_dominating_examples():
    assert is_mixed_dominating([[1, -1]])
    assert not is_mixed_dominating([[1, -1], [-1, 1]])
    P = [list(r) for r in zip(*PROP_COMPLETE_M)]
    assert is_mixed_dominating(P) and brute_mixed_dominating(P)
    assert not is_mixed_dominating([[1, 2]])


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)
nonzero = matrices.filter(lambda M: any(any(r) for r in M))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_cofactor(M):
    assert determinant(M) == cofactor_det(M)


@given(nonzero)
def test_snf_product_is_minors_gcd(M):
    f = smith_invariant_factors(M)
    r = brute_rank(M)
    assert len(f) == r == rank(M)
    prod = 1
    for d in f:
        prod *= d
    assert prod == brute_minors_gcd(M, r)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


@given(nonzero, st.data())
def test_snf_invariance(M, data):
    f = smith_invariant_factors(M)
    rows = data.draw(st.permutations(range(len(M))))
    cols = data.draw(st.permutations(range(len(M[0]))))
    k = data.draw(st.integers(0, len(M) - 1))
    N = [[M[i][j] for j in cols] for i in rows]
    N[k] = [-x for x in N[k]]
    assert smith_invariant_factors(N) == f


@given(nonzero)
def test_snf_against_sympy(M):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    S = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    diag = [abs(int(S[i, i])) for i in range(min(S.shape)) if S[i, i] != 0]
    assert diag == smith_invariant_factors(M)


@given(st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_mixed_dominating_oracle(P):
    assert is_mixed_dominating(P) == brute_mixed_dominating(P)
