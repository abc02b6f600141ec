"""Tests for the exact integer linear algebra kernel.

Expected values are either trivial, verified by substitution, or computed
by the independent oracles in this file (brute-force minimal Bezout
search, permutation-expansion determinants, direct minor enumeration).
"""

import math
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfcomplex.exactlin import (
    IntMatrix,
    complete_to_unimodular,
    content,
    det,
    invariant_factors,
    inverse_unimodular,
    minors_gcd,
    smith_normal_form,
    xgcd,
)


# ---------------------------------------------------------------- oracles


def brute_minimal_bezout(a, b):
    """Exhaustive minimal Bezout pair: scan all candidate x, pick the
    (|x|, |y|)-lexicographically smallest solution, preferring x > 0."""
    g = math.gcd(a, b)
    if g == 0:
        return (0, 0, 0)
    best = None
    bound = max(1, abs(b) // g) + 1
    for x in range(-bound, bound + 1):
        if b == 0:
            if a * x == g:
                y_candidates = [0]
            else:
                continue
        else:
            if (g - a * x) % b != 0:
                continue
            y_candidates = [(g - a * x) // b]
        for y in y_candidates:
            key = (abs(x), abs(y), 0 if x > 0 else 1)
            if best is None or key < best[0]:
                best = (key, x, y)
    return (g, best[1], best[2])


def permutation_det(rows):
    """Leibniz-formula determinant, independent of the elimination code."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def all_minors(rows, k):
    m, n = len(rows), len(rows[0])
    out = []
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), k):
            out.append(permutation_det([[rows[i][j] for j in cs] for i in rs]))
    return out


def check_snf(a: IntMatrix):
    res = smith_normal_form(a)
    assert res.U @ a @ res.V == res.D
    assert det(res.U) in (1, -1)
    assert det(res.V) in (1, -1)
    diag = res.diagonal()
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j:
                assert res.D.entries[i][j] == 0
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        if y != 0:
            assert x != 0 and y % x == 0
        # zeros only trail
        if x == 0:
            assert y == 0
    return res


# ------------------------------------------------------------------ xgcd


def test_xgcd_examples():
    assert xgcd(2, 3) == (1, -1, 1)
    assert xgcd(0, 5) == (5, 0, 1)
    # 9*(-1) + (-10)*(-1) == 1: the sign-normalized minimal pair.
    assert xgcd(9, -10) == (1, -1, -1)
    assert xgcd(0, 0) == (0, 0, 0)


def test_xgcd_matches_brute_force_minimal_pair():
    for a in range(-40, 41):
        for b in range(-40, 41):
            assert xgcd(a, b) == brute_minimal_bezout(a, b), (a, b)


@given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12))
def test_xgcd_identity_and_bounds(a, b):
    g, x, y = xgcd(a, b)
    assert g == math.gcd(a, b)
    assert a * x + b * y == g
    if g != 0:
        assert abs(x) <= max(1, abs(b) // g)
        assert abs(y) <= max(1, abs(a) // g)


# --------------------------------------------------------------- content


def test_content():
    assert content((-2, 4, -6)) == 2
    assert content((0, 0, 1)) == 1
    assert content((9, -10, 0)) == 1
    assert content((0, 0, 0)) == 0
    with pytest.raises(ValueError):
        content(())


# ------------------------------------------------------------------- det


def test_det_examples():
    assert det(IntMatrix(((0, 1, 0), (-1, 2, 0), (0, 0, 1)))) == 1
    assert det(IntMatrix.identity(3)) == 1
    assert det(IntMatrix(((1, 0, 1), (0, 1, 1), (0, 0, 2)))) == 2


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(IntMatrix(((1, 2, 3), (4, 5, 6))))


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-50, 50), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_det_matches_permutation_expansion(rows):
    assert det(IntMatrix.from_rows(rows)) == permutation_det(rows)


# ------------------------------------------------------------ minors_gcd


def test_minors_gcd_examples():
    a = IntMatrix.from_columns([(1, 0, 0), (0, 1, 2)])
    assert minors_gcd(a, 2) == 1
    b = IntMatrix.from_columns([(1, 0, 0), (1, 2, 0)])
    assert minors_gcd(b, 2) == 2
    c = IntMatrix.from_columns([(2, 3, 5)])
    assert minors_gcd(c, 1) == 1
    with pytest.raises(ValueError):
        minors_gcd(a, 3)
    with pytest.raises(ValueError):
        minors_gcd(a, 0)


@given(
    st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=2, max_size=4),
    st.integers(1, 2),
)
def test_minors_gcd_matches_enumeration(rows, k):
    a = IntMatrix.from_rows(rows)
    assert minors_gcd(a, k) == math.gcd(*all_minors(rows, k))


# ----------------------------------------------------------------- SNF


def test_snf_reduction_example():
    res = check_snf(IntMatrix(((9, -10),)))
    assert res.D.entries == ((1, 0),)


def test_snf_zero_matrix():
    a = IntMatrix(((0, 0), (0, 0), (0, 0)))
    res = check_snf(a)
    assert res.D == a
    assert res.U == IntMatrix.identity(3)
    assert res.V == IntMatrix.identity(2)


def test_snf_divisibility_example():
    res = check_snf(IntMatrix(((2, 4), (6, 8))))
    assert res.diagonal() == (2, 4)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 6),
    st.integers(1, 6),
    st.data(),
)
def test_snf_certificates_random(m, n, data):
    rows = data.draw(
        st.lists(
            st.lists(st.integers(-100, 100), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
    a = IntMatrix.from_rows(rows)
    res = check_snf(a)
    if m == n:
        prod = 1
        for d in res.diagonal():
            prod *= d
        assert prod == abs(det(a))


def test_minors_gcd_iff_snf_ones_exhaustive_3x2():
    """minors_gcd(A, k) == 1 exactly when the Smith form of A starts with
    k ones, over all 3x2 matrices with entries in [-3, 3]."""
    span = range(-3, 4)
    for entries in product(span, repeat=6):
        rows = [entries[0:2], entries[2:4], entries[4:6]]
        diag = invariant_factors(rows)
        a = IntMatrix.from_rows(rows)
        for k in (1, 2):
            ones = sum(1 for d in diag[:k] if d == 1)
            assert (minors_gcd(a, k) == 1) == (ones == k)


def test_invariant_factors_matches_full_snf():
    rows = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    assert invariant_factors(rows) == smith_normal_form(IntMatrix.from_rows(rows)).diagonal()


# ------------------------------------------------- unimodular completion


def test_complete_to_unimodular_examples():
    m = complete_to_unimodular((0, 0, 1))
    assert m.column(0) == (0, 0, 1)
    assert det(m) == 1
    assert sorted(abs(e) for row in m.entries for e in row) == [0, 0, 0, 0, 0, 0, 1, 1, 1]

    m = complete_to_unimodular((2, 3, 5))
    assert m.column(0) == (2, 3, 5)
    assert det(m) == 1

    assert complete_to_unimodular((1, 0, 0)) == IntMatrix.identity(3)


def test_complete_to_unimodular_rejects_imprimitive():
    with pytest.raises(ValueError):
        complete_to_unimodular((2, 4, 6))
    with pytest.raises(ValueError):
        complete_to_unimodular((0, 0, 0))


def test_complete_to_unimodular_exhaustive_height_10():
    span = range(-10, 11)
    for v in product(span, repeat=3):
        if v == (0, 0, 0) or math.gcd(*v) != 1:
            continue
        m = complete_to_unimodular(v)
        assert m.column(0) == v
        assert det(m) == 1


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-(10**6), 10**6), min_size=2, max_size=5))
def test_complete_to_unimodular_random_large(v):
    g = math.gcd(*v)
    if g == 0:
        return
    v = tuple(e // g for e in v)
    m = complete_to_unimodular(v)
    assert m.column(0) == v
    assert det(m) == 1


def test_inverse_unimodular():
    m = complete_to_unimodular((2, 3, 5))
    inv = inverse_unimodular(m)
    assert m @ inv == IntMatrix.identity(3)
    assert inv @ m == IntMatrix.identity(3)
    with pytest.raises(ValueError):
        inverse_unimodular(IntMatrix(((2, 0), (0, 1))))


# --------------------------------------------------------------- matrix


def test_int_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix(())
    with pytest.raises(ValueError):
        IntMatrix(((1, 2), (3,)))
    with pytest.raises(TypeError):
        IntMatrix(((1.5, 2),))


def test_int_matrix_ops():
    a = IntMatrix(((1, 2), (3, 4)))
    assert a.transpose() == IntMatrix(((1, 3), (2, 4)))
    assert a @ IntMatrix.identity(2) == a
    assert a.apply((1, 1)) == (3, 7)
    assert a.column(1) == (2, 4)
    assert IntMatrix.from_columns([(1, 3), (2, 4)]) == a
