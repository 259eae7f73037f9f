"""GF(q) kernel tests: agreement with exact Fraction references."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formata import gfq

Q = 101


def frac_charpoly(A):
    """det(xI - A) by exact Fraction Gaussian elimination at sample points."""
    # Faddeev-LeVerrier: exact integer characteristic polynomial
    n = A.shape[0]
    M = np.zeros((n, n), dtype=object)
    coeffs = [Fraction(1)]
    I = np.eye(n, dtype=object)
    Af = A.astype(object)
    for k in range(1, n + 1):
        M = Af @ M + coeffs[-1] * I
        c = Fraction(-np.trace(Af @ M), k)
        coeffs.append(c)
    return list(reversed(coeffs))  # ascending


mats = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=0, max_value=Q - 1), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@settings(max_examples=40, deadline=None)
@given(mats)
def test_charpoly_matches_faddeev_leverrier(rows):
    A = np.array(rows, dtype=np.int64)
    got = gfq.charpoly_mod(A, Q)
    ref = [int(c) % Q for c in frac_charpoly(A)]
    assert list(got) == ref


@settings(max_examples=40, deadline=None)
@given(mats)
def test_rref_idempotent_and_rank(rows):
    A = np.array(rows, dtype=np.int64)
    R, piv = gfq.rref_mod(A, Q)
    R2, piv2 = gfq.rref_mod(R, Q)
    assert np.array_equal(R, R2)
    assert list(piv) == list(piv2)
    for r, c in enumerate(piv):
        col = R[:, c]
        assert col[r] == 1 and np.count_nonzero(col) == 1


@settings(max_examples=40, deadline=None)
@given(mats)
def test_nullspace_annihilates_and_spans(rows):
    A = np.array(rows, dtype=np.int64)
    ns = gfq.nullspace_mod(A, Q)
    if ns.shape[0]:
        assert not np.any((A @ ns.T) % Q)
    _, piv = gfq.rref_mod(A, Q)
    assert ns.shape[0] == A.shape[1] - len(piv)


def test_poly_roots_exhaustive():
    # (x - 3)(x - 5)(x^2 + 1) over GF(101); 10^2 = 100 = -1 so x^2+1 has roots 10, 91
    coeffs = np.array([1], dtype=np.int64)
    for poly in ([(-3) % Q, 1], [(-5) % Q, 1], [1, 0, 1]):
        out = np.zeros(len(coeffs) + len(poly) - 1, dtype=np.int64)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(poly):
                out[i + j] = (out[i + j] + a * b) % Q
        coeffs = out
    assert gfq.poly_roots_mod(coeffs, Q) == [3, 5, 10, 91]


def test_matmul_matches_python():
    rng = np.random.default_rng(3)
    A = rng.integers(0, Q, size=(5, 7))
    B = rng.integers(0, Q, size=(7, 4))
    got = gfq.matmul_mod(A, B, Q)
    ref = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(7)) % Q for j in range(4)] for i in range(5)]
    assert got.tolist() == ref


def test_singular_matrix_has_zero_det_coeff():
    A = np.array([[1, 2], [2, 4]], dtype=np.int64)
    cp = gfq.charpoly_mod(A, Q)
    assert cp[0] == 0  # det = constant term up to sign


def test_backend_flag(monkeypatch):
    # the module honors FORMATA_NO_NUMBA at import; here just sanity check name
    assert gfq.backend_name() in ("numba", "numpy")
