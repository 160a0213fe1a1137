import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from injrad.exactlinalg import FieldSpec, is_prime

F2, F3, F5, F101 = FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(101)


def matrices(prime, max_rows=7, max_cols=7):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(st.integers(0, prime - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c)
            )
        )
    )


def test_field_rejects_composites_and_large_primes():
    with pytest.raises(ValueError):
        FieldSpec(91)
    with pytest.raises(ValueError):
        FieldSpec(2**31 + 11)
    assert FieldSpec(2**31 - 1).prime == 2**31 - 1


def test_is_prime_against_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert [n for n in range(500) if is_prime(n)] == [n for n in range(500) if slow(n)]


def test_inverses_small_and_large_fields():
    for f in (F5, F101, FieldSpec(65537), FieldSpec(2**31 - 1)):
        for x in (1, 2, 3, f.prime - 1):
            assert x * f.inv(x) % f.prime == 1


def test_rref_identity_and_zero():
    r, piv = F5.rref(F5.identity(2))
    assert (r == np.eye(2)).all() and piv == [0, 1]
    r, piv = F5.rref(F5.zeros(3, 2))
    assert not r.any() and piv == []


def test_rref_hand_example():
    r, piv = F5.rref(F5.matrix([[2, 4], [1, 2]]))
    assert r.tolist() == [[1, 2], [0, 0]]
    assert piv == [0]


def test_kernel_examples():
    assert F101.kernel_basis(F101.identity(4)).shape == (0, 4)
    k = F101.kernel_basis(F101.zeros(2, 3))
    assert k.shape == (3, 3) and F101.rank(k) == 3
    assert F2.kernel_basis(F2.matrix([[1, 1]])).tolist() == [[1, 1]]


def test_solve_examples():
    b = F3.matrix([[2], [1]])
    assert F3.solve_right(F3.identity(2), b).tolist() == [[2], [1]]
    assert F3.solve_right(F3.zeros(2, 2), b) is None
    assert F3.solve_right(F3.matrix([[1, 1], [0, 1]]), b).tolist() == [[1], [1]]


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        F3.solve_right(F3.identity(2), F3.zeros(3, 1))


def test_large_prime_matmul_does_not_overflow():
    f = FieldSpec(2**31 - 1)
    a = np.full((3, 200), f.prime - 1, dtype=np.int64)
    expected = [[(200 * (f.prime - 1) ** 2) % f.prime] * 3] * 3
    assert f.matmul(a, a.T).tolist() == expected


def test_small_and_numpy_elimination_agree():
    rng = np.random.default_rng(7)
    for _ in range(50):
        r, c = rng.integers(1, 12, size=2)
        m = F101.random(r, c, rng)
        m[:, rng.integers(0, c)] = 0
        x, px = F101._rref_small(m.copy())
        y, py = F101._rref_numpy(m.copy())
        assert px == py and (x == y).all()


@settings(max_examples=150, deadline=None)
@given(matrices(5))
def test_rref_idempotent(m):
    r, piv = F5.rref(m)
    r2, piv2 = F5.rref(r)
    assert (r == r2).all() and piv == piv2
    assert piv == sorted(set(piv))


@settings(max_examples=150, deadline=None)
@given(matrices(101))
def test_rank_nullity(m):
    assert F101.rank(m) + F101.kernel_basis(m).shape[0] == m.shape[1]


@settings(max_examples=150, deadline=None)
@given(matrices(3), st.integers(1, 3))
def test_solve_sound(m, k):
    rng = np.random.default_rng(m.size)
    b = F3.random(m.shape[0], k, rng)
    x = F3.solve_right(m, b)
    if x is not None:
        assert (F3.matmul(m, x) == b).all()
    # b taken from the column space is always solvable
    y = F3.random(m.shape[1], k, rng)
    assert F3.solve_right(m, F3.matmul(m, y)) is not None


def test_random_kernels_vanish():
    rng = np.random.default_rng(2024)
    for f in (F2, F101):
        for _ in range(1000):
            r, c = rng.integers(1, 9, size=2)
            m = f.random(r, c, rng)
            k = f.kernel_basis(m)
            assert not f.matmul(m, k.T).any()


def test_inverse_roundtrip():
    rng = np.random.default_rng(3)
    for _ in range(40):
        m = F101.random(4, 4, rng)
        inv = F101.inverse(m)
        if inv is None:
            assert not F101.is_invertible(m)
        else:
            assert (F101.matmul(m, inv) == np.eye(4)).all()
