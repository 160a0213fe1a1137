"""Dense linear algebra over prime fields GF(p).

Matrices are plain ``numpy.int64`` arrays whose entries are residues in
``[0, p)``.  All routines are pure: inputs are never modified and results
are fresh arrays.  Vectors are rows; a linear map ``V -> W`` between spaces
of dimensions ``m`` and ``n`` is an ``m x n`` matrix acting on the right.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

MAX_PRIME = 2**31
_INT64_MAX = 2**63 - 1
_TABLE_LIMIT = 2**16
# below this many entries elimination runs on Python lists
_SMALL = 120


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """The prime field GF(p) together with the matrix routines over it."""

    __slots__ = ("prime", "__dict__")

    def __init__(self, prime: int):
        prime = int(prime)
        if not 2 <= prime < MAX_PRIME or not is_prime(prime):
            raise ValueError(f"{prime} is not a prime below 2**31")
        self.prime = prime

    def __repr__(self) -> str:
        return f"GF({self.prime})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and other.prime == self.prime

    def __hash__(self) -> int:
        return hash(("GF", self.prime))

    def __reduce__(self):
        return (FieldSpec, (self.prime,))

    @cached_property
    def _inverse_table(self) -> np.ndarray | None:
        p = self.prime
        if p > _TABLE_LIMIT:
            return None
        table = np.zeros(p, dtype=np.int64)
        for x in range(1, p):
            table[x] = pow(x, -1, p)
        return table

    @cached_property
    def _chunk(self) -> int:
        # longest inner dimension whose int64 dot products cannot overflow
        return max(1, _INT64_MAX // max(1, (self.prime - 1) ** 2))

    def inv(self, x: int) -> int:
        x = int(x) % self.prime
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        table = self._inverse_table
        if table is not None:
            return int(table[x])
        return pow(x, -1, self.prime)

    # construction ---------------------------------------------------------

    def matrix(self, rows, cols: int = 0) -> np.ndarray:
        """Reduce a nested list of integers into a residue matrix.

        ``cols`` fixes the width when ``rows`` is empty.
        """
        rows = [[int(x) % self.prime for x in row] for row in rows]
        if not rows:
            return np.zeros((0, cols), dtype=np.int64)
        return np.array(rows, dtype=np.int64).reshape(len(rows), -1)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def random(self, rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.prime, size=(rows, cols), dtype=np.int64)

    # arithmetic -----------------------------------------------------------

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
        k = a.shape[1]
        chunk = self._chunk
        if k <= chunk:
            return (a @ b) % self.prime
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for s in range(0, k, chunk):
            out = (out + (a[:, s : s + chunk] @ b[s : s + chunk]) % self.prime) % self.prime
        return out

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.prime

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return (a * (int(c) % self.prime)) % self.prime

    def neg(self, a: np.ndarray) -> np.ndarray:
        return (-a) % self.prime

    # elimination ----------------------------------------------------------

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the (strictly increasing) pivot columns.

        Pivoting takes the first nonzero entry of each column in order, so the
        result is the unique RREF of ``m``.
        """
        a = np.array(m, dtype=np.int64) % self.prime
        if a.size <= _SMALL:
            return self._rref_small(a)
        return self._rref_numpy(a)

    def _rref_small(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        # plain lists beat numpy's per-call overhead on tiny matrices
        p = self.prime
        rows, cols = a.shape
        m = a.tolist()
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = next((i for i in range(r, rows) if m[i][c]), None)
            if k is None:
                continue
            m[r], m[k] = m[k], m[r]
            row = m[r]
            if row[c] != 1:
                f = self.inv(row[c])
                row = m[r] = [x * f % p for x in row]
            for i in range(rows):
                f = m[i][c]
                if i != r and f:
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], row)]
            pivots.append(c)
            r += 1
        return np.array(m, dtype=np.int64).reshape(rows, cols), pivots

    def _rref_numpy(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        p = self.prime
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            mask = a[r:, c] != 0
            k = int(mask.argmax())
            if not mask[k]:
                continue
            k += r
            if k != r:
                a[[r, k]] = a[[k, r]]
            pivot = int(a[r, c])
            if pivot != 1:
                a[r] = a[r] * self.inv(pivot) % p
            col = a[:, c].copy()
            col[r] = 0
            hit = col.nonzero()[0]
            if hit.size:
                a[hit] = (a[hit] - (col[hit, None] * a[r][None, :]) % p) % p
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, m: np.ndarray) -> int:
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def row_basis(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """RREF basis of the row space (zero rows dropped) and its pivots."""
        if m.shape[0] == 0:
            return np.zeros((0, m.shape[1]), dtype=np.int64), []
        r, pivots = self.rref(m)
        return r[: len(pivots)], pivots

    def kernel_basis(self, m: np.ndarray) -> np.ndarray:
        """Rows spanning the right null space ``{v : m @ v.T == 0}``."""
        cols = m.shape[1]
        if m.shape[0] == 0:
            return np.eye(cols, dtype=np.int64)
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in set(pivots)]
        k = np.zeros((len(free), cols), dtype=np.int64)
        if not free:
            return k
        k[np.arange(len(free)), free] = 1
        if pivots:
            k[:, pivots] = (-r[: len(pivots)][:, free].T) % self.prime
        return k

    def left_kernel(self, m: np.ndarray) -> np.ndarray:
        """Rows spanning ``{v : v @ m == 0}``."""
        return self.kernel_basis(m.T)

    def solve_right(self, m: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some ``X`` with ``m @ X == b``, free variables set to zero; None if none exists."""
        if m.shape[0] != b.shape[0]:
            raise ValueError(f"row mismatch {m.shape} vs {b.shape}")
        n = m.shape[1]
        aug = np.hstack([m % self.prime, b % self.prime])
        r, pivots = self.rref(aug)
        if pivots and pivots[-1] >= n:
            return None
        x = np.zeros((n, b.shape[1]), dtype=np.int64)
        for row, c in enumerate(pivots):
            x[c] = r[row, n:]
        return x

    def inverse(self, m: np.ndarray) -> np.ndarray | None:
        n = m.shape[0]
        if m.shape != (n, n):
            return None
        return self.solve_right(m, np.eye(n, dtype=np.int64)) if self.rank(m) == n else None

    def is_invertible(self, m: np.ndarray) -> bool:
        n = m.shape[0]
        return m.shape == (n, n) and (n == 0 or self.rank(m) == n)
