"""Exact integer-matrix platform: the semidirect product Z^n x| Z.

Elements are pairs (v, k) with v an integer vector and k an integer; the
twisting automorphism is a fixed unimodular matrix M, acting by

    (v1, k1) * (v2, k2) = (v1 + M^k1 v2, k1 + k2).

With M hyperbolic (an eigenvalue off the unit circle) the group is not
virtually nilpotent and its word growth is exponential, which is what makes
it interesting as a key-space platform.  All arithmetic is exact
arbitrary-precision integer arithmetic; there are no overflow semantics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PresentationError, WireFormatError
from .group import Group
from .wire import format_int, parse_strict_int

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]
MatPayload = tuple[Vector, int]

_POW_CACHE_LIMIT = 64


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * cols[j][k] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    det = determinant(a)
    if det not in (1, -1):
        raise PresentationError(f"matrix is not unimodular (det={det})")
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    out = tuple(tuple(int(x) for x in row[n:]) for row in work)
    return out


def matrix_power(m: Matrix, k: int) -> Matrix:
    """Exact m**k by square-and-multiply; negative k needs det = +-1."""
    n = len(m)
    if k < 0:
        return matrix_power(mat_inverse(m), -k)
    result = identity_matrix(n)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def char_poly(a: Matrix) -> tuple[int, ...]:
    """Coefficients (c0..cn) of det(xI - A), by Faddeev-LeVerrier.

    Similar matrices share this polynomial, so it is a cheap necessary
    condition for conjugacy; used as a test heuristic only.
    """
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    frac_a = tuple(tuple(Fraction(x) for x in row) for row in a)
    m = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        m = _frac_mat_mul(frac_a, m)
        m = tuple(
            tuple(m[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n))
            for i in range(n)
        )
        am = _frac_mat_mul(frac_a, m)
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    out = tuple(int(c) for c in coeffs)
    return out


def _frac_mat_mul(a, b):
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * cols[j][k] for k in range(n)) for j in range(n)) for i in range(n)
    )


DEFAULT_ANOSOV = ((2, 1), (1, 1))


class MatGroup(Group):
    """Z^n x| Z for a fixed unimodular integer matrix M.

    Platform generators are the n standard basis translations (e_i, 0)
    followed by the twisting generator t = (0, 1); ngens = n + 1.
    """

    kind = "mat"

    def __init__(self, matrix: Sequence[Sequence[int]] = DEFAULT_ANOSOV, *, name: str | None = None):
        m = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(m)
        if n < 1 or any(len(row) != n for row in m):
            raise PresentationError("matrix must be square and nonempty")
        if determinant(m) not in (1, -1):
            raise PresentationError("matrix must be unimodular (det = +-1)")
        self.matrix: Matrix = m
        self.dim = n
        self.name = name
        self._minv = mat_inverse(m)
        self._pow_cache: dict[int, Matrix] = {
            0: identity_matrix(n),
            1: m,
            -1: self._minv,
        }

    def twist_power(self, k: int) -> Matrix:
        """M**k, cached for the small exponents that dominate group ops."""
        cached = self._pow_cache.get(k)
        if cached is not None:
            return cached
        if abs(k) <= _POW_CACHE_LIMIT:
            step = self.matrix if k > 0 else self._minv
            near = k - 1 if k > 0 else k + 1
            out = mat_mul(self.twist_power(near), step)
            self._pow_cache[k] = out
            return out
        return matrix_power(self.matrix, k)

    @property
    def ngens(self) -> int:
        return self.dim + 1

    def identity_payload(self) -> MatPayload:
        return ((0,) * self.dim, 0)

    def generator_payload(self, index: int) -> MatPayload:
        if index == self.dim:
            return ((0,) * self.dim, 1)
        return (tuple(1 if j == index else 0 for j in range(self.dim)), 0)

    def mul_payload(self, p: MatPayload, q: MatPayload) -> MatPayload:
        (va, ka), (vb, kb) = p, q
        if len(va) != len(vb):
            raise ValueError("dimension mismatch")
        tv = mat_vec(self.twist_power(ka), vb)
        return (tuple(x + y for x, y in zip(va, tv)), ka + kb)

    def inv_payload(self, p: MatPayload) -> MatPayload:
        v, k = p
        tv = mat_vec(self.twist_power(-k), v)
        return (tuple(-x for x in tv), -k)

    def element(self, payload):
        v, k = payload
        v = tuple(v)
        if len(v) != self.dim or not all(isinstance(x, int) for x in v) or not isinstance(k, int):
            raise ValueError(f"payload must be ({self.dim} integers, integer)")
        return super().element((v, k))

    def payload_to_wire(self, p: MatPayload) -> str:
        v, k = p
        return "mat " + " ".join(format_int(x) for x in v) + " ; " + format_int(k)

    def payload_from_wire(self, line: str) -> MatPayload:
        tokens = line.split(" ")
        if tokens[0] != "mat" or len(tokens) != self.dim + 3 or tokens[-2] != ";":
            raise WireFormatError(
                f"expected 'mat <{self.dim} ints> ; <int>' line: {line!r}"
            )
        v = tuple(parse_strict_int(t) for t in tokens[1 : 1 + self.dim])
        k = parse_strict_int(tokens[-1])
        return (v, k)

    def embedding_matrix(self, p: MatPayload) -> Matrix:
        """Faithful (n+1)x(n+1) image [[M^k, v], [0, 1]] of an element."""
        v, k = p
        mk = self.twist_power(k)
        rows = [tuple(mk[i]) + (v[i],) for i in range(self.dim)]
        rows.append((0,) * self.dim + (1,))
        return tuple(rows)

    def conjugacy_invariant(self, p: MatPayload) -> tuple[int, ...]:
        """Characteristic polynomial of the embedded matrix (test heuristic)."""
        return char_poly(self.embedding_matrix(p))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatGroup):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)


def format_matgroup(group: MatGroup) -> list[str]:
    lines = [f"matgroup n={group.dim}"]
    for row in group.matrix:
        lines.append(" ".join(format_int(x) for x in row))
    return lines


def parse_matgroup(lines: Sequence[str], **kwargs) -> MatGroup:
    if not lines or not lines[0].startswith("matgroup n="):
        raise PresentationError("matrix group block must start with 'matgroup n=<n>'")
    n = parse_strict_int(lines[0][len("matgroup n="):])
    if n < 1:
        raise PresentationError("matrix dimension must be >= 1")
    if len(lines) != n + 1:
        raise PresentationError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        tokens = line.split(" ")
        if len(tokens) != n:
            raise PresentationError(f"matrix row needs {n} entries: {line!r}")
        rows.append(tuple(parse_strict_int(t) for t in tokens))
    return MatGroup(tuple(rows), **kwargs)
