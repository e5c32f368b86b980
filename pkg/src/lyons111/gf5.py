"""Exact dense linear algebra over the field with five elements.

Vectors are rows and matrices act on the right (v -> v @ m), matching the
convention used throughout the construction.  All values are immutable;
every operation returns a fresh object.
"""

from __future__ import annotations

import numpy as np

from . import _backend

P = 5
# multiplicative inverses 1..4 (index 0 unused)
_INV = (0, 1, 3, 2, 4)


class MatrixFormatError(ValueError):
    """Malformed matrix text; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _as_entries(data):
    arr = np.asarray(data, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
    arr = np.mod(arr, P).astype(np.uint8)
    arr.flags.writeable = False
    return arr


class Mat:
    """Immutable matrix over GF(5), entries stored one per byte, row-major."""

    __slots__ = ("a", "_key")

    def __init__(self, data):
        if isinstance(data, Mat):
            self.a = data.a
        else:
            self.a = _as_entries(data)
        self._key = None

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def is_square(self):
        return self.a.shape[0] == self.a.shape[1]

    def key(self):
        """Canonical bytes encoding (used for hashing and set membership)."""
        if self._key is None:
            self._key = self.a.tobytes()
        return self._key

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})"
            )
        return _wrap(_backend.matmul(self.a, other.a))

    def __add__(self, other):
        other = _coerce(other, self)
        return Mat((self.a.astype(np.int64) + other.a) % P)

    def __sub__(self, other):
        other = _coerce(other, self)
        return Mat((self.a.astype(np.int64) - other.a) % P)

    def __neg__(self):
        return Mat((-self.a.astype(np.int64)) % P)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return Mat((self.a.astype(np.int64) * scalar) % P)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return inv(self) ** (-n)
        result = identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base_needed = n >> 1
            if base_needed:
                base = base @ base
            n = base_needed
        return result

    @property
    def T(self):
        return Mat(self.a.T)

    def trace(self):
        return int(self.a.trace() % P)

    def is_zero(self):
        return not self.a.any()

    def is_identity(self):
        return self.is_square and np.array_equal(self.a, np.eye(self.rows, dtype=np.uint8))

    def conj(self, k):
        """Conjugate self^k = k^-1 @ self @ k."""
        return inv(k) @ self @ k

    def __eq__(self, other):
        return isinstance(other, Mat) and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def _wrap(arr):
    m = Mat.__new__(Mat)
    arr.flags.writeable = False
    m.a = arr
    m._key = None
    return m


def _coerce(other, like):
    if isinstance(other, Mat):
        if other.a.shape != like.a.shape:
            raise ValueError("dimension mismatch in matrix addition")
        return other
    if isinstance(other, int):
        if not like.is_square:
            raise ValueError("scalar shift of a non-square matrix")
        return Mat(other * np.eye(like.rows, dtype=np.int64))
    raise TypeError(f"cannot combine Mat with {type(other)!r}")


def identity(n):
    return Mat(np.eye(n, dtype=np.uint8))


def zeros(rows, cols=None):
    return Mat(np.zeros((rows, rows if cols is None else cols), dtype=np.uint8))


def _rref_array(arr):
    """Reduced row echelon form of a uint8 array; returns (rows, pivot columns)."""
    m = arr.astype(np.int64) % P
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        top = r + nz[0]
        if top != r:
            m[[r, top]] = m[[top, r]]
        m[r] = (m[r] * _INV[m[r, c]]) % P
        other = np.nonzero(m[:, c])[0]
        other = other[other != r]
        if other.size:
            m[other] = (m[other] - np.outer(m[other, c], m[r])) % P
        pivots.append(c)
        r += 1
    return m[:r].astype(np.uint8), pivots


class Subspace:
    """Row space given by its canonical reduced echelon basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis):
        basis = np.asarray(basis, dtype=np.uint8)
        if basis.size == 0:
            basis = basis.reshape(0, ambient)
        if basis.shape[1] != ambient:
            raise ValueError("basis width does not match ambient dimension")
        basis.flags.writeable = False
        self.ambient = ambient
        self.basis = basis

    @property
    def dim(self):
        return self.basis.shape[0]

    def basis_mat(self):
        return Mat(self.basis)

    def contains_vector(self, v):
        v = np.asarray(v, dtype=np.int64) % P
        r = v.copy()
        for row in self.basis:
            piv = np.nonzero(row)[0][0]
            if r[piv]:
                r = (r - r[piv] * row.astype(np.int64)) % P
        return not r.any()

    def contains(self, other):
        return all(self.contains_vector(row) for row in other.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.ambient, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def rref(m):
    """Echelon basis of the row space of m (idempotent)."""
    arr = m.a if isinstance(m, Mat) else _as_entries(m)
    basis, _ = _rref_array(arr)
    return Subspace(arr.shape[1], basis)


def whole_space(n):
    return Subspace(n, np.eye(n, dtype=np.uint8))


def det(m):
    """Determinant by Gaussian elimination mod 5."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    a = m.a.astype(np.int64).copy()
    n = a.shape[0]
    d = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        top = c + nz[0]
        if top != c:
            a[[c, top]] = a[[top, c]]
            d = (-d) % P
        d = (d * a[c, c]) % P
        factor = _INV[a[c, c]]
        rest = np.nonzero(a[c + 1 :, c])[0] + c + 1
        if rest.size:
            a[rest] = (a[rest] - np.outer(a[rest, c] * factor % P, a[c])) % P
    return int(d)


def inv(m):
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = np.hstack([m.a, np.eye(n, dtype=np.uint8)])
    red, pivots = _rref_array(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Mat(red[:, n:])


def kernel(m):
    """Left kernel {v : v @ m = 0} as a Subspace of F5^rows."""
    arr = m.a if isinstance(m, Mat) else _as_entries(m)
    red, pivots = _rref_array(arr.T)
    n = arr.shape[0]
    free = [c for c in range(n) if c not in pivots]
    vecs = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        vecs[i, f] = 1
        for r, pcol in enumerate(pivots):
            vecs[i, pcol] = (-int(red[r, f])) % P
    basis, _ = _rref_array(vecs)
    return Subspace(n, basis)


def fixed_space(gens):
    """Common fixed vectors {v : v @ g = v for every g}."""
    mats = list(gens)
    if not mats:
        raise ValueError("need at least one generator")
    n = mats[0].rows
    for g in mats:
        if not g.is_square or g.rows != n:
            raise ValueError("dimension mismatch among generators")
    stacked = np.hstack([(g.a.astype(np.int64) - np.eye(n, dtype=np.int64)) % P for g in mats])
    return kernel(Mat(stacked))


def element_order(m, cap=10_000):
    """Least n >= 1 with m**n = 1; raises if it would exceed cap."""
    if not m.is_square:
        raise ValueError("order of a non-square matrix")
    if det(m) == 0:
        raise ValueError("order of a singular matrix")
    one = identity(m.rows)
    x = m
    for n in range(1, cap + 1):
        if x == one:
            return n
        x = x @ m
    raise ValueError(f"element order exceeds cap {cap}")


def nilpotency_index(m):
    """Least n with m**n = 0, or None if m is not nilpotent.

    Over a field the index of a nilpotent d x d matrix is at most d, so the
    search stops there.
    """
    if not m.is_square:
        raise ValueError("nilpotency of a non-square matrix")
    x = m
    for n in range(1, m.rows + 1):
        if x.is_zero():
            return n
        x = x @ m
    return None


def exp5(u):
    """Truncated exponential 1 + u + 3u^2 + u^3 + 4u^4, defined when u^5 = 0."""
    u2 = u @ u
    u4 = u2 @ u2
    if not (u4 @ u).is_zero():
        raise ValueError("exp5 requires u^5 = 0")
    u3 = u2 @ u
    return identity(u.rows) + u + 3 * u2 + u3 + 4 * u4


def log5(x):
    """Truncated logarithm u + 2u^2 + 2u^3 + u^4 with u = x - 1."""
    u = x - identity(x.rows)
    u2 = u @ u
    u4 = u2 @ u2
    if not (u4 @ u).is_zero():
        raise ValueError("log5 requires (x - 1)^5 = 0")
    u3 = u2 @ u
    return u + 2 * u2 + 2 * u3 + u4


def span_closure(seed, ops):
    """Smallest subspace containing seed and stable under right action by ops."""
    ops = list(ops)
    current = rref(Mat(seed.basis)) if seed.dim else seed
    while True:
        rows = [current.basis]
        for op in ops:
            if op.rows != current.ambient:
                raise ValueError("operator dimension does not match ambient space")
            rows.append(_backend.matmul(current.basis, op.a))
        nxt = rref(Mat(np.vstack(rows)))
        if nxt == current:
            return current
        current = nxt


def orth_complement(space, gram):
    """{v : v . gram . w^T = 0 for all w in space} for a square gram matrix."""
    if not gram.is_square or gram.rows != space.ambient:
        raise ValueError("gram matrix dimension mismatch")
    if space.dim == 0:
        return whole_space(space.ambient)
    return kernel(gram @ Mat(space.basis).T)


def kron(a, b):
    return Mat(np.kron(a.a.astype(np.int64), b.a.astype(np.int64)) % P)


def dirsum(a, b):
    out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=np.uint8)
    out[: a.rows, : a.cols] = a.a
    out[a.rows :, a.cols :] = b.a
    return Mat(out)


def compose(kind, a, b):
    if kind == "kron":
        return kron(a, b)
    if kind == "dirsum":
        return dirsum(a, b)
    raise ValueError(f"unknown composition {kind!r}")


def dirsum_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = dirsum(out, m)
    return out


def format_matrix(m):
    """Text format: 'rows cols' header, then one digit string per row."""
    lines = [f"{m.rows} {m.cols}"]
    lines.extend("".join(str(int(x)) for x in row) for row in m.a)
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise MatrixFormatError("header must be 'rows cols'", line=1)
    rows, cols = int(head[0]), int(head[1])
    if len(lines) < rows + 1:
        raise MatrixFormatError(f"expected {rows} rows", line=len(lines))
    data = np.zeros((rows, cols), dtype=np.uint8)
    for i in range(rows):
        raw = lines[i + 1].strip()
        if len(raw) != cols:
            raise MatrixFormatError(f"expected {cols} digits, got {len(raw)}", line=i + 2)
        for j, ch in enumerate(raw):
            if ch not in "01234":
                raise MatrixFormatError(f"invalid digit {ch!r}", line=i + 2)
            data[i, j] = ord(ch) - ord("0")
    return Mat(data)
