"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  Matrices and 3-tensors are immutable
row-major containers; sparse vectors (:class:`FinSupp`) carry elements of the
algebras and of their tensor powers, keyed by basis labels (or tuples of
labels for tensor legs).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct
from math import lcm
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_scalar(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        return cls.from_rows(cols).T if cols else cls(0, 0, [])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = [other.col(j) for j in range(other.cols)]
            return Matrix(self.rows, other.cols, [
                sum((a * b for a, b in zip(self.row(i), c) if a and b), ZERO)
                for i in range(self.rows) for c in ocols])
        vec = [as_scalar(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((a * b for a, b in zip(self.row(i), vec) if a and b), ZERO) for i in range(self.rows)]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def inverse(self) -> "Matrix":
        """Inverse of a square matrix; raises ``ValueError`` when singular."""
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        if rank(self) < n:
            raise ValueError("singular matrix")
        cols = []
        for j in range(n):
            e = [ONE if i == j else ZERO for i in range(n)]
            cols.append(solve(self, e))
        return Matrix.from_columns(cols)


class Tensor3:
    """Dense 3-index array, flat index ``i*d2*d3 + j*d3 + k``."""

    __slots__ = ("dims", "entries")

    def __init__(self, dims: tuple[int, int, int], entries: Iterable):
        entries = tuple(as_scalar(x) for x in entries)
        d1, d2, d3 = dims
        if len(entries) != d1 * d2 * d3:
            raise ValueError(f"expected {d1 * d2 * d3} entries, got {len(entries)}")
        self.dims = tuple(dims)
        self.entries = entries

    @classmethod
    def from_function(cls, dims, fn: Callable[[int, int, int], object]) -> "Tensor3":
        d1, d2, d3 = dims
        return cls(dims, [fn(i, j, k) for i in range(d1) for j in range(d2) for k in range(d3)])

    @classmethod
    def from_nested(cls, nested) -> "Tensor3":
        d1 = len(nested)
        d2 = len(nested[0]) if d1 else 0
        d3 = len(nested[0][0]) if d2 else 0
        return cls((d1, d2, d3), [x for a in nested for b in a for x in b])

    def __getitem__(self, ijk) -> Fraction:
        i, j, k = ijk
        _, d2, d3 = self.dims
        return self.entries[(i * d2 + j) * d3 + k]

    def to_nested(self) -> list:
        d1, d2, d3 = self.dims
        return [[[self[i, j, k] for k in range(d3)] for j in range(d2)] for i in range(d1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor3) and self.dims == other.dims and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dims, self.entries))


# -- elimination ------------------------------------------------------------

def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivot = first nonzero entry scanning columns left to right."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right null space {x : m x = 0}.

    One vector per free column f, with x_f = 1 and the other free
    coordinates 0.  Empty iff ``m`` is injective.
    """
    red, pivots = _rref(m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence) -> list[Fraction] | None:
    """Some x with ``m x = b`` (free variables set to zero), or None if inconsistent."""
    b = [as_scalar(x) for x in b]
    if len(b) != m.rows:
        raise ValueError("right-hand side has wrong length")
    aug = [list(m.row(i)) + [b[i]] for i in range(m.rows)]
    red, pivots = _rref(aug, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][m.cols]
    return x


def rank(m: Matrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination on integer rows."""
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        den = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * den) for x in r])
    n_rows, n_cols = len(rows), m.cols
    prev = 1
    rk = 0
    for c in range(n_cols):
        p = next((i for i in range(rk, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, n_rows):
            ric = rows[i][c]
            rows[i] = [(piv * rows[i][j] - ric * rows[rk][j]) // prev for j in range(n_cols)]
        prev = piv
        rk += 1
        if rk == n_rows:
            break
    return rk


# -- sparse vectors ---------------------------------------------------------

Key = Hashable


def _sort_key(k):
    # mixed label types still order deterministically
    return (type(k).__name__, k)


class FinSupp:
    """Finitely supported vector: basis key -> nonzero Fraction.

    Keys are basis labels; tensor elements use tuples of labels, one per leg.
    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, data: Mapping | Iterable[tuple] | None = None):
        out: dict = {}
        if data is not None:
            items = data.items() if isinstance(data, Mapping) else data
            for k, v in items:
                v = as_scalar(v)
                if v:
                    s = out.get(k, ZERO) + v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        self._data = out
        self._hash = None

    @classmethod
    def basis(cls, key, coeff=1) -> "FinSupp":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "FinSupp":
        return cls()

    @classmethod
    def from_dense(cls, vec: Sequence, keys: Sequence | None = None) -> "FinSupp":
        keys = range(len(vec)) if keys is None else keys
        return cls(zip(keys, vec))

    def to_dense(self, keys: Sequence) -> list[Fraction]:
        return [self._data.get(k, ZERO) for k in keys]

    def __getitem__(self, key) -> Fraction:
        return self._data.get(key, ZERO)

    def items(self) -> list[tuple]:
        return sorted(self._data.items(), key=lambda kv: _sort_key(kv[0]))

    def support(self) -> list:
        return sorted(self._data, key=_sort_key)

    def __iter__(self) -> Iterator:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def __add__(self, other: "FinSupp") -> "FinSupp":
        out = dict(self._data)
        for k, v in other._data.items():
            out[k] = out.get(k, ZERO) + v
        return FinSupp(out)

    def __sub__(self, other: "FinSupp") -> "FinSupp":
        return self + (-other)

    def __neg__(self) -> "FinSupp":
        return FinSupp({k: -v for k, v in self._data.items()})

    def scale(self, c) -> "FinSupp":
        c = as_scalar(c)
        if not c:
            return FinSupp()
        return FinSupp({k: c * v for k, v in self._data.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if isinstance(other, FinSupp):
            return self._data == other._data
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._data:
            return "0"
        return " + ".join(f"{format_scalar(v)}*{k!r}" for k, v in self.items())

    def tensor(self, other: "FinSupp") -> "FinSupp":
        """Tensor product; keys concatenate as tuples."""
        out = {}
        for k1, v1 in self._data.items():
            t1 = k1 if isinstance(k1, tuple) else (k1,)
            for k2, v2 in other._data.items():
                t2 = k2 if isinstance(k2, tuple) else (k2,)
                out[t1 + t2] = v1 * v2
        return FinSupp(out)

    def map_keys(self, fn: Callable) -> "FinSupp":
        return FinSupp((fn(k), v) for k, v in self._data.items())

    def linear_map(self, on_basis: Callable[[Key], "FinSupp"]) -> "FinSupp":
        """Extend ``on_basis`` linearly."""
        acc: dict = {}
        for k, v in self._data.items():
            for k2, v2 in on_basis(k)._data.items():
                acc[k2] = acc.get(k2, ZERO) + v * v2
        return FinSupp(acc)

    def pair(self, values: Callable[[Key], Fraction]) -> Fraction:
        """Apply the linear form given by its values on basis keys."""
        return sum((v * as_scalar(values(k)) for k, v in self._data.items()), ZERO)


def bilinear(a: FinSupp, b: FinSupp, on_basis: Callable[[Key, Key], FinSupp]) -> FinSupp:
    """Extend a map on basis pairs bilinearly."""
    acc: dict = {}
    for ka, va in a._data.items():
        for kb, vb in b._data.items():
            for k, v in on_basis(ka, kb)._data.items():
                acc[k] = acc.get(k, ZERO) + va * vb * v
    return FinSupp(acc)


# -- tensor-leg helpers -----------------------------------------------------

def apply_leg(t: FinSupp, leg: int, fn: Callable[[Key], FinSupp]) -> FinSupp:
    """Apply a linear map (given on basis keys) to one tensor leg."""
    acc: dict = {}
    for key, v in t._data.items():
        for k2, v2 in fn(key[leg])._data.items():
            nk = key[:leg] + (k2,) + key[leg + 1:]
            acc[nk] = acc.get(nk, ZERO) + v * v2
    return FinSupp(acc)


def contract_leg(t: FinSupp, leg: int, form: Callable[[Key], Fraction]) -> FinSupp:
    """Apply a linear functional to one leg, dropping it."""
    acc: dict = {}
    for key, v in t._data.items():
        c = as_scalar(form(key[leg]))
        if c:
            rest = key[:leg] + key[leg + 1:]
            nk = rest[0] if len(rest) == 1 else rest
            acc[nk] = acc.get(nk, ZERO) + v * c
    return FinSupp(acc)


def multiply_legs(t: FinSupp, leg: int, mul: Callable[[Key, Key], FinSupp]) -> FinSupp:
    """Multiply legs ``leg`` and ``leg + 1`` together."""
    acc: dict = {}
    for key, v in t._data.items():
        for k2, v2 in mul(key[leg], key[leg + 1])._data.items():
            rest = key[:leg] + (k2,) + key[leg + 2:]
            nk = rest[0] if len(rest) == 1 else rest
            acc[nk] = acc.get(nk, ZERO) + v * v2
    return FinSupp(acc)


def multiply_leg_by(t: FinSupp, leg: int, x: FinSupp, mul: Callable[[Key, Key], FinSupp],
                    side: str = "right") -> FinSupp:
    """Multiply one leg by a fixed element, on the given side."""
    if side == "right":
        return apply_leg(t, leg, lambda k: bilinear(FinSupp.basis(k), x, mul))
    return apply_leg(t, leg, lambda k: bilinear(x, FinSupp.basis(k), mul))


def flip(t: FinSupp) -> FinSupp:
    return t.map_keys(lambda k: (k[1], k[0]))


def tuples(labels: Sequence, n: int) -> Iterator[tuple]:
    return _iproduct(labels, repeat=n)
