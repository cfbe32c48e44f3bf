"""Exact linear algebra over Q(i): vectors, matrices, kernels, projections, PSD.

The inner product is conjugate-linear in the FIRST argument,
    <x, y> = sum_i conj(x_i) * y_i,
and every routine below is exact; a pivot is zero iff it equals 0 in Q(i).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Qi


class QVector:
    """Immutable vector over Q(i); length n >= 0."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Qi]):
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("QVector is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Qi:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, QVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "QVector") -> "QVector":
        _same_length(self, other)
        return QVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "QVector") -> "QVector":
        _same_length(self, other)
        return QVector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self.entries)

    def scale(self, c: Qi) -> "QVector":
        return QVector(c * a for a in self.entries)

    def conj(self) -> "QVector":
        return QVector(a.conj() for a in self.entries)

    def concat(self, other: "QVector") -> "QVector":
        return QVector(self.entries + other.entries)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def __repr__(self) -> str:
        return "(" + ", ".join(map(repr, self.entries)) + ")"

    @staticmethod
    def zero(n: int) -> "QVector":
        return QVector([ZERO] * n)


def _same_length(x: QVector, y: QVector) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def inner_product(x: QVector, y: QVector) -> Qi:
    """<x, y> = sum conj(x_i) y_i, conjugate-linear in the first argument."""
    _same_length(x, y)
    acc = ZERO
    for a, b in zip(x.entries, y.entries):
        acc = acc + a.conj() * b
    return acc


class QMatrix:
    """Immutable matrix over Q(i); rows, cols >= 0 (possibly zero-dimensional)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[Qi]], cols: int | None = None):
        rows = tuple(tuple(row) for row in data)
        ncols = len(rows[0]) if rows else (cols if cols is not None else 0)
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    def __getitem__(self, i: int):
        return self.data[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in row] for row in self.data], cols=self.cols)

    def scale(self, c: Qi) -> "QMatrix":
        return QMatrix([[c * a for a in row] for row in self.data], cols=self.cols)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self.data[i][k] * other.data[k][j]
                row.append(acc)
            out.append(row)
        return QMatrix(out, cols=other.cols)

    def apply(self, v: QVector) -> QVector:
        if self.cols != len(v):
            raise ValueError(f"shape mismatch: {self.shape} applied to len {len(v)}")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for k in range(self.cols):
                acc = acc + self.data[i][k] * v[k]
            out.append(acc)
        return QVector(out)

    def transpose(self) -> "QMatrix":
        return QMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def conj(self) -> "QMatrix":
        return QMatrix([[a.conj() for a in row] for row in self.data], cols=self.cols)

    def adjoint(self) -> "QMatrix":
        return self.transpose().conj()

    def trace(self) -> Qi:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.data[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.data for a in row)

    def is_hermitian(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.data[i][j] == self.data[j][i].conj()
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __repr__(self) -> str:
        return "[" + "; ".join(", ".join(map(repr, row)) for row in self.data) + "]"

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)], cols=n
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "QMatrix":
        return QMatrix([[ZERO] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def block_diag(a: "QMatrix", b: "QMatrix") -> "QMatrix":
        out = []
        for i in range(a.rows):
            out.append(list(a.data[i]) + [ZERO] * b.cols)
        for i in range(b.rows):
            out.append([ZERO] * a.cols + list(b.data[i]))
        return QMatrix(out, cols=a.cols + b.cols)

    def _same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")


def _rref(rows: list[list[Qi]], ncols: int) -> tuple[list[list[Qi]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column indices)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [inv * a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(m: QMatrix) -> list[QVector]:
    """Exact basis of {v : m v = 0}; empty list iff the kernel is {0}."""
    rows = [list(r) for r in m.data]
    rows, pivots = _rref(rows, m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(QVector(v))
    return basis


def rank(m: QMatrix) -> int:
    rows = [list(r) for r in m.data]
    _, pivots = _rref(rows, m.cols)
    return len(pivots)


def solve(m: QMatrix, b: QVector) -> QVector | None:
    """One exact solution of m x = b, or None if the system is inconsistent."""
    if m.rows != len(b):
        raise ValueError("incompatible right-hand side")
    rows = [list(r) + [b[i]] for i, r in enumerate(m.data)]
    rows, pivots = _rref(rows, m.cols)
    for r in range(len(pivots), len(rows)):
        if not rows[r][m.cols].is_zero():
            return None
    x = [ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][m.cols]
    return QVector(x)


def psd_check(m: QMatrix) -> bool:
    """Exact positive semidefiniteness of a Hermitian matrix.

    Hermitian elimination: a zero pivot forces its whole row and column to
    vanish (else a 2x2 principal minor is negative); a nonzero pivot must be
    a positive rational and is eliminated by one Schur complement step.
    """
    if not m.is_hermitian():
        raise ValueError("psd_check requires a Hermitian matrix")
    n = m.rows
    a = [list(row) for row in m.data]
    active = list(range(n))
    while active:
        # prefer a nonzero pivot; zero-diagonal indices are checked afterwards
        pivot_idx = None
        for pos, i in enumerate(active):
            if not a[i][i].is_zero():
                pivot_idx = pos
                break
        if pivot_idx is None:
            # all remaining diagonal entries are zero: matrix must be zero
            return all(
                a[i][j].is_zero() for i in active for j in active
            )
        i = active.pop(pivot_idx)
        p = a[i][i]
        if not p.is_real() or p.re < 0:
            return False
        col = {j: a[j][i] for j in active}
        for j in active:
            cj = col[j]
            if cj.is_zero():
                continue
            f = cj / p
            for k in active:
                a[j][k] = a[j][k] - f * a[i][k]
        # row i is dead; a stays Hermitian on the active block
    return True


def gram_matrix(vectors: Sequence[QVector]) -> QMatrix:
    return QMatrix(
        [[inner_product(v, w) for w in vectors] for v in vectors],
        cols=len(vectors),
    )


def project_onto_span(vectors: Sequence[QVector], x: QVector) -> QVector:
    """Orthogonal projection of x onto span(vectors), exactly in Q(i).

    Solves the Gram system G c = (<v_j, x>)_j; the system is always
    consistent, any solution gives the same projection sum c_j v_j.
    """
    if not vectors:
        return QVector.zero(len(x))
    g = gram_matrix(vectors)
    b = QVector([inner_product(v, x) for v in vectors])
    c = solve(g, b)
    if c is None:  # impossible for a Gram system; guard anyway
        raise ArithmeticError("inconsistent Gram system")
    out = QVector.zero(len(x))
    for cj, v in zip(c, vectors):
        out = out + v.scale(cj)
    return out
