"""Dense exact matrices over a field object from perres.fields.

Convention used throughout the package: module elements are row vectors
and maps act on the right, so x @ F then @ G composes F followed by G.
"""

from __future__ import annotations

from .fields import FieldError, InputError


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise InputError("ragged rows")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.data = [[z] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, field, rows, width=None):
        if not rows:
            return cls.zeros(field, 0, width or 0)
        return cls(field, rows)

    def copy(self):
        return Matrix(self.field, self.data)

    # -- arithmetic ---------------------------------------------------

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        add, mul, zero = F.add, F.mul, F.zero
        out = Matrix.zeros(F, self.rows, other.cols)
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(arow):
                if a != zero:
                    brow = bdata[k]
                    for j, b in enumerate(brow):
                        if b != zero:
                            orow[j] = add(orow[j], mul(a, b))
        return out

    def __add__(self, other):
        if self.shape != other.shape:
            raise InputError("shape mismatch")
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise InputError("shape mismatch")
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def scale(self, c):
        F = self.field
        return Matrix(F, [[F.mul(c, a) for a in row] for row in self.data])

    def transpose(self):
        return Matrix(self.field, [[self.data[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.data == other.data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    def is_zero(self):
        z = self.field.zero
        return all(a == z for row in self.data for a in row)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        z, o = self.field.zero, self.field.one
        return all(a == (o if i == j else z)
                   for i, row in enumerate(self.data) for j, a in enumerate(row))

    def row(self, i):
        return list(self.data[i])

    def map_entries(self, fn, new_field):
        return Matrix(new_field, [[fn(a) for a in row] for row in self.data])

    # -- elimination --------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (rank, reduced matrix, pivot columns)."""
        F = self.field
        zero = F.zero
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c] != zero:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = F.inv(m[r][c])
            if inv != F.one:
                m[r] = [F.mul(inv, a) for a in m[r]]
            prow = m[r]
            for i in range(self.rows):
                if i != r and m[i][c] != zero:
                    f = m[i][c]
                    row_i = m[i]
                    for j in range(c, self.cols):
                        if prow[j] != zero:
                            row_i[j] = F.sub(row_i[j], F.mul(f, prow[j]))
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return r, Matrix(F, m) if m else Matrix.zeros(F, 0, self.cols), tuple(pivots)

    def rank(self):
        return self.rref()[0]

    def nullspace(self):
        """Basis of the right kernel {x : self @ x = 0}, as matrix columns."""
        F = self.field
        rank, red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis_cols = []
        for fc in free:
            col = [F.zero] * self.cols
            col[fc] = F.one
            for r, pc in enumerate(pivots):
                col[pc] = F.neg(red.data[r][fc])
            basis_cols.append(col)
        out = Matrix.zeros(F, self.cols, len(basis_cols))
        for j, col in enumerate(basis_cols):
            for i in range(self.cols):
                out.data[i][j] = col[i]
        return out

    def left_nullspace_rows(self):
        """Rows x with x @ self = 0, as a list of row vectors."""
        ns = self.transpose().nullspace()
        return [[ns.data[i][j] for i in range(ns.rows)] for j in range(ns.cols)]

    def solve(self, rhs):
        """Some x with self @ x = rhs, or None when inconsistent."""
        if rhs.rows != self.rows:
            raise InputError("solve: row count mismatch")
        F = self.field
        aug = Matrix(F, [self.data[i] + rhs.data[i] for i in range(self.rows)])
        rank, red, pivots = aug.rref()
        n = self.cols
        for c in pivots:
            if c >= n:
                return None
        x = Matrix.zeros(F, n, rhs.cols)
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                x.data[pc][j] = red.data[r][n + j]
        return x

    def inverse(self):
        if self.rows != self.cols:
            raise InputError("inverse of a non-square matrix")
        x = self.solve(Matrix.identity(self.field, self.rows))
        if x is None or not (self @ x).is_identity():
            raise FieldError("matrix is singular")
        return x

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def vec_scale(field, c, v):
    mul = field.mul
    return [mul(c, a) for a in v]


def vec_add_scaled(field, v, c, w):
    """v + c*w in place."""
    add, mul, zero = field.add, field.mul, field.zero
    if c == zero:
        return v
    for i, wi in enumerate(w):
        if wi != zero:
            v[i] = add(v[i], mul(c, wi))
    return v


def vec_is_zero(field, v):
    z = field.zero
    return all(a == z for a in v)


def apply_row(field, v, matrix):
    """Row vector times matrix."""
    add, mul, zero = field.add, field.mul, field.zero
    out = [zero] * matrix.cols
    for k, a in enumerate(v):
        if a != zero:
            row = matrix.data[k]
            for j, b in enumerate(row):
                if b != zero:
                    out[j] = add(out[j], mul(a, b))
    return out


class RowBasis:
    """Incrementally maintained echelon basis of a row space.

    Rows are kept fully reduced against each other; with track=True every
    stored row also carries its expression in the accepted input rows, so
    coords() can rewrite any vector of the span in terms of those inputs.
    """

    def __init__(self, field, width, track=False):
        self.field = field
        self.width = width
        self.track = track
        self.rows = []
        self.combos = [] if track else None
        self.pivot_of_row = []
        self.pivot_cols = {}
        self.n_accepted = 0

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, v, combo=None):
        F = self.field
        zero = F.zero
        v = list(v)
        for c, ri in self.pivot_cols.items():
            a = v[c]
            if a != zero:
                f = F.neg(a)
                vec_add_scaled(F, v, f, self.rows[ri])
                if combo is not None and self.combos is not None:
                    vec_add_scaled(F, combo, f, self.combos[ri])
        return v

    def reduce(self, v):
        return self._reduce(v)

    def contains(self, v):
        return vec_is_zero(self.field, self._reduce(v))

    def add(self, v):
        """Insert a row; returns True when it enlarged the span."""
        F = self.field
        zero = F.zero
        combo = None
        if self.track:
            combo = [zero] * (self.n_accepted + 1)
            for cb in self.combos:
                cb.append(zero)
            combo[self.n_accepted] = F.one
        v = self._reduce(v, combo)
        pivot = None
        for j, a in enumerate(v):
            if a != zero:
                pivot = j
                break
        if pivot is None:
            if self.track:
                for cb in self.combos:
                    cb.pop()
            return False
        inv = F.inv(v[pivot])
        if inv != F.one:
            v = vec_scale(F, inv, v)
            if combo is not None:
                combo = vec_scale(F, inv, combo)
        # clear this pivot from the existing rows
        for ri, row in enumerate(self.rows):
            a = row[pivot]
            if a != zero:
                f = F.neg(a)
                vec_add_scaled(F, row, f, v)
                if self.track:
                    vec_add_scaled(F, self.combos[ri], f, combo)
        self.pivot_cols[pivot] = len(self.rows)
        self.pivot_of_row.append(pivot)
        self.rows.append(v)
        if self.track:
            self.combos.append(combo)
        self.n_accepted += 1
        return True

    def coords(self, v):
        """Coefficients of v over the accepted rows, or None if outside."""
        if not self.track:
            raise InputError("RowBasis built without track=True")
        F = self.field
        combo = [F.zero] * self.n_accepted
        v = self._reduce(list(v), combo)
        if not vec_is_zero(F, v):
            return None
        return [F.neg(c) for c in combo]
