"""Dense exact matrices with the linear algebra the rest of the package uses.

Entries live in a :class:`~quiveralg.fields.FieldSpec`; storage is a row-major
flat list.  Everything is immutable in spirit: operations return new matrices
and nothing mutates a matrix after construction (internal builders excepted).
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from quiveralg.fields import FieldSpec


class Mat:
    """A rows x cols matrix over an exact field.

    Attributes:
        rows: number of rows (>= 0).
        cols: number of columns (>= 0).
        entries: row-major flat list of scalars, length rows * cols.
        field: the FieldSpec the entries belong to.
    """

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries: Sequence, field: FieldSpec):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if len(entries) != rows * cols:
            raise ValueError(
                f"entry count {len(entries)} != {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)
        self.field = field

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, rows: int, cols: int, field: FieldSpec) -> "Mat":
        z = field.zero()
        return cls(rows, cols, [z] * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Mat":
        m = cls.zero(n, n, field)
        one = field.one()
        for i in range(n):
            m.entries[i * n + i] = one
        return m

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence], field: FieldSpec) -> "Mat":
        """Build from a list of rows whose entries are ints or field scalars."""
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if nrows else 0
        flat = []
        for r in rows_data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for x in r:
                flat.append(field.from_int(x) if isinstance(x, int) else x)
        return cls(nrows, ncols, flat, field)

    @classmethod
    def column(cls, values: Sequence, field: FieldSpec) -> "Mat":
        vals = [field.from_int(x) if isinstance(x, int) else x for x in values]
        return cls(len(vals), 1, vals, field)

    # ------------------------------------------------------------------
    # accessors

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> List:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col_list(self, j: int) -> List:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def copy(self) -> "Mat":
        return Mat(self.rows, self.cols, list(self.entries), self.field)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(str, self.entries))))

    def __repr__(self):
        if self.rows * self.cols == 0:
            return f"Mat({self.rows}x{self.cols})"
        body = "; ".join(
            " ".join(str(x) for x in self.row_list(i)) for i in range(self.rows)
        )
        return f"Mat[{body}]"

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            self.rows,
            self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
            self.field,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(
            self.rows,
            self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
            self.field,
        )

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [-a for a in self.entries], self.field)

    def scale(self, c) -> "Mat":
        if isinstance(c, int):
            c = self.field.from_int(c)
        return Mat(self.rows, self.cols, [c * a for a in self.entries], self.field)

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}"
            )
        z = self.field.zero()
        n, k, m = self.rows, self.cols, other.cols
        out = [z] * (n * m)
        a, b = self.entries, other.entries
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            orow_base = i * m
            for t in range(k):
                c = arow[t]
                if not c:
                    continue
                brow = b[t * m : (t + 1) * m]
                for j in range(m):
                    bv = brow[j]
                    if bv:
                        out[orow_base + j] = out[orow_base + j] + c * bv
        return Mat(n, m, out, self.field)

    def transpose(self) -> "Mat":
        out = [None] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.entries[i * self.cols + j]
        return Mat(self.cols, self.rows, out, self.field)

    def _check_same_shape(self, other: "Mat") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    # ------------------------------------------------------------------
    # block assembly

    @staticmethod
    def hstack(mats: Sequence["Mat"]) -> "Mat":
        mats = [m for m in mats]
        if not mats:
            raise ValueError("hstack of nothing")
        rows = mats[0].rows
        field = mats[0].field
        if any(m.rows != rows for m in mats):
            raise ValueError("hstack row mismatch")
        cols = sum(m.cols for m in mats)
        out = []
        for i in range(rows):
            for m in mats:
                out.extend(m.row_list(i))
        return Mat(rows, cols, out, field)

    @staticmethod
    def vstack(mats: Sequence["Mat"]) -> "Mat":
        mats = [m for m in mats]
        if not mats:
            raise ValueError("vstack of nothing")
        cols = mats[0].cols
        field = mats[0].field
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack column mismatch")
        entries: List = []
        for m in mats:
            entries.extend(m.entries)
        return Mat(sum(m.rows for m in mats), cols, entries, field)

    @staticmethod
    def block_diagonal(mats: Sequence["Mat"], field: FieldSpec) -> "Mat":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = Mat.zero(rows, cols, field)
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                base = (r0 + i) * cols + c0
                out.entries[base : base + m.cols] = m.row_list(i)
            r0 += m.rows
            c0 += m.cols
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Mat":
        out = []
        for i in row_idx:
            row = self.row_list(i)
            out.extend(row[j] for j in col_idx)
        return Mat(len(row_idx), len(col_idx), out, self.field)

    # ------------------------------------------------------------------
    # elimination

    def rref(self) -> Tuple["Mat", List[int]]:
        """Reduced row echelon form.

        Returns:
            (R, pivots): R the RREF and pivots the pivot column indices in
            increasing order; rank = len(pivots).
        """
        m = self.copy()
        e = m.entries
        nrows, ncols = m.rows, m.cols
        pivots: List[int] = []
        prow = 0
        for col in range(ncols):
            if prow >= nrows:
                break
            sel = -1
            for i in range(prow, nrows):
                if e[i * ncols + col]:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != prow:
                for j in range(ncols):
                    e[prow * ncols + j], e[sel * ncols + j] = (
                        e[sel * ncols + j],
                        e[prow * ncols + j],
                    )
            pv = e[prow * ncols + col]
            if pv != self.field.one():
                inv = self.field.one() / pv
                for j in range(col, ncols):
                    v = e[prow * ncols + j]
                    if v:
                        e[prow * ncols + j] = v * inv
            for i in range(nrows):
                if i == prow:
                    continue
                f = e[i * ncols + col]
                if f:
                    for j in range(col, ncols):
                        v = e[prow * ncols + j]
                        if v:
                            e[i * ncols + j] = e[i * ncols + j] - f * v
            pivots.append(col)
            prow += 1
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List["Mat"]:
        """Basis of the right null space as a list of column vectors.

        Empty list iff the matrix is injective as a map.
        """
        r, pivots = self.rref()
        piv_set = set(pivots)
        free = [j for j in range(self.cols) if j not in piv_set]
        z = self.field.zero()
        one = self.field.one()
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = one
            for prow, pcol in enumerate(pivots):
                v[pcol] = -r.entries[prow * self.cols + f]
            basis.append(Mat(self.cols, 1, v, self.field))
        return basis

    def kernel_matrix(self) -> "Mat":
        """Kernel basis vectors assembled as the columns of one matrix."""
        basis = self.kernel_basis()
        if not basis:
            return Mat.zero(self.cols, 0, self.field)
        return Mat.hstack(basis)

    def solve_linear(self, b: "Mat") -> Optional["Mat"]:
        """Some x with self * x = b, or None if the system is inconsistent.

        Args:
            b: right-hand side with b.rows == self.rows; may have many columns.

        Raises:
            ValueError: on row-count mismatch.
        """
        if b.rows != self.rows:
            raise ValueError(f"rhs rows {b.rows} != {self.rows}")
        aug = Mat.hstack([self, b])
        r, pivots = aug.rref()
        for p in pivots:
            if p >= self.cols:
                return None
        z = self.field.zero()
        x = Mat.zero(self.cols, b.cols, self.field)
        for prow, pcol in enumerate(pivots):
            for j in range(b.cols):
                x.entries[pcol * b.cols + j] = r.entries[
                    prow * aug.cols + self.cols + j
                ]
        del z
        return x

    def inverse(self) -> Optional["Mat"]:
        if self.rows != self.cols:
            return None
        aug = Mat.hstack([self, Mat.identity(self.rows, self.field)])
        r, pivots = aug.rref()
        if len(pivots) != self.rows or any(p >= self.cols for p in pivots):
            return None
        return r.submatrix(range(self.rows), range(self.cols, 2 * self.cols))

    def column_space_pivots(self) -> List[int]:
        """Indices of a maximal independent subset of columns."""
        return self.rref()[1]

    def vec(self) -> "Mat":
        """Column-major vectorization as a single column vector."""
        out = []
        for j in range(self.cols):
            out.extend(self.col_list(j))
        return Mat(self.rows * self.cols, 1, out, self.field)

    @classmethod
    def unvec(cls, v: "Mat", rows: int, cols: int) -> "Mat":
        """Inverse of :meth:`vec` for a rows x cols target shape."""
        if v.rows != rows * cols or v.cols != 1:
            raise ValueError("unvec shape mismatch")
        m = cls.zero(rows, cols, v.field)
        for j in range(cols):
            for i in range(rows):
                m.entries[i * cols + j] = v.entries[j * rows + i]
        return m
