"""Exact linear algebra over Gaussian rationals.

Two representations are used: small dense matrices (gamma matrices,
Casimir matrices, projectors) and sparse dict-rows for the large
homogeneous-component eliminations (null spaces, membership solves).
All pivoting is deterministic, so bases come out in a reproducible order.
"""

from __future__ import annotations

from .gaussian import QQi, QQI_ONE, QQI_ZERO


class SpanError(ValueError):
    """A vector fell outside the span it was required to lie in."""


class ResourceCapError(RuntimeError):
    """An exact computation exceeded its configured size cap."""


class Mat:
    """Dense exact matrix; rows are lists of QQi."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [[QQi.coerce(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def zero(n, m):
        return Mat([[QQI_ZERO] * m for _ in range(n)])

    @staticmethod
    def identity(n):
        return Mat([[QQI_ONE if i == j else QQI_ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = QQi.coerce(c)
        return Mat([[c * a for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        nc = other.ncols
        out = []
        for row in self.rows:
            acc = [QQI_ZERO] * nc
            for j, a in enumerate(row):
                if not a:
                    continue
                brow = other.rows[j]
                for t, b in enumerate(brow):
                    if b:
                        acc[t] = acc[t] + a * b
            out.append(acc)
        return Mat(out)

    __rmul__ = scale

    def matvec(self, vec):
        out = []
        for row in self.rows:
            acc = QQI_ZERO
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.nrows == other.nrows and self.ncols == other.ncols and \
            all(a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    __hash__ = None

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

    def trace(self):
        acc = QQI_ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def rank(self):
        rows = [{j: x for j, x in enumerate(row) if x} for row in self.rows]
        return sparse_rank(rows, self.ncols)

    def __repr__(self):
        return "Mat(" + "; ".join(" ".join(repr(x) for x in row) for row in self.rows) + ")"


# ---------------------------------------------------------------------------
# sparse elimination (rows are dict[col -> QQi], zero entries absent)


def _eliminate_into(target, pivot_row, col):
    """target -= target[col] * pivot_row, with pivot_row unit at col."""
    factor = target.pop(col)
    for j, v in pivot_row.items():
        if j == col:
            continue
        cur = target.get(j)
        nv = v * factor
        nv = (cur - nv) if cur is not None else -nv
        if nv:
            target[j] = nv
        elif cur is not None:
            del target[j]


def sparse_rref(rows, ncols):
    """Reduced row echelon form.

    Returns (pivots, reduced): pivots is the increasing list of pivot
    columns, reduced the matching unit-pivot rows with every pivot
    column cleared from all other rows.
    """
    work = [dict(r) for r in rows if r]
    live = list(range(len(work)))
    pivots = []
    pivot_rows = []
    for col in range(ncols):
        best = None
        for i in live:
            r = work[i]
            if col in r:
                key = (len(r), i)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        idx = best[1]
        live.remove(idx)
        prow = work[idx]
        inv = QQI_ONE / prow[col]
        prow = {j: inv * v for j, v in prow.items()}
        for i in live:
            if col in work[i]:
                _eliminate_into(work[i], prow, col)
        for prev in pivot_rows:
            if col in prev:
                _eliminate_into(prev, prow, col)
        pivots.append(col)
        pivot_rows.append(prow)
    return pivots, pivot_rows


def sparse_rank(rows, ncols):
    pivots, _ = sparse_rref(rows, ncols)
    return len(pivots)


def sparse_nullspace(rows, ncols):
    """Basis of the right null space, one vector per free column.

    Vectors are dicts col -> QQi with the free coordinate set to 1;
    ordering follows increasing free-column index.
    """
    pivots, reduced = sparse_rref(rows, ncols)
    pivot_set = set(pivots)
    col_to_rowidx = {c: k for k, c in enumerate(pivots)}
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: QQI_ONE}
        for c in pivots:
            row = reduced[col_to_rowidx[c]]
            v = row.get(free)
            if v is not None:
                vec[c] = -v
        basis.append(vec)
    return basis


def solve_sparse(rows, rhs, ncols):
    """Solve A x = b exactly.

    rows: list of dict rows of A; rhs: list of QQi, one per row.
    Returns (particular, nullspace_basis) or None when inconsistent.
    """
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        b = QQi.coerce(b)
        if b:
            row[ncols] = b
        aug.append(row)
    pivots, reduced = sparse_rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    particular = {}
    for c, row in zip(pivots, reduced):
        v = row.get(ncols)
        if v is not None:
            particular[c] = v
    null = sparse_nullspace(rows, ncols)
    return particular, null


class SpanSolver:
    """Repeatedly express vectors in the span of a fixed basis.

    Basis vectors are sparse dicts over arbitrary hashable coordinate
    keys.  coords() raises SpanError when a query leaves the span.
    """

    def __init__(self, basis_vectors):
        self.dim = len(basis_vectors)
        keys = set()
        for v in basis_vectors:
            keys.update(v.keys())
        self.key_index = {k: i for i, k in enumerate(sorted(keys, key=repr))}
        nrows = len(self.key_index)
        rows = [dict() for _ in range(nrows)]
        for j, v in enumerate(basis_vectors):
            for k, val in v.items():
                val = QQi.coerce(val)
                if val:
                    rows[self.key_index[k]][j] = val
        self.b_rows = rows
        # greedy: first self.dim independent rows of B, in coordinate order
        echelon = []  # (pivot_col, reduced_row, original_row_index)
        pivot_rows = []
        for i, r in enumerate(rows):
            if len(pivot_rows) == self.dim:
                break
            red = dict(r)
            for col, prow, _ in echelon:
                if col in red:
                    _eliminate_into(red, prow, col)
            if red:
                col = min(red)
                inv = QQI_ONE / red[col]
                red = {j: inv * v for j, v in red.items()}
                echelon.append((col, red, i))
                pivot_rows.append(i)
        if len(pivot_rows) != self.dim:
            raise ValueError("basis vectors are linearly dependent")
        self.pivot_rows = pivot_rows
        block = [[rows[i].get(j, QQI_ZERO) for j in range(self.dim)] for i in pivot_rows]
        self.block_inv = _invert_dense(block)

    def coords(self, vector):
        """Coordinates of vector in the basis; SpanError if outside."""
        vec = {}
        for k, v in vector.items():
            v = QQi.coerce(v)
            if not v:
                continue
            idx = self.key_index.get(k)
            if idx is None:
                raise SpanError("vector has support outside the basis span")
            vec[idx] = v
        sub = [vec.get(i, QQI_ZERO) for i in self.pivot_rows]
        coeffs = _dense_matvec(self.block_inv, sub)
        for i, row in enumerate(self.b_rows):
            acc = QQI_ZERO
            for j, v in row.items():
                c = coeffs[j]
                if c:
                    acc = acc + v * c
            if acc != vec.get(i, QQI_ZERO):
                raise SpanError("vector is not in the span of the basis")
        return coeffs


def _invert_dense(block):
    n = len(block)
    a = [list(row) + [QQI_ONE if i == j else QQI_ZERO for j in range(n)] for i, row in enumerate(block)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("singular block")
        a[col], a[piv] = a[piv], a[col]
        inv = QQI_ONE / a[col][col]
        a[col] = [inv * x for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _dense_matvec(mat, vec):
    out = []
    for row in mat:
        acc = QQI_ZERO
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
