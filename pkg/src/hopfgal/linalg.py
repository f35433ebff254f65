"""Exact linear algebra over Q (and over field-like element types).

Everything here is plain Gaussian elimination with `fractions.Fraction`
coefficients -- no floats, no pivoting heuristics that depend on magnitude,
so results are deterministic and exact.  Two families of routines:

* dense: `rref`, `rank`, `nullspace`, `solve_unique` for small systems
  (dimensions up to a few hundred);
* sparse: `SparseEchelon`, `sparse_nullspace`, `sparse_rank` keep rows as
  ``{column: coefficient}`` dicts and maintain a reduced (Jordan) echelon
  incrementally.  Used for the large fixed-subspace kernels, whose matrices
  are near-permutations with a handful of entries per row.

The generic routines (`field_rank`, `field_nullspace`) run the same
elimination over any element type supporting ``+ - * /``, equality and
truthiness (zero test), e.g. cyclotomic field elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


Vec = list
Mat = list  # list of rows


def _as_fraction_rows(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot column list)."""
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel {x : M x = 0}, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_unique(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve M x = rhs when M has full column rank; raises if not unique."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != ncols:
        raise ValueError("solution is not unique (rank %d < %d)" % (len(pivots), ncols))
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# generic-field elimination (entries need + - * / and truthiness)

def field_rref(rows):
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def field_rank(rows) -> int:
    return len(field_rref(rows)[1])


def field_nullspace(rows, ncols: int, zero, one):
    """Right kernel over a generic field; `zero`/`one` are the scalar constants."""
    red, pivots = field_rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = zero - row[f]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# sparse elimination

class SparseEchelon:
    """Incrementally maintained reduced echelon of sparse rational rows.

    Rows are dicts {col: Fraction-compatible}.  Stored pivot rows are scaled
    to pivot value 1 and mutually reduced, so the support of a stored row is
    its pivot column plus free columns only.  That keeps insertion a single
    pass: eliminating a pivot hit can only introduce free columns.
    """

    def __init__(self) -> None:
        self.pivot_rows: dict[int, dict[int, Fraction]] = {}
        # column -> set of pivot columns whose stored row touches it
        self._occur: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def pivot_columns(self) -> list[int]:
        return sorted(self.pivot_rows)

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        """Return `row` reduced against the stored pivots (row is not mutated)."""
        out = {c: Fraction(v) for c, v in row.items() if v}
        hits = sorted(c for c in out if c in self.pivot_rows)
        for c in hits:
            f = out.pop(c, None)
            if not f:
                continue
            for cc, vv in self.pivot_rows[c].items():
                if cc == c:
                    continue
                nv = out.get(cc, 0) - f * vv
                if nv:
                    out[cc] = nv
                else:
                    out.pop(cc, None)
        return out

    def insert(self, row: dict[int, Fraction]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        red = self.reduce(row)
        if not red:
            return False
        pc = min(red)
        pv = red[pc]
        newrow = {c: v / pv for c, v in red.items()}
        # knock the new pivot column out of every stored row that touches it
        for q in sorted(self._occur.get(pc, ())):
            stored = self.pivot_rows[q]
            f = stored.pop(pc)
            self._occur[pc].discard(q)
            for cc, vv in newrow.items():
                if cc == pc:
                    continue
                nv = stored.get(cc, 0) - f * vv
                if nv:
                    if cc not in stored:
                        self._occur.setdefault(cc, set()).add(q)
                    stored[cc] = nv
                elif cc in stored:
                    del stored[cc]
                    self._occur[cc].discard(q)
        self.pivot_rows[pc] = newrow
        for cc in newrow:
            if cc != pc:
                self._occur.setdefault(cc, set()).add(pc)
        return True

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self.reduce(row)

    def kernel_basis(self, ncols: int) -> list[dict[int, Fraction]]:
        """Kernel of the matrix whose rows were inserted (one vector per free col)."""
        basis = []
        pivset = self.pivot_rows
        for f in range(ncols):
            if f in pivset:
                continue
            v = {f: Fraction(1)}
            for p in sorted(self._occur.get(f, ())):
                v[p] = -self.pivot_rows[p][f]
            basis.append(v)
        return basis


def sparse_rank(rows, ncols: int | None = None) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.insert(row)
    return ech.rank


def sparse_nullspace(rows, ncols: int) -> list[dict[int, Fraction]]:
    ech = SparseEchelon()
    for row in rows:
        ech.insert(row)
    return ech.kernel_basis(ncols)


def dense_to_sparse(rows) -> list[dict[int, Fraction]]:
    return [{j: Fraction(v) for j, v in enumerate(row) if v} for row in rows]


def sparse_to_dense(vec: dict[int, Fraction], ncols: int) -> list[Fraction]:
    out = [Fraction(0)] * ncols
    for c, v in vec.items():
        out[c] = Fraction(v)
    return out
