"""Deterministic exact linear algebra over prime fields and the rationals.

Scalars are plain ints in ``range(p)`` for GF(p) and ``fractions.Fraction``
for the rationals, so every computation in the library is exact.  All
echelon forms use lowest-index pivot selection, which makes every output
canonical: two inputs with the same row space produce bit-identical
results.

Linear maps follow the column-vector convention: a map V -> W with
dim V = n and dim W = m is an m x n matrix, and composition is ``@``.
Tensor indices are flattened row-major, so ``kron`` realises the tensor
product of maps.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DimensionMismatch, NonFiniteField

DEFAULT_MAX_DIM = 4096
DEFAULT_MAX_ENUM = 2_000_000

_GUARDS = {"max_dim": DEFAULT_MAX_DIM, "max_enum": DEFAULT_MAX_ENUM}


def set_guards(max_dim=None, max_enum=None):
    """Override the process-wide size guards (used by the CLI flags)."""
    if max_dim is not None:
        _GUARDS["max_dim"] = max_dim
    if max_enum is not None:
        _GUARDS["max_enum"] = max_enum


def current_max_dim() -> int:
    return _GUARDS["max_dim"]


def current_max_enum() -> int:
    return _GUARDS["max_enum"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Base field: GF(p) for a prime p, or the rationals (p is None)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime-field"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def of(self, x) -> Union[int, Fraction]:
        """Coerce an int, Fraction or 'num/den' string into the field."""
        if self.p is not None:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                x = x.numerator
            if isinstance(x, str):
                x = int(x)
            if not isinstance(x, int):
                raise ValueError(f"bad scalar {x!r} for GF({self.p})")
            return x % self.p
        if isinstance(x, bool):
            raise ValueError(f"bad scalar {x!r}")
        if isinstance(x, (int, str, Fraction)):
            return Fraction(x)
        raise ValueError(f"bad scalar {x!r} for the rationals")

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def elements(self):
        """All field elements in canonical order 0 < 1 < ... < p-1."""
        if self.p is None:
            raise NonFiniteField("the rationals cannot be enumerated")
        return range(self.p)

    def render(self, a) -> Union[int, str]:
        """Canonical JSON form of a scalar."""
        if self.p is not None:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix over a fixed field, row-major entries."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise DimensionMismatch("row count mismatch")
        for r in self.entries:
            if len(r) != self.cols:
                raise DimensionMismatch("column count mismatch")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(field: FieldSpec, rows) -> "Mat":
        ent = tuple(tuple(field.of(x) for x in row) for row in rows)
        ncols = len(ent[0]) if ent else 0
        return Mat(field, len(ent), ncols, ent)

    @staticmethod
    def zero(field: FieldSpec, rows: int, cols: int) -> "Mat":
        z = field.zero
        return Mat(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Mat":
        z, o = field.zero, field.one
        return Mat(field, n, n,
                   tuple(tuple(o if i == j else z for j in range(n))
                         for i in range(n)))

    @staticmethod
    def column(field: FieldSpec, vec) -> "Mat":
        return Mat(field, len(vec), 1, tuple((field.of(x),) for x in vec))

    @staticmethod
    def row_vector(field: FieldSpec, vec) -> "Mat":
        return Mat(field, 1, len(vec), (tuple(field.of(x) for x in vec),))

    @staticmethod
    def from_cols(field: FieldSpec, cols) -> "Mat":
        nrows = len(cols[0]) if cols else 0
        return Mat(field, nrows, len(cols),
                   tuple(tuple(field.of(c[i]) for c in cols)
                         for i in range(nrows)))

    # -- basic algebra -----------------------------------------------

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot compose {self.rows}x{self.cols} with "
                f"{other.rows}x{other.cols}")
        f = self.field
        ocols = list(zip(*other.entries)) if other.entries else []
        out = []
        for arow in self.entries:
            out.append(tuple(
                _dot(f, arow, bcol) for bcol in ocols))
        return Mat(f, self.rows, other.cols, tuple(out))

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(f, self.rows, self.cols, tuple(
            tuple(f.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(f, self.rows, self.cols, tuple(
            tuple(f.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, tuple(
            tuple(f.neg(a) for a in row) for row in self.entries))

    def scale(self, c) -> "Mat":
        f = self.field
        c = f.of(c)
        return Mat(f, self.rows, self.cols, tuple(
            tuple(f.mul(c, a) for a in row) for row in self.entries))

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch")

    def transpose(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows,
                   tuple(zip(*self.entries)) if self.entries
                   else tuple(() for _ in range(self.cols)))

    def apply(self, vec) -> tuple:
        """Apply to a column vector given as a tuple."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        f = self.field
        return tuple(_dot(f, row, vec) for row in self.entries)

    def col(self, j) -> tuple:
        return tuple(row[j] for row in self.entries)

    def row(self, i) -> tuple:
        return self.entries[i]

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product; tensor product of maps in row-major indexing."""
        f = self.field
        out = []
        for r1 in self.entries:
            for r2 in other.entries:
                out.append(tuple(f.mul(a, b) for a in r1 for b in r2))
        return Mat(f, self.rows * other.rows, self.cols * other.cols,
                   tuple(out))

    def stack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise DimensionMismatch("column mismatch in stack")
        return Mat(self.field, self.rows + other.rows, self.cols,
                   self.entries + other.entries)

    @property
    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)


def _dot(f: FieldSpec, u, v):
    acc = f.zero
    for a, b in zip(u, v):
        if a != f.zero and b != f.zero:
            acc = f.add(acc, f.mul(a, b))
    return acc


def kron_all(*mats: Mat) -> Mat:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


# -- echelon forms ---------------------------------------------------


def rref(m: Mat):
    """Reduced row echelon form with lowest-index pivots.

    Returns ``(R, pivots)`` where R has its zero rows dropped, so R is the
    canonical basis matrix of the row space of ``m``.
    """
    f = m.field
    rows = [list(r) for r in m.entries]
    pivots = []
    prow = 0
    for c in range(m.cols):
        sel = None
        for r in range(prow, len(rows)):
            if rows[r][c] != f.zero:
                sel = r
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        inv = f.inv(rows[prow][c])
        rows[prow] = [f.mul(inv, x) for x in rows[prow]]
        for r in range(len(rows)):
            if r != prow and rows[r][c] != f.zero:
                coef = rows[r][c]
                rows[r] = [f.sub(x, f.mul(coef, y))
                           for x, y in zip(rows[r], rows[prow])]
        pivots.append(c)
        prow += 1
        if prow == len(rows):
            break
    red = Mat(f, prow, m.cols, tuple(tuple(r) for r in rows[:prow]))
    return red, tuple(pivots)


def rank(m: Mat) -> int:
    return rref(m)[0].rows


def kernel(m: Mat) -> Mat:
    """Canonical basis of the null space of ``m``, one row per basis vector.

    Rows are returned in reduced echelon form with lowest-index pivots; the
    empty kernel is a 0-row matrix with ``m.cols`` columns.
    """
    f = m.field
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red.entries[r][fc])
        basis.append(tuple(v))
    ker = Mat(f, len(basis), m.cols, tuple(basis))
    return rref(ker)[0]


def solve(m: Mat, target) -> Optional[tuple]:
    """One solution of ``m x = target`` or None if inconsistent.

    The representative is deterministic: free variables are set to zero in
    echelon order.
    """
    if len(target) != m.rows:
        raise DimensionMismatch("target length mismatch")
    f = m.field
    aug = Mat(f, m.rows, m.cols + 1, tuple(
        row + (f.of(t),) for row, t in zip(m.entries, target)))
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [f.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.entries[r][m.cols]
    return tuple(x)


def solve_matrix(m: Mat, rhs: Mat) -> Optional[Mat]:
    """Columnwise ``solve``; None if any column is inconsistent."""
    cols = []
    for j in range(rhs.cols):
        x = solve(m, rhs.col(j))
        if x is None:
            return None
        cols.append(x)
    if not cols:
        return Mat.zero(m.field, m.cols, 0)
    return Mat.from_cols(m.field, cols)


def in_row_space(m: Mat, vec) -> bool:
    return solve(m.transpose(), vec) is not None


@dataclass(frozen=True)
class QuotientSpace:
    """Ambient space modulo the row space of ``relations``.

    ``projection`` (quo_dim x ambient) and ``section`` (ambient x quo_dim)
    satisfy ``projection @ section = I`` and ``projection @ r = 0`` for
    every relation ``r``.  The quotient basis consists of the images of the
    non-pivot coordinates of the canonicalised relations.
    """

    field: FieldSpec
    ambient_dim: int
    relations: Mat
    quo_dim: int
    projection: Mat
    section: Mat

    def descends(self, m: Mat) -> Optional[Mat]:
        """Induce ``m`` (with ambient domain) on the quotient, if defined."""
        if m.cols != self.ambient_dim:
            raise DimensionMismatch("domain is not the ambient space")
        if not (m @ self.relations.transpose()).is_zero:
            return None
        return m @ self.section

    def canonical_lift(self, m: Mat) -> Mat:
        """Canonical representative of a map into the quotient's ambient."""
        if m.rows != self.ambient_dim:
            raise DimensionMismatch("codomain is not the ambient space")
        return self.section @ self.projection @ m


def quotient(field: FieldSpec, ambient_dim: int, relations: Mat,
             max_dim: Optional[int] = None) -> QuotientSpace:
    """Quotient of F^ambient_dim by the row space of ``relations``."""
    from .errors import SizeLimit
    if max_dim is None:
        max_dim = current_max_dim()
    if relations.cols != ambient_dim:
        raise DimensionMismatch("relations do not live in the ambient space")
    if ambient_dim > max_dim:
        raise SizeLimit(f"ambient dimension {ambient_dim} exceeds {max_dim}")
    f = field
    red, pivots = rref(relations)
    pivset = set(pivots)
    free = [c for c in range(ambient_dim) if c not in pivset]
    quo_dim = len(free)
    # projection: kill each pivot coordinate using its relation row
    proj_rows = []
    for t, fc in enumerate(free):
        row = [f.zero] * ambient_dim
        row[fc] = f.one
        for r, pc in enumerate(pivots):
            row[pc] = f.neg(red.entries[r][fc])
        proj_rows.append(tuple(row))
    projection = Mat(f, quo_dim, ambient_dim, tuple(proj_rows))
    sect_rows = []
    for i in range(ambient_dim):
        row = [f.zero] * quo_dim
        if i in free:
            row[free.index(i)] = f.one
        sect_rows.append(tuple(row))
    section = Mat(f, ambient_dim, quo_dim, tuple(sect_rows))
    return QuotientSpace(f, ambient_dim, red, quo_dim, projection, section)


def descends(m: Mat, q: QuotientSpace) -> Optional[Mat]:
    """Module-level alias for :meth:`QuotientSpace.descends`."""
    return q.descends(m)
