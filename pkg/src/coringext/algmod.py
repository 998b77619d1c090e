"""Finite-dimensional algebras, algebra maps and (bi)modules.

Everything is presented by structure constants over a fixed base field and
validated exhaustively on basis tuples: over a field these checks are
complete, so no randomized testing is needed in the core.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional

from .errors import AxiomViolation, DimensionMismatch, SizeLimit
from .exactla import FieldSpec, Mat, current_max_enum
from .verdict import Failure, Verdict


@dataclass(frozen=True)
class Algebra:
    """Associative unital algebra: e_i e_j = sum_l mult[i][j][l] e_l."""

    field: FieldSpec
    dim: int
    mult: tuple  # 3-tensor, nested tuples
    unit: tuple  # coordinates of 1

    @cached_property
    def mult_mat(self) -> Mat:
        """Multiplication as a map A (x) A -> A, columns indexed row-major."""
        cols = [tuple(self.mult[i][j][l] for l in range(self.dim))
                for i in range(self.dim) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    @cached_property
    def unit_col(self) -> Mat:
        return Mat.column(self.field, self.unit)

    def product(self, u: tuple, v: tuple) -> tuple:
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if a == f.zero:
                continue
            for j, b in enumerate(v):
                if b == f.zero:
                    continue
                ab = f.mul(a, b)
                for l in range(self.dim):
                    c = self.mult[i][j][l]
                    if c != f.zero:
                        out[l] = f.add(out[l], f.mul(ab, c))
        return tuple(out)

    def basis_product(self, i: int, j: int) -> tuple:
        return tuple(self.mult[i][j])


def _coerce_tensor3(field, t, d0, d1, d2, what):
    if len(t) != d0:
        raise DimensionMismatch(f"{what}: expected {d0} slices")
    out = []
    for sl in t:
        if len(sl) != d1:
            raise DimensionMismatch(f"{what}: expected {d1} rows per slice")
        rows = []
        for row in sl:
            if len(row) != d2:
                raise DimensionMismatch(f"{what}: expected rows of length {d2}")
            rows.append(tuple(field.of(x) for x in row))
        out.append(tuple(rows))
    return tuple(out)


def make_algebra(field: FieldSpec, dim: int, mult, unit) -> Algebra:
    """Validated algebra from structure constants, or AxiomViolation."""
    mult = _coerce_tensor3(field, mult, dim, dim, dim, "mult")
    unit = tuple(field.of(x) for x in unit)
    if len(unit) != dim:
        raise DimensionMismatch("unit: wrong length")
    a = Algebra(field, dim, mult, unit)
    ver = check_algebra(a)
    ver.raise_if_failed()
    return a


def check_algebra(a: Algebra) -> Verdict:
    basis = [tuple(a.field.one if t == i else a.field.zero
                   for t in range(a.dim)) for i in range(a.dim)]
    for i in range(a.dim):
        if a.product(a.unit, basis[i]) != basis[i] or \
                a.product(basis[i], a.unit) != basis[i]:
            return Verdict.reject("unitality", (i,))
    for i in range(a.dim):
        for j in range(a.dim):
            eij = a.basis_product(i, j)
            for l in range(a.dim):
                lhs = a.product(eij, basis[l])
                rhs = a.product(basis[i], a.basis_product(j, l))
                if lhs != rhs:
                    return Verdict.reject("associativity", (i, j, l))
    return Verdict.accept()


@dataclass(frozen=True)
class AlgebraMap:
    """Candidate algebra map source -> target as a matrix on coordinates."""

    source: Algebra
    target: Algebra
    matrix: Mat


def check_algebra_map(f: AlgebraMap) -> Verdict:
    """Accept iff the matrix is unital and multiplicative on basis pairs."""
    m = f.matrix
    if m.rows != f.target.dim or m.cols != f.source.dim:
        raise DimensionMismatch("algebra map matrix has wrong shape")
    if m.apply(f.source.unit) != f.target.unit:
        return Verdict.reject("unit-not-preserved", ())
    for i in range(f.source.dim):
        fi = m.col(i)
        for j in range(f.source.dim):
            lhs = m.apply(f.source.basis_product(i, j))
            rhs = f.target.product(fi, m.col(j))
            if lhs != rhs:
                return Verdict.reject("not-multiplicative", (i, j))
    return Verdict.accept()


def make_algebra_map(source: Algebra, target: Algebra, matrix) -> AlgebraMap:
    if not isinstance(matrix, Mat):
        matrix = Mat.from_rows(source.field, matrix)
    f = AlgebraMap(source, target, matrix)
    check_algebra_map(f).raise_if_failed()
    return f


def is_isomorphism(f: AlgebraMap) -> bool:
    from .exactla import rank
    return bool(check_algebra_map(f)) and f.source.dim == f.target.dim \
        and rank(f.matrix) == f.source.dim


def opposite(a: Algebra) -> Algebra:
    """Same space, reversed multiplication; an involution on structure constants."""
    mult = tuple(tuple(a.mult[j][i] for j in range(a.dim))
                 for i in range(a.dim))
    return make_algebra(a.field, a.dim, mult, a.unit)


# -- modules ---------------------------------------------------------


@dataclass(frozen=True)
class RightModule:
    """Right module: action as a map M (x) A -> M."""

    alg: Algebra
    dim: int
    act: Mat


@dataclass(frozen=True)
class LeftModule:
    """Left module: action as a map A (x) M -> M."""

    alg: Algebra
    dim: int
    act: Mat


@dataclass(frozen=True)
class Bimodule:
    """(algL, algR)-bimodule with both actions stored as matrices."""

    algL: Algebra
    algR: Algebra
    dim: int
    lact: Mat  # A_L (x) M -> M
    ract: Mat  # M (x) A_R -> M

    def left_module(self) -> LeftModule:
        return LeftModule(self.algL, self.dim, self.lact)

    def right_module(self) -> RightModule:
        return RightModule(self.algR, self.dim, self.ract)


def _first_diff(m1: Mat, m2: Mat, dims) -> Optional[tuple]:
    """Decode the first differing column as a multi-index over ``dims``."""
    for c in range(m1.cols):
        if m1.col(c) != m2.col(c):
            idx = []
            rem = c
            for d in reversed(dims):
                idx.append(rem % d)
                rem //= d
            return tuple(reversed(idx))
    return None


def check_right_module(m: RightModule) -> Verdict:
    a = m.alg
    im = Mat.identity(a.field, m.dim)
    ia = Mat.identity(a.field, a.dim)
    if m.act.rows != m.dim or m.act.cols != m.dim * a.dim:
        raise DimensionMismatch("right action has wrong shape")
    w = _first_diff(m.act @ im.kron(a.unit_col), im, (m.dim,))
    if w is not None:
        return Verdict.reject("unital", w)
    w = _first_diff(m.act @ m.act.kron(ia), m.act @ im.kron(a.mult_mat),
                    (m.dim, a.dim, a.dim))
    if w is not None:
        return Verdict.reject("right-assoc", w)
    return Verdict.accept()


def check_left_module(m: LeftModule) -> Verdict:
    a = m.alg
    im = Mat.identity(a.field, m.dim)
    ia = Mat.identity(a.field, a.dim)
    if m.act.rows != m.dim or m.act.cols != a.dim * m.dim:
        raise DimensionMismatch("left action has wrong shape")
    w = _first_diff(m.act @ a.unit_col.kron(im), im, (m.dim,))
    if w is not None:
        return Verdict.reject("unital", w)
    w = _first_diff(m.act @ a.mult_mat.kron(im), m.act @ ia.kron(m.act),
                    (a.dim, a.dim, m.dim))
    if w is not None:
        return Verdict.reject("left-assoc", w)
    return Verdict.accept()


def check_bimodule(b: Bimodule) -> Verdict:
    v = check_left_module(b.left_module())
    if not v:
        return v
    v = check_right_module(b.right_module())
    if not v:
        return v
    il = Mat.identity(b.algL.field, b.algL.dim)
    ir = Mat.identity(b.algR.field, b.algR.dim)
    # (a.m).b == a.(m.b) on A_L (x) M (x) A_R
    w = _first_diff(b.ract @ b.lact.kron(ir), b.lact @ il.kron(b.ract),
                    (b.algL.dim, b.dim, b.algR.dim))
    if w is not None:
        return Verdict.reject("commuting-actions", w)
    return Verdict.accept()


def make_bimodule(algL: Algebra, algR: Algebra, lact, ract) -> Bimodule:
    """Validated bimodule from 3-tensors lact[(a,m)->m'], ract[(m,a)->m']."""
    dim = len(lact[0]) if lact else len(ract[0] if ract else ())
    f = algL.field
    lt = _coerce_tensor3(f, lact, algL.dim, dim, dim, "lact")
    rt = _coerce_tensor3(f, ract, dim, algR.dim, dim, "ract")
    lcols = [tuple(lt[i][j][m] for m in range(dim))
             for i in range(algL.dim) for j in range(dim)]
    rcols = [tuple(rt[j][i][m] for m in range(dim))
             for j in range(dim) for i in range(algR.dim)]
    b = Bimodule(algL, algR, dim,
                 Mat.from_cols(f, lcols), Mat.from_cols(f, rcols))
    check_bimodule(b).raise_if_failed()
    return b


def bimodule_from_actions(algL: Algebra, algR: Algebra, dim: int,
                          lact: Mat, ract: Mat) -> Bimodule:
    b = Bimodule(algL, algR, dim, lact, ract)
    check_bimodule(b).raise_if_failed()
    return b


def right_regular(a: Algebra) -> RightModule:
    return RightModule(a, a.dim, a.mult_mat)


def left_regular(a: Algebra) -> LeftModule:
    return LeftModule(a, a.dim, a.mult_mat)


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule(a, a, a.dim, a.mult_mat, a.mult_mat)


def restrict_right(m: RightModule, f: AlgebraMap) -> RightModule:
    """Restrict a right module along an algebra map into its algebra."""
    if f.target != m.alg:
        raise DimensionMismatch("map does not land in the module's algebra")
    im = Mat.identity(m.alg.field, m.dim)
    return RightModule(f.source, m.dim, m.act @ im.kron(f.matrix))


def restrict_left(m: LeftModule, f: AlgebraMap) -> LeftModule:
    if f.target != m.alg:
        raise DimensionMismatch("map does not land in the module's algebra")
    im = Mat.identity(m.alg.field, m.dim)
    return LeftModule(f.source, m.dim, m.act @ f.matrix.kron(im))


# -- enumeration -----------------------------------------------------


def enumerate_algebra_maps(b: Algebra, a: Algebra,
                           max_enum=None) -> List[AlgebraMap]:
    """All algebra maps b -> a over a prime field, in lexicographic order.

    Brute force over every linear map, filtered by the unit and
    multiplicativity identities; the candidate sweep is ordered
    lexicographically on row-major matrix entries with 0 < 1 < ... < p-1.
    """
    f = b.field
    nvars = a.dim * b.dim
    elems = tuple(f.elements())  # raises NonFiniteField over Q
    if max_enum is None:
        max_enum = current_max_enum()
    total = len(elems) ** nvars
    if total > max_enum:
        raise SizeLimit(f"{total} candidates exceed the guard {max_enum}")
    pairs = [(i, j, b.basis_product(i, j))
             for i in range(b.dim) for j in range(b.dim)]
    out = []
    for flat in itertools.product(elems, repeat=nvars):
        mat = Mat(f, a.dim, b.dim,
                  tuple(flat[r * b.dim:(r + 1) * b.dim]
                        for r in range(a.dim)))
        if mat.apply(b.unit) != a.unit:
            continue
        ok = True
        cols = [mat.col(j) for j in range(b.dim)]
        for i, j, prod in pairs:
            if mat.apply(prod) != a.product(cols[i], cols[j]):
                ok = False
                break
        if ok:
            out.append(AlgebraMap(b, a, mat))
    return out
