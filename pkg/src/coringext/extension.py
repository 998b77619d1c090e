"""Measurings, their classification, and coring extensions.

A measuring of an A-coring C by an algebra B is a map nu: C (x) B -> A
subject to a unit law and a twisted multiplicativity law; measurings
biject with algebra maps B -> *C.  A coring extension equips C with a
compatible right B-action and right D-coaction, and induces a functor
from right C-comodules to right D-comodules.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List

from .errors import (AxiomViolation, DimensionMismatch, MiddleMismatch,
                     NotColinear, NotCoringMorphism)
from .exactla import Mat, QuotientSpace
from .algmod import (Algebra, AlgebraMap, Bimodule, RightModule,
                     check_right_module, make_algebra_map)
from .coring import (Comodule, Coring, DualRing, check_bicomodule,
                     check_colinear, check_comodule, dual_coords,
                     dual_element, dual_ring, make_comodule)
from .tensorcat import balanced_quotient, tensor_over
from .verdict import Verdict
from ._search import enumerate_affine


@dataclass(frozen=True)
class Measuring:
    """Candidate measuring of a coring by an algebra: nu: C (x) B -> A."""

    coring: Coring
    B: Algebra
    nu: Mat


def check_measuring(m: Measuring) -> Verdict:
    """Left A-linearity plus the unit and multiplicativity diagrams."""
    c, b = m.coring, m.B
    f = c.A.field
    if m.nu.rows != c.A.dim or m.nu.cols != c.dim * b.dim:
        raise DimensionMismatch("measuring has wrong shape")
    ia = Mat.identity(f, c.A.dim)
    ib = Mat.identity(f, b.dim)
    ic = Mat.identity(f, c.dim)
    if m.nu @ c.C.lact.kron(ib) != c.A.mult_mat @ ia.kron(m.nu):
        return Verdict.reject("not-left-linear")
    if m.nu @ ic.kron(b.unit_col) != c.eps:
        return Verdict.reject("unit-diagram")
    lhs = m.nu @ ic.kron(b.mult_mat)
    rhs = m.nu @ c.C.ract.kron(ib) @ ic.kron(m.nu).kron(ib) @ \
        c.delta_lift.kron(ib).kron(ib)
    if lhs != rhs:
        return Verdict.reject("multiplication-diagram")
    return Verdict.accept()


def make_measuring(c: Coring, b: Algebra, nu: Mat) -> Measuring:
    m = Measuring(c, b, nu)
    check_measuring(m).raise_if_failed()
    return m


def enumerate_measurings(c: Coring, b: Algebra,
                         max_enum=None) -> List[Measuring]:
    """All measurings of c by b over a prime field, in canonical order.

    The linear constraints (left A-linearity, unit diagram) are solved
    exactly; the remaining affine space is swept and filtered by the
    multiplicativity diagram.
    """
    f = c.A.field
    ia = Mat.identity(f, c.A.dim)
    ib = Mat.identity(f, b.dim)
    ic = Mat.identity(f, c.dim)

    def residual(nu: Mat) -> Mat:
        lin = nu @ c.C.lact.kron(ib) - c.A.mult_mat @ ia.kron(nu)
        unit = nu @ ic.kron(b.unit_col) - c.eps
        flat_lin = Mat(f, 1, lin.rows * lin.cols,
                       (tuple(x for row in lin.entries for x in row),))
        flat_unit = Mat(f, 1, unit.rows * unit.cols,
                        (tuple(x for row in unit.entries for x in row),))
        return Mat(f, 1, flat_lin.cols + flat_unit.cols,
                   (flat_lin.entries[0] + flat_unit.entries[0],))

    def keep(nu: Mat) -> bool:
        return bool(check_measuring(Measuring(c, b, nu)))

    shape = (c.A.dim, c.dim * b.dim)
    return [Measuring(c, b, nu)
            for nu in enumerate_affine(f, shape, residual, keep, max_enum)]


# -- the bijection with algebra maps B -> *C --------------------------


def measuring_to_algebra_map(m: Measuring) -> AlgebraMap:
    """chi(b) = nu(- (x) b), an algebra map B -> *C."""
    check_measuring(m).raise_if_failed()
    c, b = m.coring, m.B
    f = c.A.field
    dr = dual_ring(c)
    cols = []
    for j in range(b.dim):
        nu_j = Mat(f, c.A.dim, c.dim, tuple(
            tuple(m.nu.entries[r][s * b.dim + j] for s in range(c.dim))
            for r in range(c.A.dim)))
        coords = dual_coords(dr, nu_j)
        if coords is None:
            raise AxiomViolation("measuring-slice-not-left-linear", (j,))
        cols.append(coords)
    return make_algebra_map(b, dr.alg, Mat.from_cols(f, cols))


def algebra_map_to_measuring(c: Coring, chi: AlgebraMap) -> Measuring:
    """nu(x (x) b) = chi(b)(x), the inverse of measuring_to_algebra_map."""
    dr = dual_ring(c)
    if chi.target != dr.alg:
        raise DimensionMismatch("map does not land in the dual ring")
    f = c.A.field
    b = chi.source
    cols = []
    slices = [dual_element(dr, chi.matrix.col(j)) for j in range(b.dim)]
    for s in range(c.dim):
        for j in range(b.dim):
            cols.append(slices[j].col(s))
    return make_measuring(c, b, Mat.from_cols(f, cols))


# -- the equivalence with right B-structures on C ----------------------


def check_right_b_structure(c: Coring, b: Algebra, ract_b: Mat) -> Verdict:
    """Accept iff ract_b makes C an (A, B)-bimodule with B-bilinear coproduct."""
    f = c.A.field
    if ract_b.rows != c.dim or ract_b.cols != c.dim * b.dim:
        raise DimensionMismatch("right action has wrong shape")
    v = check_right_module(RightModule(b, c.dim, ract_b))
    if not v:
        return v
    ia = Mat.identity(f, c.A.dim)
    ib = Mat.identity(f, b.dim)
    ic = Mat.identity(f, c.dim)
    if c.C.lact @ ia.kron(ract_b) != ract_b @ c.C.lact.kron(ib):
        return Verdict.reject("actions-do-not-commute")
    proj = c.cc().proj
    lhs = proj @ c.delta_lift @ ract_b
    rhs = proj @ ic.kron(ract_b) @ c.delta_lift.kron(ib)
    if lhs != rhs:
        return Verdict.reject("coproduct-not-right-linear")
    return Verdict.accept()


def action_from_measuring(m: Measuring) -> Mat:
    """The right B-action x.b = x_(1) nu(x_(2) (x) b) on C."""
    c = m.coring
    ic = Mat.identity(c.A.field, c.dim)
    ib = Mat.identity(c.A.field, m.B.dim)
    ract_b = c.C.ract @ ic.kron(m.nu) @ c.delta_lift.kron(ib)
    check_right_b_structure(c, m.B, ract_b).raise_if_failed()
    return ract_b


def measuring_from_action(c: Coring, b: Algebra, ract_b: Mat) -> Measuring:
    """nu = eps . ract_b, the inverse of action_from_measuring."""
    check_right_b_structure(c, b, ract_b).raise_if_failed()
    return make_measuring(c, b, c.eps @ ract_b)


# -- coring extensions -------------------------------------------------


@dataclass(frozen=True)
class CoringExtension:
    """D a right extension of C: right B-action and right D-coaction on C.

    ``sigma_lift`` is a canonical lift C -> C (x)_k D of the coaction.
    """

    c: Coring
    d: Coring
    ract: Mat        # C (x) B -> C
    sigma_lift: Mat  # C -> C (x) D

    def cd(self) -> QuotientSpace:
        """C (x)_B D, the home of the coaction."""
        return _cd(self.d.A, self.ract, self.d.C)


@lru_cache(maxsize=None)
def _cd(b: Algebra, ract: Mat, dbim: Bimodule) -> QuotientSpace:
    return balanced_quotient(b.field, (ract.rows, dbim.dim),
                             {0: (ract, dbim.lact, b)})


def check_coring_extension(e: CoringExtension) -> Verdict:
    """Definition of an extension, verified as a bicomodule condition.

    C must be a (C, D)-bicomodule: the regular left C-coaction and sigma
    must commute, with sigma a B-linear coassociative counital coaction.
    """
    c, d = e.c, e.d
    if c.A.field != d.A.field:
        raise DimensionMismatch("corings over different fields")
    v = check_right_b_structure(c, d.A, e.ract)
    if not v:
        return v
    m = Bimodule(c.A, d.A, c.dim, c.C.lact, e.ract)
    return check_bicomodule(c, d, m, c.delta_lift, e.sigma_lift)


def make_extension(c: Coring, d: Coring, ract: Mat,
                   sigma_lift: Mat) -> CoringExtension:
    q = _cd(d.A, ract, d.C)
    e = CoringExtension(c, d, ract, q.canonical_lift(sigma_lift))
    check_coring_extension(e).raise_if_failed()
    return e


def identity_extension(c: Coring) -> CoringExtension:
    """Every coring is an extension of itself via its own coproduct."""
    return make_extension(c, c, c.C.ract, c.delta_lift)


def extension_from_coring_map(gamma: Mat, c: Coring, d: Coring
                              ) -> CoringExtension:
    """The extension induced by a coring map gamma: C -> D over one algebra."""
    if c.A != d.A:
        raise DimensionMismatch("corings over different algebras")
    a = c.A
    f = a.field
    if gamma.rows != d.dim or gamma.cols != c.dim:
        raise DimensionMismatch("coring map has wrong shape")
    ia = Mat.identity(f, a.dim)
    ic = Mat.identity(f, c.dim)
    if gamma @ c.C.lact != d.C.lact @ ia.kron(gamma) or \
            gamma @ c.C.ract != d.C.ract @ gamma.kron(ia):
        raise NotCoringMorphism("A-bilinearity")
    if d.eps @ gamma != c.eps:
        raise NotCoringMorphism("counit")
    proj = d.cc().proj
    if proj @ d.delta_lift @ gamma != proj @ gamma.kron(gamma) @ c.delta_lift:
        raise NotCoringMorphism("coproduct")
    sigma_lift = ic.kron(gamma) @ c.delta_lift
    return make_extension(c, d, c.C.ract, sigma_lift)


# -- the induced functor M^C -> M^D ------------------------------------


def induced_action(e: CoringExtension, m: Comodule) -> Mat:
    """Right B-action m.b = m_(0) nu(m_(1) (x) b) on a right C-comodule."""
    if m.coring != e.c:
        raise DimensionMismatch("comodule is not over the extended coring")
    c, b = e.c, e.d.A
    f = c.A.field
    nu = c.eps @ e.ract
    im = Mat.identity(f, m.dim)
    ib = Mat.identity(f, b.dim)
    act = m.M.act @ im.kron(nu) @ m.rho_lift.kron(ib)
    check_right_module(RightModule(b, m.dim, act)).raise_if_failed()
    return act


def induced_coaction(e: CoringExtension, m: Comodule) -> Comodule:
    """The image of a right C-comodule under the functor M^C -> M^D."""
    c, d = e.c, e.d
    f = c.A.field
    act = induced_action(e, m)
    im = Mat.identity(f, m.dim)
    idd = Mat.identity(f, d.dim)
    rho = m.M.act.kron(idd) @ im.kron(c.eps).kron(idd) @ \
        im.kron(e.sigma_lift) @ m.rho_lift
    return make_comodule(d, RightModule(d.A, m.dim, act), rho)


def apply_functor(e: CoringExtension, f: Mat, m: Comodule,
                  n: Comodule) -> Mat:
    """Transport a C-colinear map along the induced functor (it is the
    same matrix, re-verified to be D-colinear)."""
    v = check_colinear(f, m, n)
    if not v:
        raise NotColinear(v.failure.kind, v.failure.witness)
    fm = induced_coaction(e, m)
    fn = induced_coaction(e, n)
    check_colinear(f, fm, fn).raise_if_failed()
    return f


def compose_extensions(e1: CoringExtension,
                       e2: CoringExtension) -> CoringExtension:
    """If D extends C and E extends D then E extends C."""
    if e1.d != e2.c:
        raise MiddleMismatch("middle corings do not agree")
    c, d = e1.c, e1.d
    ee = e2.d
    f = c.A.field
    ic = Mat.identity(f, c.dim)
    ir = Mat.identity(f, ee.A.dim)
    ie = Mat.identity(f, ee.dim)
    ract = e1.ract @ ic.kron(d.eps) @ ic.kron(e2.ract) @ \
        e1.sigma_lift.kron(ir)
    sigma = e1.ract.kron(ie) @ ic.kron(d.eps).kron(ie) @ \
        ic.kron(e2.sigma_lift) @ e1.sigma_lift
    return make_extension(c, ee, ract, sigma)
