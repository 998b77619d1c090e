"""Brute-force enumeration over affine solution spaces of linear systems."""

import itertools
from typing import Callable, List

from .errors import SizeLimit
from .exactla import FieldSpec, Mat, current_max_enum, kernel, solve


def affine_solutions(field: FieldSpec, shape, residual: Callable[[Mat], Mat]):
    """Particular solution and kernel basis of a linear residual map.

    ``residual`` must be affine in the entries of its argument; the
    solutions of ``residual(m) == 0`` form ``particular + span(basis)``.
    Returns None if the system is inconsistent.
    """
    rows, cols = shape
    nvars = rows * cols

    def unflatten(flat) -> Mat:
        return Mat(field, rows, cols,
                   tuple(flat[r * cols:(r + 1) * cols] for r in range(rows)))

    zero = unflatten((field.zero,) * nvars)
    offset = residual(zero)
    coeff_cols = []
    for v in range(nvars):
        e = unflatten(tuple(field.one if t == v else field.zero
                            for t in range(nvars)))
        resid = residual(e) - offset
        coeff_cols.append(tuple(x for row in resid.entries for x in row))
    coeff = Mat.from_cols(field, coeff_cols)
    target = tuple(field.neg(x) for row in offset.entries for x in row)
    part = solve(coeff, target)
    if part is None:
        return None
    basis = [unflatten(row) for row in kernel(coeff).entries]
    return unflatten(part), basis


def enumerate_affine(field: FieldSpec, shape, residual: Callable[[Mat], Mat],
                     keep: Callable[[Mat], bool],
                     max_enum=None) -> List[Mat]:
    """All solutions of ``residual == 0`` passing ``keep``, in canonical
    order by row-major flattened entries."""
    sol = affine_solutions(field, shape, residual)
    if sol is None:
        return []
    part, basis = sol
    elems = tuple(field.elements())  # raises NonFiniteField over Q
    if max_enum is None:
        max_enum = current_max_enum()
    total = len(elems) ** len(basis)
    if total > max_enum:
        raise SizeLimit(f"{total} candidates exceed the guard {max_enum}")
    out = []
    for coeffs in itertools.product(elems, repeat=len(basis)):
        m = part
        for x, b in zip(coeffs, basis):
            if x != field.zero:
                m = m + b.scale(x)
        if keep(m):
            out.append(m)
    out.sort(key=lambda m: m.entries)
    return out
