"""2-vectors and 2x2 matrices over a ring: the area form, determinants,
adjugate inverses, and SL_2 enumeration.

Vectors are pairs (x1, x2) of ring elements; matrices are row-major
4-tuples (a, b, c, d) meaning [[a, b], [c, d]].  Nothing here is bigger
than 2x2 on purpose.
"""

from __future__ import annotations

from typing import Iterator

from .rings import ModPrimePower, RingSpec

Vec2 = tuple
Mat2 = tuple


class SingularMatrixError(Exception):
    """Matrix inversion was requested but the determinant is not a unit."""


def perp_dot(spec: RingSpec, x: Vec2, y: Vec2):
    """Area form x . y^perp = x1*y2 - x2*y1, with y^perp = (y2, -y1).

    Equals the determinant of the matrix with columns x, y, and is
    invariant under the SL_2 action on both arguments."""
    return spec.sub(spec.mul(x[0], y[1]), spec.mul(x[1], y[0]))


def identity(spec: RingSpec) -> Mat2:
    return (spec.one, spec.zero, spec.zero, spec.one)


def col_matrix(x: Vec2, y: Vec2) -> Mat2:
    """Matrix with columns x and y."""
    return (x[0], y[0], x[1], y[1])


def det(spec: RingSpec, m: Mat2):
    a, b, c, d = m
    return spec.sub(spec.mul(a, d), spec.mul(b, c))


def mat_add(spec: RingSpec, m: Mat2, n: Mat2) -> Mat2:
    return tuple(spec.add(x, y) for x, y in zip(m, n))


def mat_mul(spec: RingSpec, m: Mat2, n: Mat2) -> Mat2:
    a, b, c, d = m
    e, f, g, h = n
    return (
        spec.add(spec.mul(a, e), spec.mul(b, g)),
        spec.add(spec.mul(a, f), spec.mul(b, h)),
        spec.add(spec.mul(c, e), spec.mul(d, g)),
        spec.add(spec.mul(c, f), spec.mul(d, h)),
    )


def apply_mat(spec: RingSpec, m: Mat2, v: Vec2) -> Vec2:
    a, b, c, d = m
    return (
        spec.add(spec.mul(a, v[0]), spec.mul(b, v[1])),
        spec.add(spec.mul(c, v[0]), spec.mul(d, v[1])),
    )


def adjugate(spec: RingSpec, m: Mat2) -> Mat2:
    a, b, c, d = m
    return (d, spec.neg(b), spec.neg(c), a)


def inverse(spec: RingSpec, m: Mat2) -> Mat2:
    """Adjugate inverse; requires det(m) to be a unit."""
    dm = det(spec, m)
    if not spec.is_unit(dm):
        raise SingularMatrixError(f"determinant {dm!r} is not a unit in {spec.label()}")
    di = spec.inv(dm)
    adj = adjugate(spec, m)
    return tuple(spec.mul(di, x) for x in adj)


def det_bilinear(spec: RingSpec, m: Mat2, n: Mat2):
    """The bilinear form B with det(M + N) = det(M) + det(N) + B(M, N);
    explicitly B = a_m d_n + a_n d_m - b_m c_n - b_n c_m."""
    a1, b1, c1, d1 = m
    a2, b2, c2, d2 = n
    pos = spec.add(spec.mul(a1, d2), spec.mul(a2, d1))
    neg = spec.add(spec.mul(b1, c2), spec.mul(b2, c1))
    return spec.sub(pos, neg)


def is_sl2(spec: RingSpec, m: Mat2) -> bool:
    return det(spec, m) == spec.one


def sl2_order(spec: RingSpec) -> int:
    """|SL_2|: q^3 - q for a field of size q, p^{3l} - p^{3l-2} for Z/p^l Z."""
    if isinstance(spec, ModPrimePower):
        p, ell = spec.p, spec.ell
        return p ** (3 * ell) - p ** (3 * ell - 2)
    q = spec.size()
    return q ** 3 - q


def enumerate_sl2(spec: RingSpec) -> Iterator[Mat2]:
    """All det-1 matrices, each exactly once, in a fixed deterministic
    order.

    Split on whether the entry a is a unit: for unit a, (b, c) are free
    and d = a^{-1}(1 + bc); otherwise b must be a unit (ad - bc = 1
    forces bc to be a unit), d is free, and c = b^{-1}(ad - 1).  The
    order is ascending in the free entries' canonical indexes."""
    one = spec.one
    elems = list(spec.elements())
    units = [a for a in elems if spec.is_unit(a)]
    for a in elems:
        if spec.is_unit(a):
            ai = spec.inv(a)
            for b in elems:
                for c in elems:
                    d = spec.mul(ai, spec.add(one, spec.mul(b, c)))
                    yield (a, b, c, d)
        else:
            for b in units:
                bi = spec.inv(b)
                for d in elems:
                    c = spec.mul(bi, spec.sub(spec.mul(a, d), one))
                    yield (a, b, c, d)


def mat_to_json(spec: RingSpec, m: Mat2) -> list:
    return [spec.element_to_json(x) for x in m]
