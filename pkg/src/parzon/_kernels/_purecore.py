"""Scalar math kernels, pure-Python reference backend.

Everything here works on plain floats and flat positional buffers so that
the compiled backend in ``_fastcore.pyx`` can mirror the arithmetic
expression for expression.  Pair-indexed quantities always follow the slot
order (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
"""

from __future__ import annotations

import math

BACKEND = "python"

DET_FLOOR = 1.0e-8
VOLUME_FLOOR = 1.0e-12
DEGENERATE_PENALTY = 1.0e6
OBTUSE_PENALTY_WEIGHT = 1.0e3


def det3(ax, ay, az, bx, by, bz, cx, cy, cz):
    """Determinant of the 3x3 matrix whose columns are a, b, c."""
    return (
        ax * (by * cz - cy * bz)
        - bx * (ay * cz - cy * az)
        + cx * (ay * bz - by * az)
    )


def cross3(ax, ay, az, bx, by, bz):
    """Cross product a x b as an (x, y, z) tuple."""
    return (ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)


def volume_form(t12, t13, t14, t23, t24, t34):
    """Degree-3 form sending the six pair weights to the body volume.

    Expands to 16 of the 20 squarefree cubic monomials: the four missing
    ones are the products of three pairs sharing a common index, whose
    cross products are coplanar and contribute no volume.
    """
    return (
        t12 * t13 * t23
        + t12 * t14 * t24
        + t13 * t14 * t34
        + t23 * t24 * t34
        + (t12 + t34) * (t13 * t24 + t14 * t23)
        + (t13 + t24) * (t12 * t34 + t14 * t23)
        + (t14 + t23) * (t12 * t34 + t13 * t24)
    )


def volume_form_grad(t12, t13, t14, t23, t24, t34):
    """Six partial derivatives of :func:`volume_form`, in slot order."""
    g12 = t13 * t23 + t14 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t34
    g13 = t12 * t23 + t14 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t24
    g14 = t12 * t24 + t13 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t23
    g23 = t12 * t13 + t24 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t14
    g24 = t12 * t14 + t23 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t13
    g34 = t13 * t14 + t23 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t12
    return (g12, g13, g14, g23, g24, g34)


def zonotope_volume(flat, m):
    """Sum of |det| over generator triples; flat is [x0, y0, z0, x1, ...]."""
    total = 0.0
    for i in range(m - 2):
        ix = flat[3 * i]
        iy = flat[3 * i + 1]
        iz = flat[3 * i + 2]
        for j in range(i + 1, m - 1):
            jx = flat[3 * j]
            jy = flat[3 * j + 1]
            jz = flat[3 * j + 2]
            for k in range(j + 1, m):
                total += abs(
                    det3(ix, iy, iz, jx, jy, jz, flat[3 * k], flat[3 * k + 1], flat[3 * k + 2])
                )
    return total


def zonotope_surface(flat, m):
    """Twice the sum of |cross| over generator pairs."""
    total = 0.0
    for i in range(m - 1):
        ix = flat[3 * i]
        iy = flat[3 * i + 1]
        iz = flat[3 * i + 2]
        for j in range(i + 1, m):
            cx, cy, cz = cross3(ix, iy, iz, flat[3 * j], flat[3 * j + 1], flat[3 * j + 2])
            total += math.sqrt(cx * cx + cy * cy + cz * cz)
    return 2.0 * total


def zonotope_mean_width(flat, m):
    """Half the sum of generator lengths."""
    total = 0.0
    for i in range(m):
        x = flat[3 * i]
        y = flat[3 * i + 1]
        z = flat[3 * i + 2]
        total += math.sqrt(x * x + y * y + z * z)
    return 0.5 * total


def _normalized_vertices(x):
    """Vertices v1..v4 rescaled to |det(v1,v2,v3)| = 1, or None when flat.

    x[0:9] holds v1, v2, v3; v4 closes the sum to zero before rescaling.
    """
    v1x = float(x[0])
    v1y = float(x[1])
    v1z = float(x[2])
    v2x = float(x[3])
    v2y = float(x[4])
    v2z = float(x[5])
    v3x = float(x[6])
    v3y = float(x[7])
    v3z = float(x[8])
    d = det3(v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z)
    ad = abs(d)
    if ad < DET_FLOOR:
        return None
    s = ad ** (-1.0 / 3.0)
    v1x *= s
    v1y *= s
    v1z *= s
    v2x *= s
    v2y *= s
    v2z *= s
    v3x *= s
    v3y *= s
    v3z *= s
    v4x = -(v1x + v2x + v3x)
    v4y = -(v1y + v2y + v3y)
    v4z = -(v1z + v2z + v3z)
    return (v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z, v4x, v4y, v4z)


def width_volume_objective(x, free):
    """Scale-invariant mean-width objective used by the type optimizer.

    x[0:9] parametrizes the tetrahedron (renormalized per call), x[9:]
    holds square roots of the pair weights on the free slots.  Near-flat
    tetrahedra and near-zero volumes get a flat penalty instead of a
    value, so the simplex search backs away on its own.
    """
    v = _normalized_vertices(x)
    if v is None:
        return DEGENERATE_PENALTY
    (v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z, v4x, v4y, v4z) = v

    cx, cy, cz = cross3(v1x, v1y, v1z, v2x, v2y, v2z)
    n12 = math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v1x, v1y, v1z, v3x, v3y, v3z)
    n13 = math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v1x, v1y, v1z, v4x, v4y, v4z)
    n14 = math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v2x, v2y, v2z, v3x, v3y, v3z)
    n23 = math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v2x, v2y, v2z, v4x, v4y, v4z)
    n24 = math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v3x, v3y, v3z, v4x, v4y, v4z)
    n34 = math.sqrt(cx * cx + cy * cy + cz * cz)

    b12 = 0.0
    b13 = 0.0
    b14 = 0.0
    b23 = 0.0
    b24 = 0.0
    b34 = 0.0
    k = 9
    for slot in free:
        r = float(x[k])
        k += 1
        if slot == 0:
            b12 = r * r
        elif slot == 1:
            b13 = r * r
        elif slot == 2:
            b14 = r * r
        elif slot == 3:
            b23 = r * r
        elif slot == 4:
            b24 = r * r
        else:
            b34 = r * r

    w = 0.5 * (b12 * n12 + b13 * n13 + b14 * n14 + b23 * n23 + b24 * n24 + b34 * n34)
    vol = volume_form(b12, b13, b14, b23, b24, b34)
    if vol < VOLUME_FLOOR:
        return DEGENERATE_PENALTY
    if w <= 0.0:
        return DEGENERATE_PENALTY
    return w * vol ** (-1.0 / 3.0)


def isotropic_objective(x):
    """Negated volume-form value at the zeta weights of the tetrahedron in x.

    zeta_ij pairs the opposite-pair inner product with the cross-product
    norm; its form value is the quantity the isotropic-width reduction
    maximizes.  Positive opposite-pair inner products are penalized rather
    than rejected so the search can cross slightly infeasible territory.
    """
    v = _normalized_vertices(x)
    if v is None:
        return DEGENERATE_PENALTY
    (v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z, v4x, v4y, v4z) = v

    g12 = -(v3x * v4x + v3y * v4y + v3z * v4z)
    g13 = -(v2x * v4x + v2y * v4y + v2z * v4z)
    g14 = -(v2x * v3x + v2y * v3y + v2z * v3z)
    g23 = -(v1x * v4x + v1y * v4y + v1z * v4z)
    g24 = -(v1x * v3x + v1y * v3y + v1z * v3z)
    g34 = -(v1x * v2x + v1y * v2y + v1z * v2z)

    cx, cy, cz = cross3(v1x, v1y, v1z, v2x, v2y, v2z)
    z12 = g12 * math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v1x, v1y, v1z, v3x, v3y, v3z)
    z13 = g13 * math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v1x, v1y, v1z, v4x, v4y, v4z)
    z14 = g14 * math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v2x, v2y, v2z, v3x, v3y, v3z)
    z23 = g23 * math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v2x, v2y, v2z, v4x, v4y, v4z)
    z24 = g24 * math.sqrt(cx * cx + cy * cy + cz * cz)
    cx, cy, cz = cross3(v3x, v3y, v3z, v4x, v4y, v4z)
    z34 = g34 * math.sqrt(cx * cx + cy * cy + cz * cz)

    penalty = 0.0
    if g12 < 0.0:
        penalty -= g12
    if g13 < 0.0:
        penalty -= g13
    if g14 < 0.0:
        penalty -= g14
    if g23 < 0.0:
        penalty -= g23
    if g24 < 0.0:
        penalty -= g24
    if g34 < 0.0:
        penalty -= g34

    return -volume_form(z12, z13, z14, z23, z24, z34) + OBTUSE_PENALTY_WEIGHT * penalty
