# cython: boundscheck=False, wraparound=False, cdivision=False
"""Scalar math kernels, compiled backend.

Mirrors ``_purecore`` expression for expression; compiled with FMA
contraction disabled so both backends round identically.  See the pure
module for documentation of each function.
"""

from libc.math cimport fabs, sqrt, pow

BACKEND = "c"

DET_FLOOR = 1.0e-8
VOLUME_FLOOR = 1.0e-12
DEGENERATE_PENALTY = 1.0e6
OBTUSE_PENALTY_WEIGHT = 1.0e3

cdef double _DET_FLOOR = 1.0e-8
cdef double _VOLUME_FLOOR = 1.0e-12
cdef double _DEGENERATE_PENALTY = 1.0e6
cdef double _OBTUSE_PENALTY_WEIGHT = 1.0e3


cdef inline double _det3(double ax, double ay, double az,
                         double bx, double by, double bz,
                         double cx, double cy, double cz) nogil:
    return (ax * (by * cz - cy * bz)
            - bx * (ay * cz - cy * az)
            + cx * (ay * bz - by * az))


cdef inline double _volume_form(double t12, double t13, double t14,
                                double t23, double t24, double t34) nogil:
    return (t12 * t13 * t23
            + t12 * t14 * t24
            + t13 * t14 * t34
            + t23 * t24 * t34
            + (t12 + t34) * (t13 * t24 + t14 * t23)
            + (t13 + t24) * (t12 * t34 + t14 * t23)
            + (t14 + t23) * (t12 * t34 + t13 * t24))


def det3(double ax, double ay, double az,
         double bx, double by, double bz,
         double cx, double cy, double cz):
    return _det3(ax, ay, az, bx, by, bz, cx, cy, cz)


def cross3(double ax, double ay, double az,
           double bx, double by, double bz):
    return (ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)


def volume_form(double t12, double t13, double t14,
                double t23, double t24, double t34):
    return _volume_form(t12, t13, t14, t23, t24, t34)


def volume_form_grad(double t12, double t13, double t14,
                     double t23, double t24, double t34):
    cdef double g12 = t13 * t23 + t14 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t34
    cdef double g13 = t12 * t23 + t14 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t24
    cdef double g14 = t12 * t24 + t13 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t23
    cdef double g23 = t12 * t13 + t24 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t14
    cdef double g24 = t12 * t14 + t23 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t13
    cdef double g34 = t13 * t14 + t23 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t12
    return (g12, g13, g14, g23, g24, g34)


def zonotope_volume(double[::1] flat, Py_ssize_t m):
    cdef double total = 0.0
    cdef Py_ssize_t i, j, k
    cdef double ix, iy, iz, jx, jy, jz
    for i in range(m - 2):
        ix = flat[3 * i]
        iy = flat[3 * i + 1]
        iz = flat[3 * i + 2]
        for j in range(i + 1, m - 1):
            jx = flat[3 * j]
            jy = flat[3 * j + 1]
            jz = flat[3 * j + 2]
            for k in range(j + 1, m):
                total += fabs(_det3(ix, iy, iz, jx, jy, jz,
                                    flat[3 * k], flat[3 * k + 1], flat[3 * k + 2]))
    return total


def zonotope_surface(double[::1] flat, Py_ssize_t m):
    cdef double total = 0.0
    cdef Py_ssize_t i, j
    cdef double ix, iy, iz, jx, jy, jz, cx, cy, cz
    for i in range(m - 1):
        ix = flat[3 * i]
        iy = flat[3 * i + 1]
        iz = flat[3 * i + 2]
        for j in range(i + 1, m):
            jx = flat[3 * j]
            jy = flat[3 * j + 1]
            jz = flat[3 * j + 2]
            cx = iy * jz - iz * jy
            cy = iz * jx - ix * jz
            cz = ix * jy - iy * jx
            total += sqrt(cx * cx + cy * cy + cz * cz)
    return 2.0 * total


def zonotope_mean_width(double[::1] flat, Py_ssize_t m):
    cdef double total = 0.0
    cdef Py_ssize_t i
    cdef double x, y, z
    for i in range(m):
        x = flat[3 * i]
        y = flat[3 * i + 1]
        z = flat[3 * i + 2]
        total += sqrt(x * x + y * y + z * z)
    return 0.5 * total


def width_volume_objective(double[::1] x, tuple free):
    cdef double v1x = x[0], v1y = x[1], v1z = x[2]
    cdef double v2x = x[3], v2y = x[4], v2z = x[5]
    cdef double v3x = x[6], v3y = x[7], v3z = x[8]
    cdef double d = _det3(v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z)
    cdef double ad = fabs(d)
    if ad < _DET_FLOOR:
        return _DEGENERATE_PENALTY
    cdef double s = pow(ad, -1.0 / 3.0)
    v1x *= s; v1y *= s; v1z *= s
    v2x *= s; v2y *= s; v2z *= s
    v3x *= s; v3y *= s; v3z *= s
    cdef double v4x = -(v1x + v2x + v3x)
    cdef double v4y = -(v1y + v2y + v3y)
    cdef double v4z = -(v1z + v2z + v3z)

    cdef double cx, cy, cz
    cx = v1y * v2z - v1z * v2y
    cy = v1z * v2x - v1x * v2z
    cz = v1x * v2y - v1y * v2x
    cdef double n12 = sqrt(cx * cx + cy * cy + cz * cz)
    cx = v1y * v3z - v1z * v3y
    cy = v1z * v3x - v1x * v3z
    cz = v1x * v3y - v1y * v3x
    cdef double n13 = sqrt(cx * cx + cy * cy + cz * cz)
    cx = v1y * v4z - v1z * v4y
    cy = v1z * v4x - v1x * v4z
    cz = v1x * v4y - v1y * v4x
    cdef double n14 = sqrt(cx * cx + cy * cy + cz * cz)
    cx = v2y * v3z - v2z * v3y
    cy = v2z * v3x - v2x * v3z
    cz = v2x * v3y - v2y * v3x
    cdef double n23 = sqrt(cx * cx + cy * cy + cz * cz)
    cx = v2y * v4z - v2z * v4y
    cy = v2z * v4x - v2x * v4z
    cz = v2x * v4y - v2y * v4x
    cdef double n24 = sqrt(cx * cx + cy * cy + cz * cz)
    cx = v3y * v4z - v3z * v4y
    cy = v3z * v4x - v3x * v4z
    cz = v3x * v4y - v3y * v4x
    cdef double n34 = sqrt(cx * cx + cy * cy + cz * cz)

    cdef double b12 = 0.0, b13 = 0.0, b14 = 0.0, b23 = 0.0, b24 = 0.0, b34 = 0.0
    cdef Py_ssize_t k = 9
    cdef double r
    cdef long slot
    for obj_slot in free:
        slot = obj_slot
        r = x[k]
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

    cdef double w = 0.5 * (b12 * n12 + b13 * n13 + b14 * n14 + b23 * n23 + b24 * n24 + b34 * n34)
    cdef double vol = _volume_form(b12, b13, b14, b23, b24, b34)
    if vol < _VOLUME_FLOOR:
        return _DEGENERATE_PENALTY
    if w <= 0.0:
        return _DEGENERATE_PENALTY
    return w * pow(vol, -1.0 / 3.0)


def isotropic_objective(double[::1] x):
    cdef double v1x = x[0], v1y = x[1], v1z = x[2]
    cdef double v2x = x[3], v2y = x[4], v2z = x[5]
    cdef double v3x = x[6], v3y = x[7], v3z = x[8]
    cdef double d = _det3(v1x, v1y, v1z, v2x, v2y, v2z, v3x, v3y, v3z)
    cdef double ad = fabs(d)
    if ad < _DET_FLOOR:
        return _DEGENERATE_PENALTY
    cdef double s = pow(ad, -1.0 / 3.0)
    v1x *= s; v1y *= s; v1z *= s
    v2x *= s; v2y *= s; v2z *= s
    v3x *= s; v3y *= s; v3z *= s
    cdef double v4x = -(v1x + v2x + v3x)
    cdef double v4y = -(v1y + v2y + v3y)
    cdef double v4z = -(v1z + v2z + v3z)

    cdef double g12 = -(v3x * v4x + v3y * v4y + v3z * v4z)
    cdef double g13 = -(v2x * v4x + v2y * v4y + v2z * v4z)
    cdef double g14 = -(v2x * v3x + v2y * v3y + v2z * v3z)
    cdef double g23 = -(v1x * v4x + v1y * v4y + v1z * v4z)
    cdef double g24 = -(v1x * v3x + v1y * v3y + v1z * v3z)
    cdef double g34 = -(v1x * v2x + v1y * v2y + v1z * v2z)

    cdef double cx, cy, cz
    cx = v1y * v2z - v1z * v2y
    cy = v1z * v2x - v1x * v2z
    cz = v1x * v2y - v1y * v2x
    cdef double z12 = g12 * sqrt(cx * cx + cy * cy + cz * cz)
    cx = v1y * v3z - v1z * v3y
    cy = v1z * v3x - v1x * v3z
    cz = v1x * v3y - v1y * v3x
    cdef double z13 = g13 * sqrt(cx * cx + cy * cy + cz * cz)
    cx = v1y * v4z - v1z * v4y
    cy = v1z * v4x - v1x * v4z
    cz = v1x * v4y - v1y * v4x
    cdef double z14 = g14 * sqrt(cx * cx + cy * cy + cz * cz)
    cx = v2y * v3z - v2z * v3y
    cy = v2z * v3x - v2x * v3z
    cz = v2x * v3y - v2y * v3x
    cdef double z23 = g23 * sqrt(cx * cx + cy * cy + cz * cz)
    cx = v2y * v4z - v2z * v4y
    cy = v2z * v4x - v2x * v4z
    cz = v2x * v4y - v2y * v4x
    cdef double z24 = g24 * sqrt(cx * cx + cy * cy + cz * cz)
    cx = v3y * v4z - v3z * v4y
    cy = v3z * v4x - v3x * v4z
    cz = v3x * v4y - v3y * v4x
    cdef double z34 = g34 * sqrt(cx * cx + cy * cy + cz * cz)

    cdef double penalty = 0.0
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

    return -_volume_form(z12, z13, z14, z23, z24, z34) + _OBTUSE_PENALTY_WEIGHT * penalty
