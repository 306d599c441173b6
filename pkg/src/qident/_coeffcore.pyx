# cython: language_level=3
"""Compiled convolution kernels.

Mirror of _coeffcore_py with C loop bookkeeping; the coefficient
arithmetic itself stays on Python ints (values can exceed machine words).
Must produce bit-identical results to the pure version.
"""


def convolve(list ra, list ia, list rb, list ib, Py_ssize_t nout):
    cdef Py_ssize_t i, j, k, na, nb
    cdef list rc = [0] * nout
    cdef list ic = [0] * nout
    cdef object x, y, u, v
    na = len(ra)
    if na > nout:
        na = nout
    for i in range(na):
        x = ra[i]
        y = ia[i]
        if not x and not y:
            continue
        nb = len(rb)
        if nb > nout - i:
            nb = nout - i
        for j in range(nb):
            u = rb[j]
            v = ib[j]
            if u or v:
                k = i + j
                rc[k] = rc[k] + (x * u + 2 * y * v)
                ic[k] = ic[k] + (x * v + y * u)
    return rc, ic


def convolve_rational(list ra, list rb, Py_ssize_t nout):
    cdef Py_ssize_t i, j, na, nb
    cdef list rc = [0] * nout
    cdef object x, u
    na = len(ra)
    if na > nout:
        na = nout
    for i in range(na):
        x = ra[i]
        if not x:
            continue
        nb = len(rb)
        if nb > nout - i:
            nb = nout - i
        for j in range(nb):
            u = rb[j]
            if u:
                rc[i + j] = rc[i + j] + x * u
    return rc
