# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled row-reduction kernels.

Identical contract to ``_hnf_py``: Hermite normal form with tracked left
transform, plus dense matrix multiplication.  Coefficients stay Python ints
(arbitrary precision is part of the contract — fixed-width arithmetic would
silently wrap on the coefficient growth HNF produces), so only the loop and
indexing structure is compiled.
"""

BACKEND_NAME = "compiled"


def hnf_rows(rows, Py_ssize_t ncols, bint track_u=True):
    """Row-style Hermite normal form; see ``_hnf_py.hnf_rows``."""
    cdef Py_ssize_t m = len(rows)
    cdef list h = [list(source_row) for source_row in rows]
    cdef list u = None
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef bint done, any_nonzero
    cdef list hr, hi, ur, ui
    cdef object a, b, q, v, best, piv_val, half

    if track_u:
        u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for c in range(ncols):
        if r == m:
            break
        any_nonzero = False
        for i in range(r, m):
            if (<list>h[i])[c] != 0:
                any_nonzero = True
                break
        if not any_nonzero:
            continue
        while True:
            piv = -1
            best = 0
            for i in range(r, m):
                v = (<list>h[i])[c]
                if v != 0:
                    if v < 0:
                        v = -v
                    if piv < 0 or v < best:
                        piv = i
                        best = v
            if piv != r:
                h[r], h[piv] = h[piv], h[r]
                if track_u:
                    u[r], u[piv] = u[piv], u[r]
            hr = <list>h[r]
            if hr[c] < 0:
                for j in range(c, ncols):
                    hr[j] = -hr[j]
                if track_u:
                    ur = <list>u[r]
                    for j in range(m):
                        ur[j] = -ur[j]
            a = hr[c]
            half = a // 2
            done = True
            for i in range(r + 1, m):
                hi = <list>h[i]
                b = hi[c]
                if b == 0:
                    continue
                q = (b + half) // a
                if q != 0:
                    for j in range(c, ncols):
                        v = hr[j]
                        if v != 0:
                            hi[j] = hi[j] - q * v
                    if track_u:
                        ui = <list>u[i]
                        ur = <list>u[r]
                        for j in range(m):
                            v = ur[j]
                            if v != 0:
                                ui[j] = ui[j] - q * v
                if hi[c] != 0:
                    done = False
            if done:
                break
        hr = <list>h[r]
        piv_val = hr[c]
        for i in range(r):
            hi = <list>h[i]
            q = hi[c] // piv_val
            if q != 0:
                for j in range(c, ncols):
                    v = hr[j]
                    if v != 0:
                        hi[j] = hi[j] - q * v
                if track_u:
                    ui = <list>u[i]
                    ur = <list>u[r]
                    for j in range(m):
                        v = ur[j]
                        if v != 0:
                            ui[j] = ui[j] - q * v
        pivots.append((r, c))
        r += 1
    return h, u, pivots


def mul_rows(a, b, Py_ssize_t inner, Py_ssize_t ncols):
    """Product of row-major integer matrices."""
    cdef list out = []
    cdef list arow, brow, acc
    cdef Py_ssize_t k, j
    cdef object v, w
    for arow in a:
        acc = [0] * ncols
        for k in range(inner):
            v = arow[k]
            if v != 0:
                brow = <list>b[k]
                for j in range(ncols):
                    w = brow[j]
                    if w != 0:
                        acc[j] = acc[j] + v * w
        out.append(acc)
    return out
