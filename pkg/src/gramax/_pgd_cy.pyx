# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled projected-gradient inner loop.

Mirrors _pgd_py.pgd_loop: same iteration, same threshold tie rule (smallest
flat index wins), same stopping rule.  The whole loop runs without the GIL.
"""

from libc.math cimport fabs, isfinite, sqrt

import numpy as np


cdef double _kth_smallest(double* a, Py_ssize_t n, Py_ssize_t k) noexcept nogil:
    # Hoare quickselect with median-of-three pivoting; a is scratch space.
    cdef Py_ssize_t lo = 0, hi = n - 1, i, j, mid
    cdef double pivot, tmp
    while lo < hi:
        mid = lo + (hi - lo) // 2
        if a[mid] < a[lo]:
            tmp = a[mid]; a[mid] = a[lo]; a[lo] = tmp
        if a[hi] < a[lo]:
            tmp = a[hi]; a[hi] = a[lo]; a[lo] = tmp
        if a[hi] < a[mid]:
            tmp = a[hi]; a[hi] = a[mid]; a[mid] = tmp
        pivot = a[mid]
        i = lo
        j = hi
        while i <= j:
            while a[i] < pivot:
                i += 1
            while a[j] > pivot:
                j -= 1
            if i <= j:
                tmp = a[i]; a[i] = a[j]; a[j] = tmp
                i += 1
                j -= 1
        if k <= j:
            hi = j
        elif k >= i:
            lo = i
        else:
            return a[k]
    return a[lo]


cdef void _threshold(double* y, double* work, Py_ssize_t nm, Py_ssize_t s) noexcept nogil:
    # Keep the s entries of largest |y|; ties at the pivot keep the smallest
    # flat index.  Identical selection to projections.top_s_indices.
    cdef Py_ssize_t i, g = 0, need
    cdef double pivot
    for i in range(nm):
        work[i] = fabs(y[i])
    pivot = _kth_smallest(work, nm, nm - s)
    for i in range(nm):
        if fabs(y[i]) > pivot:
            g += 1
    need = s - g
    for i in range(nm):
        if fabs(y[i]) > pivot:
            continue
        if fabs(y[i]) == pivot and need > 0:
            need -= 1
        else:
            y[i] = 0.0


def pgd_loop(H, B0, s, t, tol, max_iter, metzler, record_iterates=False):
    """Compiled counterpart of _pgd_py.pgd_loop (no iterate recording)."""
    if record_iterates:
        raise ValueError("the compiled kernel does not record iterates")
    H_arr = np.ascontiguousarray(H, dtype=np.float64)
    cdef const double[:, ::1] Hv = H_arr
    B_arr = np.array(B0, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] Bv = B_arr
    cdef Py_ssize_t n = Bv.shape[0], m = Bv.shape[1]
    cdef Py_ssize_t nm = n * m
    if Hv.shape[0] != n or Hv.shape[1] != n:
        raise ValueError("H and B0 have mismatched shapes")
    Bn_arr = np.empty_like(B_arr)
    HB_arr = np.empty_like(B_arr)
    work_arr = np.empty(nm, dtype=np.float64)
    obj_arr = np.empty(int(max_iter) + 1, dtype=np.float64)
    res_arr = np.empty(int(max_iter), dtype=np.float64)
    cdef double[:, ::1] Bnv = Bn_arr
    cdef double[:, ::1] HBv = HB_arr
    cdef double[::1] workv = work_arr
    cdef double[::1] objv = obj_arr
    cdef double[::1] resv = res_arr

    cdef Py_ssize_t budget = int(s)
    cdef Py_ssize_t kmax = int(max_iter)
    cdef double tstep = float(t), eps = float(tol)
    cdef bint metz = bool(metzler)
    cdef double c = 2.0 / tstep
    cdef bint conv = False, ok = True
    cdef Py_ssize_t k = 0, i, j, l, ovf = -1
    cdef double acc, hval, y, d, rr
    cdef double* pB
    cdef double* pBn

    with nogil:
        pB = &Bv[0, 0]
        pBn = &Bnv[0, 0]
        while k < kmax:
            for i in range(n):
                for j in range(m):
                    acc = 0.0
                    for l in range(n):
                        acc += Hv[i, l] * Bv[l, j]
                    HBv[i, j] = acc
            hval = 0.0
            for i in range(n):
                for j in range(m):
                    hval += HBv[i, j] * Bv[i, j]
            objv[k] = hval
            ok = True
            for i in range(n):
                for j in range(m):
                    y = Bv[i, j] - c * HBv[i, j]
                    if not isfinite(y):
                        ok = False
                    Bnv[i, j] = y
            if not ok:
                ovf = k
                break
            if metz:
                for i in range(nm):
                    if pBn[i] < 0.0:
                        pBn[i] = 0.0
            if budget < nm:
                _threshold(pBn, &workv[0], nm, budget)
            if metz:
                for i in range(nm):
                    if pBn[i] > 1.0:
                        pBn[i] = 1.0
            else:
                for i in range(nm):
                    if pBn[i] < -1.0:
                        pBn[i] = -1.0
                    elif pBn[i] > 1.0:
                        pBn[i] = 1.0
            rr = 0.0
            for i in range(nm):
                d = pBn[i] - pB[i]
                rr += d * d
                pB[i] = pBn[i]
            resv[k] = sqrt(rr)
            k += 1
            if resv[k - 1] <= eps:
                conv = True
                break
        if ovf < 0:
            for i in range(n):
                for j in range(m):
                    acc = 0.0
                    for l in range(n):
                        acc += Hv[i, l] * Bv[l, j]
                    HBv[i, j] = acc
            hval = 0.0
            for i in range(n):
                for j in range(m):
                    hval += HBv[i, j] * Bv[i, j]
            objv[k] = hval

    if ovf >= 0:
        return B_arr, obj_arr[: k + 1].copy(), res_arr[:k].copy(), False, None, int(ovf)
    return B_arr, obj_arr[: k + 1].copy(), res_arr[:k].copy(), bool(conv), None, -1
