# cython: language_level=3
"""Compiled twins of the kernels in biparts._fallback.

Arithmetic stays on arbitrary-precision Python integers; cythonizing the
index loops removes the interpreter overhead that dominates the pure-Python
version.  Results are bit-identical to the fallback.
"""


def extend_partition_table(list table, Py_ssize_t upto):
    """Grow ``table`` in place via the pentagonal-number recurrence."""
    cdef Py_ssize_t n = len(table)
    cdef Py_ssize_t k, g
    cdef object acc
    while n <= upto:
        acc = 0
        k = 1
        while True:
            g = (k * (3 * k - 1)) >> 1
            if g > n:
                break
            if k & 1:
                acc = acc + table[n - g]
                g += k
                if g <= n:
                    acc = acc + table[n - g]
            else:
                acc = acc - table[n - g]
                g += k
                if g <= n:
                    acc = acc - table[n - g]
            k += 1
        table.append(acc)
        n += 1


def extend_bipartition_table(list table, list ptable, Py_ssize_t upto):
    """Grow the bipartition-count table in place via the square recurrence."""
    cdef Py_ssize_t n = len(table)
    cdef Py_ssize_t k, ksq
    cdef object acc, t
    while n <= upto:
        if n & 1:
            acc = 0
        else:
            acc = ptable[n >> 1]
        k = 1
        ksq = 1
        while ksq <= n:
            t = table[n - ksq]
            if k & 1:
                acc = acc + t + t
            else:
                acc = acc - t - t
            k += 1
            ksq = k * k
        table.append(acc)
        n += 1


def extend_self_convolution(list out, list src, Py_ssize_t upto):
    """Grow ``out`` in place with out[m] = sum_j src[j] * src[m - j]."""
    cdef Py_ssize_t m = len(out)
    cdef Py_ssize_t j, half
    cdef object acc, mid
    while m <= upto:
        half = m >> 1
        acc = 0
        if m & 1:
            for j in range(half + 1):
                acc = acc + src[j] * src[m - j]
            acc = acc + acc
        else:
            for j in range(half):
                acc = acc + src[j] * src[m - j]
            acc = acc + acc
            mid = src[half]
            acc = acc + mid * mid
        out.append(acc)
        m += 1


def mul_series(list a, list b, Py_ssize_t order):
    """Cauchy product of coefficient lists, truncated at ``order``."""
    cdef list out = [0] * (order + 1)
    cdef Py_ssize_t i, j
    cdef object ai, bj
    for i in range(order + 1):
        ai = a[i]
        if ai:
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def invert_series(list a, Py_ssize_t order):
    """Multiplicative inverse of a coefficient list with constant term +-1."""
    c0 = a[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("series inversion requires constant term +1 or -1")
    cdef list out = [0] * (order + 1)
    cdef Py_ssize_t m, k
    cdef object acc, ak
    out[0] = c0
    for m in range(1, order + 1):
        acc = 0
        for k in range(1, m + 1):
            ak = a[k]
            if ak:
                acc = acc + ak * out[m - k]
        out[m] = -c0 * acc
    return out


def fold_binomial(list vec, Py_ssize_t j):
    """Multiply a coefficient list in place by (1 - q^j)."""
    cdef Py_ssize_t i
    for i in range(len(vec) - 1, j - 1, -1):
        vec[i] = vec[i] - vec[i - j]
