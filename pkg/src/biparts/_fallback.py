"""Pure-Python implementations of the hot counting/series kernels.

Every function here has a compiled twin in ``biparts._speedups``; the two
must produce bit-identical results.  All coefficients are exact Python
integers, so the compiled version only removes interpreter overhead.
"""

from __future__ import annotations


def extend_partition_table(table: list, upto: int) -> None:
    """Grow ``table`` in place so that table[n] counts partitions of n.

    Uses the classical pentagonal-number recurrence
    p(n) = sum_{k>=1} (-1)^(k-1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    ``table`` must already hold a correct prefix starting with table[0] == 1.
    """
    n = len(table)
    if upto < n:
        return
    # pentagonal offsets split by sign, ascending; hoisted out of the fill
    # loop so the hot path is two bare index-and-add scans
    plus, minus = [], []
    k = 1
    while True:
        g = (k * (3 * k - 1)) >> 1
        if g > upto:
            break
        target = plus if k & 1 else minus
        target.append(g)
        if g + k <= upto:
            target.append(g + k)
        k += 1
    plus.sort()
    minus.sort()
    while n <= upto:
        acc = 0
        for g in plus:
            if g > n:
                break
            acc += table[n - g]
        for g in minus:
            if g > n:
                break
            acc -= table[n - g]
        table.append(acc)
        n += 1


def extend_bipartition_table(table: list, ptable: list, upto: int) -> None:
    """Grow the bipartition-count table in place via the square recurrence.

    p2(n) = p(n/2) + sum_{k>=1} (-1)^(k-1) * 2 * p2(n - k^2),
    where the p(n/2) term contributes only for even n.  ``ptable`` must
    cover index upto // 2.
    """
    n = len(table)
    while n <= upto:
        acc = ptable[n >> 1] if not (n & 1) else 0
        k = 1
        ksq = 1
        while ksq <= n:
            t = table[n - ksq]
            if k & 1:
                acc += t + t
            else:
                acc -= t + t
            k += 1
            ksq = k * k
        table.append(acc)
        n += 1


def extend_self_convolution(out: list, src: list, upto: int) -> None:
    """Grow ``out`` in place with out[m] = sum_j src[j] * src[m - j].

    Exploits symmetry of the Cauchy square; ``src`` must cover index upto.
    """
    m = len(out)
    while m <= upto:
        half = m >> 1
        acc = 0
        if m & 1:
            for j in range(half + 1):
                acc += src[j] * src[m - j]
            acc += acc
        else:
            for j in range(half):
                acc += src[j] * src[m - j]
            acc += acc
            mid = src[half]
            acc += mid * mid
        out.append(acc)
        m += 1


def mul_series(a: list, b: list, order: int) -> list:
    """Cauchy product of coefficient lists, truncated at ``order``."""
    out = [0] * (order + 1)
    for i in range(order + 1):
        ai = a[i]
        if ai:
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def invert_series(a: list, order: int) -> list:
    """Multiplicative inverse of a coefficient list with constant term +-1."""
    c0 = a[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("series inversion requires constant term +1 or -1")
    out = [0] * (order + 1)
    out[0] = c0
    for m in range(1, order + 1):
        acc = 0
        for k in range(1, m + 1):
            ak = a[k]
            if ak:
                acc += ak * out[m - k]
        out[m] = -c0 * acc
    return out


def fold_binomial(vec: list, j: int) -> None:
    """Multiply a coefficient list in place by (1 - q^j)."""
    for i in range(len(vec) - 1, j - 1, -1):
        vec[i] -= vec[i - j]
