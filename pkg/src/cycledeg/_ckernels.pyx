# cython: language_level=3
"""Compiled counterparts of the kernels in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    return __builtin_popcountll(x)


def count_two_colored_paths(int n, int r):
    cdef int length = 2 * n - 2 - r
    cdef int blue = n - r - 1
    cdef unsigned long long full, d, red, up, lo, c, t, limit
    cdef long long total = 0
    cdef int rights
    if r < 0 or blue < 0:
        return 0
    if length > 62:
        raise OverflowError("path too long for the compiled kernel")
    full = (1ULL << length) - 1
    limit = 1ULL << length
    with nogil:
        d = 0
        while d < limit:
            rights = _popcount(d)
            if n - 1 - r <= rights <= n - 1:
                up = full & ~d
                if r == 0:
                    if _popcount(d) == blue and _popcount(up) == blue:
                        total += 1
                else:
                    # Gosper's hack walks the r-subsets of the step positions.
                    red = (1ULL << r) - 1
                    while red < limit:
                        if _popcount(d & ~red) == blue and _popcount(up & ~red) == blue:
                            total += 1
                        lo = red & (~red + 1)
                        t = red + lo
                        red = (((red ^ t) >> 2) // lo) | t
            d += 1
    return total


cdef long long _ssyt(int* content, int k, int idx, int remaining, int* top,
                     int b1, int b2, int* row1, int* row2) noexcept nogil:
    cdef long long count = 0
    cdef int x, i, j, p1, p2, ok
    if idx == k:
        if remaining != 0:
            return 0
        p1 = 0
        p2 = 0
        for i in range(k):
            for j in range(top[i]):
                row1[p1] = i
                p1 += 1
            for j in range(content[i] - top[i]):
                row2[p2] = i
                p2 += 1
        ok = 1
        for i in range(b2):
            if row2[i] <= row1[i]:
                ok = 0
                break
        return ok
    for x in range(content[idx] + 1):
        if x > remaining:
            break
        top[idx] = x
        count += _ssyt(content, k, idx + 1, remaining - x, top, b1, b2, row1, row2)
    return count


def count_ssyt_two_row(content, int b1, int b2):
    cdef int k = len(content)
    cdef int total_size = 0
    cdef int i
    cdef int* buf
    if b1 < b2 or b2 < 0:
        return 0
    for c in content:
        total_size += c
    if total_size != b1 + b2:
        return 0
    buf = <int*> malloc(sizeof(int) * (2 * k + 2 * total_size + 2))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            buf[i] = content[i]
        return _ssyt(buf, k, 0, b1, buf + k, b1, b2, buf + 2 * k, buf + 2 * k + total_size + 1)
    finally:
        free(buf)
