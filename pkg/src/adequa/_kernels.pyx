# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``."""


def perm_cycles(perm):
    cdef Py_ssize_t n = len(perm)
    cdef long[:] p = _as_long(perm)
    out = _filled(n, -1)
    cdef long[:] labels = out
    cdef long count = 0
    cdef Py_ssize_t start, i
    for start in range(n):
        if labels[start] != -1:
            continue
        i = start
        while labels[i] == -1:
            labels[i] = count
            i = p[i]
        count += 1
    return out.tolist(), count


def involution_components(a, b):
    cdef Py_ssize_t n = len(a)
    cdef long[:] av = _as_long(a)
    cdef long[:] bv = _as_long(b)
    out = _filled(n, -1)
    cdef long[:] labels = out
    cdef long[:] stack = _filled(n + 1, 0)
    cdef Py_ssize_t top, i, j, start
    cdef long count = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        labels[start] = count
        top = 0
        stack[top] = start
        top += 1
        while top > 0:
            top -= 1
            i = stack[top]
            j = av[i]
            if labels[j] == -1:
                labels[j] = count
                stack[top] = j
                top += 1
            j = bv[i]
            if labels[j] == -1:
                labels[j] = count
                stack[top] = j
                top += 1
        count += 1
    return out.tolist(), count


def flood(other, seeds, blocked_cross, blocked_port):
    cdef long[:] ov = _as_long(other)
    cdef Py_ssize_t ncross = len(other) // 4
    cdef const unsigned char[:] bc = bytes(blocked_cross)
    cdef const unsigned char[:] bp = bytes(blocked_port)
    seen_buf = bytearray(ncross)
    cdef unsigned char[:] seen = seen_buf
    cdef long[:] stack = _filled(ncross + 1, 0)
    cdef Py_ssize_t top = 0, c, p, q, d
    for s in seeds:
        c = s
        if not seen[c]:
            seen[c] = 1
            stack[top] = c
            top += 1
    while top > 0:
        top -= 1
        c = stack[top]
        for p in range(4 * c, 4 * c + 4):
            if bp[p]:
                continue
            q = ov[p]
            if bp[q]:
                continue
            d = q >> 2
            if seen[d] or bc[d]:
                continue
            seen[d] = 1
            stack[top] = d
            top += 1
    return seen_buf


cdef long[:] _as_long(seq):
    import array
    if isinstance(seq, array.array) and seq.typecode == 'l':
        return seq
    return array.array('l', seq)


cdef object _filled(Py_ssize_t n, long value):
    import array
    return array.array('l', [value]) * n
