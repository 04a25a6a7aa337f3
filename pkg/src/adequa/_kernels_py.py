"""Pure-Python versions of the index-array kernels.

Every kernel works on flat integer arrays indexed by port ``4 * crossing + port``
(or by dart, for the state-graph faces).  The compiled twin in ``_kernels.pyx``
must return identical results.
"""


def perm_cycles(perm):
    """Label the cycles of a permutation given as an index array.

    Returns ``(labels, count)``; cycles are numbered in order of their
    smallest element.
    """
    n = len(perm)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        i = start
        while labels[i] == -1:
            labels[i] = count
            i = perm[i]
        count += 1
    return labels, count


def involution_components(a, b):
    """Connected components of the graph with edges ``i - a[i]`` and ``i - b[i]``."""
    n = len(a)
    labels = [-1] * n
    count = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            i = stack.pop()
            j = a[i]
            if labels[j] == -1:
                labels[j] = count
                stack.append(j)
            j = b[i]
            if labels[j] == -1:
                labels[j] = count
                stack.append(j)
        count += 1
    return labels, count


def flood(other, seeds, blocked_cross, blocked_port):
    """Crossings reachable from ``seeds`` along arcs.

    ``blocked_cross`` and ``blocked_port`` are byte masks; blocked crossings are
    never entered and arcs leaving a blocked port are never followed.  Seeds
    are entered unconditionally.  Returns a bytearray mask over crossings.
    """
    ncross = len(other) // 4
    seen = bytearray(ncross)
    stack = []
    for s in seeds:
        if not seen[s]:
            seen[s] = 1
            stack.append(s)
    while stack:
        c = stack.pop()
        base = 4 * c
        for p in range(base, base + 4):
            if blocked_port[p]:
                continue
            q = other[p]
            if blocked_port[q]:
                continue
            d = q >> 2
            if seen[d] or blocked_cross[d]:
                continue
            seen[d] = 1
            stack.append(d)
    return seen
