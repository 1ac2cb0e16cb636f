# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled semigroup-tree counting kernel (see ``_pykernels`` for the reference)."""

from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef void _walk(int32_t* buf, int size, int frob, int depth, int genus,
                int max_genus, uint64_t* counts) noexcept nogil:
    cdef int32_t* dec = buf + (depth - genus) * size
    cdef int32_t* child = dec + size
    cdef int x, y, top
    counts[depth - genus] += 1
    if depth == max_genus:
        return
    top = 2 * depth + 1
    if top > size - 1:
        top = size - 1
    if frob < 0:
        frob = 0
    for x in range(frob + 1, top + 1):
        if dec[x] != 1:
            continue
        if depth + 1 == max_genus:
            counts[max_genus - genus] += 1
            continue
        memcpy(child, dec, size * sizeof(int32_t))
        for y in range(x, size):
            if dec[y - x] > 0:
                child[y] -= 1
        _walk(buf, size, x, depth + 1, genus, max_genus, counts)


def count_levels(dec, int frobenius, int genus, int max_genus):
    """Count descendants of a node at each genus ``genus..max_genus``."""
    if max_genus < genus:
        return []
    cdef int size = len(dec)
    if size < 2 * max_genus:
        raise ValueError(f"decomposition window {size} too small for genus {max_genus}")
    cdef int levels = max_genus - genus + 1
    cdef int32_t* buf = <int32_t*> malloc((levels + 1) * size * sizeof(int32_t))
    cdef uint64_t* counts = <uint64_t*> malloc(levels * sizeof(uint64_t))
    if buf == NULL or counts == NULL:
        free(buf)
        free(counts)
        raise MemoryError()
    cdef int i
    try:
        for i in range(size):
            buf[i] = dec[i]
        for i in range(levels):
            counts[i] = 0
        with nogil:
            _walk(buf, size, frobenius, genus, genus, max_genus, counts)
        return [counts[i] for i in range(levels)]
    finally:
        free(buf)
        free(counts)
