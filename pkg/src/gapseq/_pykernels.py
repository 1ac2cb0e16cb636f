"""Pure-Python semigroup-tree counting kernel.

Same algorithm and signature as the compiled ``_kernels`` module; used when
the extension is not built or ``GAPSEQ_PURE_PYTHON`` is set.

A node is described by its decomposition array ``dec``: ``dec[y]`` is the
number of unordered pairs ``{a, b}`` of semigroup elements with ``a + b == y``
(0 counts as an element).  So ``y`` is an element iff ``dec[y] > 0`` and a
minimal generator iff ``dec[y] == 1``.
"""


def child_dec(dec, x):
    """Decomposition array after removing generator ``x``."""
    child = list(dec)
    for y in range(x, len(dec)):
        if dec[y - x]:
            child[y] -= 1
    return child


def count_levels(dec, frobenius, genus, max_genus):
    """Count descendants of a node at each genus ``genus..max_genus``.

    ``counts[0]`` is always 1 (the node itself).
    """
    if max_genus < genus:
        return []
    size = len(dec)
    if size < 2 * max_genus:
        raise ValueError(f"decomposition window {size} too small for genus {max_genus}")
    counts = [0] * (max_genus - genus + 1)

    def walk(dec, frob, depth):
        counts[depth - genus] += 1
        if depth == max_genus:
            return
        # a child of genus depth+1 has Frobenius number <= 2*depth + 1
        for x in range(max(frob + 1, 1), min(2 * depth + 1, size - 1) + 1):
            if dec[x] == 1:
                if depth + 1 == max_genus:
                    counts[-1] += 1
                else:
                    walk(child_dec(dec, x), x, depth + 1)

    walk(list(dec), frobenius, genus)
    return counts
