"""Enumeration and counting of gap sequences by genus.

Two independent routes:

* :func:`brute_force_enumerate` tries every ``g-1``-subset of ``{2..2g-1}``
  and keeps those that pass :func:`gapseq.core.validate`.  Exponential; it is
  the oracle.
* :func:`tree_enumerate` walks the semigroup tree.  The root is the full
  semigroup (genus 0); a child removes one minimal generator larger than the
  parent's Frobenius number.  Every semigroup has exactly one parent (add back
  its largest gap), so depth ``g`` of the tree lists each genus-``g`` sequence
  once.  A child's gap list is its parent's with one larger gap appended,
  which makes depth-first order with ascending generators lexicographic.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from ._backend import count_levels
from ._pykernels import child_dec
from .core import GapSequence, find_violation, first_non_gap
from .weierstrass import classify, weight

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "EnumerationResult",
    "TreeNode",
    "ResourceLimitError",
    "brute_force_enumerate",
    "tree_enumerate",
    "iter_tree",
    "count_genus",
    "count_by_genus",
    "filter_enumerate",
    "FILTER_KEYS",
]

BRUTE_FORCE_LIMIT = 14


class ResourceLimitError(RuntimeError):
    """The brute-force oracle was asked for a genus above its limit."""


@dataclass
class EnumerationResult:
    genus: int
    count: int
    sequences: Optional[Iterable[GapSequence]] = None

    def __iter__(self) -> Iterator[GapSequence]:
        return iter(self.sequences or ())


@dataclass(frozen=True)
class TreeNode:
    """A numerical semigroup as a node of the semigroup tree.

    ``dec`` is the decomposition-count array over a fixed window (see
    :mod:`gapseq._pykernels`); it has to cover ``[0, 2G)`` for the deepest
    genus ``G`` that will be explored below this node.
    """

    genus: int
    gaps: Tuple[int, ...]
    dec: Tuple[int, ...]

    @classmethod
    def root(cls, max_genus: int) -> "TreeNode":
        size = 2 * max_genus + 1
        return cls(0, (), tuple(y // 2 + 1 for y in range(size)))

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full semigroup."""
        return self.gaps[-1] if self.gaps else -1

    @property
    def gap_set(self) -> int:
        bits = 0
        for n in self.gaps:
            bits |= 1 << n
        return bits

    @property
    def effective_generators(self) -> Tuple[int, ...]:
        # generators above 2g+1 exist but their children would break F <= 2g-1
        top = min(2 * self.genus + 1, len(self.dec) - 1)
        return tuple(x for x in range(max(self.frobenius + 1, 1), top + 1) if self.dec[x] == 1)

    def children(self) -> List["TreeNode"]:
        return [TreeNode(self.genus + 1, self.gaps + (x,), tuple(child_dec(self.dec, x)))
                for x in self.effective_generators]

    def sequence(self) -> GapSequence:
        return GapSequence(self.genus, self.gaps)


def _walk(node: TreeNode, genus: int) -> Iterator[GapSequence]:
    if node.genus == genus:
        yield node.sequence()
        return
    # explicit stack keeps memory O(g * window) and order lexicographic
    stack = [iter(node.children())]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
        elif child.genus == genus:
            yield child.sequence()
        elif child.genus + 1 == genus:
            for x in child.effective_generators:
                yield GapSequence(genus, child.gaps + (x,))
        else:
            stack.append(iter(child.children()))


def _frontier(genus: int, min_nodes: int) -> List[TreeNode]:
    """Breadth-first expansion, in lexicographic order, until wide enough."""
    level = [TreeNode.root(genus)]
    while level[0].genus < genus and len(level) < min_nodes:
        level = [c for node in level for c in node.children()]
    return level


def _count_subtree(node: TreeNode, genus: int) -> int:
    if node.genus > genus:
        return 0
    return count_levels(node.dec, node.frobenius, node.genus, genus)[-1]


def _list_subtree(node: TreeNode, genus: int) -> List[Tuple[int, ...]]:
    return [s.gaps for s in _walk(node, genus)]


def default_workers() -> int:
    env = os.environ.get("GAPSEQ_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def iter_tree(genus: int, workers: int = 1) -> Iterator[GapSequence]:
    """Stream every genus-``genus`` sequence, lexicographically.

    With ``workers > 1`` subtrees are listed in worker processes; results are
    merged in submission order, so the order is still lexicographic, but each
    subtree's list is held in memory while it is in flight.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if workers <= 1:
        yield from _walk(TreeNode.root(genus), genus)
        return
    frontier = _frontier(genus, 4 * workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_list_subtree, frontier, itertools.repeat(genus)):
            for gaps in chunk:
                yield GapSequence(genus, gaps)


def count_genus(genus: int, workers: int = 1) -> int:
    """Number of gap sequences of the given genus, without materializing them."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if workers <= 1:
        root = TreeNode.root(genus)
        return count_levels(root.dec, root.frobenius, 0, genus)[-1]
    frontier = _frontier(genus, 4 * workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_subtree, frontier, itertools.repeat(genus)))


def tree_enumerate(genus: int, workers: int = 1, stream: bool = False) -> EnumerationResult:
    """Enumerate by semigroup-tree search.

    With ``stream=True`` the count comes from the counting kernel and
    ``sequences`` is a lazy iterator; otherwise it is a materialized list.
    """
    if stream:
        return EnumerationResult(genus, count_genus(genus, workers), iter_tree(genus, workers))
    seqs = list(iter_tree(genus, workers))
    return EnumerationResult(genus, len(seqs), seqs)


def brute_force_enumerate(genus: int, limit: int = BRUTE_FORCE_LIMIT) -> EnumerationResult:
    """Oracle: validate every candidate subset of ``{2, ..., 2g-1}``.

    Single-threaded by design.  Refuses ``genus > limit``.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus > limit:
        raise ResourceLimitError(
            f"brute force refused for genus {genus} (limit {limit})")
    if genus == 0:
        return EnumerationResult(0, 1, [GapSequence(0, ())])
    found = []
    for rest in itertools.combinations(range(2, 2 * genus), genus - 1):
        gaps = (1,) + rest
        if find_violation(genus, gaps) is None:
            found.append(GapSequence(genus, gaps))
    return EnumerationResult(genus, len(found), found)


def count_by_genus(max_genus: int, workers: int = 1) -> List[Tuple[int, int]]:
    """Rows ``(genus, count)`` for genus ``0..max_genus``."""
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    if workers <= 1:
        root = TreeNode.root(max_genus)
        counts = count_levels(root.dec, root.frobenius, 0, max_genus)
        return list(enumerate(counts))
    return [(g, count_genus(g, workers)) for g in range(max_genus + 1)]


def _label(seq: GapSequence) -> str:
    return classify(seq).classification.value


FILTER_KEYS = {
    "firstNonGap": (first_non_gap, int),
    "weight": (weight, int),
    "classification": (_label, str),
}


def make_predicate(key: str, value) -> Callable[[GapSequence], bool]:
    try:
        fn, conv = FILTER_KEYS[key]
    except KeyError:
        raise ValueError(f"unknown filter {key!r}; expected one of {sorted(FILTER_KEYS)}")
    try:
        target = conv(value)
    except ValueError:
        raise ValueError(f"bad value {value!r} for filter {key!r}")
    return lambda seq: fn(seq) == target


def filter_enumerate(genus: int, key: str, value, workers: int = 1) -> EnumerationResult:
    """Sequences of ``genus`` whose ``key`` (firstNonGap, weight, classification)
    equals ``value``."""
    if genus < 1:
        raise ValueError("filtered enumeration needs genus >= 1")
    pred = make_predicate(key, value)
    seqs = [s for s in iter_tree(genus, workers) if pred(s)]
    return EnumerationResult(genus, len(seqs), seqs)
