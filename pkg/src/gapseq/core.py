"""Gap sequences, non-gap sets and the validity predicate.

A gap sequence of genus ``g`` is the set of ``g`` positive integers missing
from a numerical semigroup.  Its complement, together with 0, is closed under
addition.  Membership sets are stored as Python ints used as bitmaps, so a
closure check over ``[0, 2g]`` is a handful of shifts and masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

__all__ = [
    "ErrorKind",
    "ValidationError",
    "GapSequence",
    "NonGapSet",
    "validate",
    "canonical",
    "find_violation",
    "is_valid",
    "non_gaps",
    "is_closed_under_addition",
    "first_non_gap",
]


class ErrorKind(str, Enum):
    """Validation failure kinds, in the order they are checked."""

    WRONG_LENGTH = "WrongLength"
    MISSING_ONE = "MissingOne"
    GAP_OUT_OF_RANGE = "GapOutOfRange"
    NOT_SORTED = "NotSorted"
    CLOSURE_VIOLATION = "ClosureViolation"


class ValidationError(ValueError):
    """Raised when a candidate gap list is not a gap sequence.

    ``witness`` is only set for :attr:`ErrorKind.CLOSURE_VIOLATION`; it is a
    triple ``(gap, a, b)`` with ``a + b == gap`` and ``a <= b`` both non-gaps.
    """

    def __init__(self, kind: ErrorKind, message: str,
                 witness: Optional[Tuple[int, int, int]] = None) -> None:
        super().__init__(message)
        self.kind = kind
        self.witness = witness

    def __repr__(self) -> str:
        return f"ValidationError({self.kind.value}, witness={self.witness})"


def _mask(values: Iterable[int]) -> int:
    bits = 0
    for v in values:
        bits |= 1 << v
    return bits


def _bits(mask: int) -> Tuple[int, ...]:
    out = []
    n = 0
    while mask:
        if mask & 1:
            out.append(n)
        mask >>= 1
        n += 1
    return tuple(out)


@dataclass(frozen=True)
class GapSequence:
    """The sorted gaps of a genus-``g`` numerical semigroup.

    Build instances with :func:`validate` (or :func:`canonical`).  Calling the
    constructor directly skips the checks; the enumerators do that for
    sequences that are valid by construction.
    """

    genus: int
    gaps: Tuple[int, ...]

    @property
    def gap_mask(self) -> int:
        return _mask(self.gaps)

    @property
    def membership(self) -> int:
        """Bitmap over ``[0, 2g]`` of the semigroup elements (0 included)."""
        window = (1 << (2 * self.genus + 1)) - 1
        return window & ~self.gap_mask

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)


@dataclass(frozen=True)
class NonGapSet:
    """Non-gaps in ``{2, ..., 2g}`` plus a membership bitmap over ``[0, 2g]``.

    Construction does not check closure; use :func:`is_closed_under_addition`.
    """

    genus: int
    non_gaps: Tuple[int, ...]
    membership: int = field(repr=False)

    @classmethod
    def from_non_gaps(cls, genus: int, values: Iterable[int]) -> "NonGapSet":
        vals = tuple(sorted(set(values)))
        if any(v < 1 or v > 2 * genus for v in vals):
            raise ValueError(f"non-gaps must lie in [1, {2 * genus}]")
        return cls(genus, vals, 1 | _mask(vals))

    @classmethod
    def from_gaps(cls, genus: int, gaps: Iterable[int]) -> "NonGapSet":
        window = (1 << (2 * genus + 1)) - 1
        membership = window & ~_mask(gaps)
        return cls(genus, _bits(membership & ~1), membership)

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and n >= 0 and bool(self.membership >> n & 1)

    def __iter__(self):
        return iter(self.non_gaps)

    def __len__(self) -> int:
        return len(self.non_gaps)


def _closure_witness(genus: int, membership: int) -> Optional[Tuple[int, int, int]]:
    """Smallest ``n <= 2g-1`` outside ``membership`` that is a sum of two members.

    Returns ``(n, a, b)`` with the smallest ``a`` for that ``n``, or None.
    """
    limit = 2 * genus - 1
    if limit < 2:
        return None
    window = (1 << (limit + 1)) - 1
    holes = window & ~membership
    best = None
    s = 1
    # for each member s, the sums s + t (t a member) that land on a hole
    while s <= limit // 2:
        if membership >> s & 1:
            hit = ((membership >> s) << (2 * s)) & holes
            # hit bit n means n = s + t with t = n - s >= s a member
            if hit:
                n = (hit & -hit).bit_length() - 1
                if best is None or n < best[0]:
                    best = (n, s, n - s)
        s += 1
    return best


def find_violation(genus: int, gaps: Sequence[int]) -> Optional[ValidationError]:
    """Return the first failing check for ``gaps`` at ``genus``, or None."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    gaps = list(gaps)
    if len(gaps) != genus:
        return ValidationError(ErrorKind.WRONG_LENGTH,
                               f"expected {genus} gaps, got {len(gaps)}")
    if genus == 0:
        return None
    if 1 not in gaps:
        return ValidationError(ErrorKind.MISSING_ONE, "1 must be a gap")
    for n in gaps:
        if n < 1 or n > 2 * genus - 1:
            return ValidationError(ErrorKind.GAP_OUT_OF_RANGE,
                                   f"gap {n} outside [1, {2 * genus - 1}]")
    for a, b in zip(gaps, gaps[1:]):
        if a >= b:
            return ValidationError(ErrorKind.NOT_SORTED,
                                   f"gaps not strictly increasing at {a}, {b}")
    window = (1 << (2 * genus + 1)) - 1
    witness = _closure_witness(genus, window & ~_mask(gaps))
    if witness is not None:
        n, a, b = witness
        return ValidationError(ErrorKind.CLOSURE_VIOLATION,
                               f"gap {n} = {a} + {b} is a sum of non-gaps",
                               witness)
    return None


def validate(genus: int, gaps: Sequence[int]) -> GapSequence:
    """Check ``gaps`` and return the canonical :class:`GapSequence`.

    Raises :class:`ValidationError` for the first failing check, in the order
    WrongLength, MissingOne, GapOutOfRange, NotSorted, ClosureViolation.

    >>> validate(3, [1, 3, 5]).gaps
    (1, 3, 5)
    """
    err = find_violation(genus, gaps)
    if err is not None:
        raise err
    return GapSequence(genus, tuple(gaps))


def canonical(genus: int, gaps: Iterable[int]) -> GapSequence:
    """Like :func:`validate` but accepts the gaps in any order."""
    return validate(genus, sorted(gaps))


def is_valid(genus: int, gaps: Sequence[int]) -> bool:
    return find_violation(genus, gaps) is None


def non_gaps(seq: GapSequence) -> NonGapSet:
    return NonGapSet.from_gaps(seq.genus, seq.gaps)


def is_closed_under_addition(s: NonGapSet) -> bool:
    """True iff ``a + b`` is a member whenever ``a``, ``b`` are and ``a + b < 2g``."""
    return _closure_witness(s.genus, s.membership) is None


def first_non_gap(seq: GapSequence) -> int:
    """Smallest positive non-gap (the multiplicity); undefined for genus 0."""
    if seq.genus == 0:
        raise ValueError("first non-gap is undefined for genus 0")
    m = seq.membership & ~1
    return (m & -m).bit_length() - 1
