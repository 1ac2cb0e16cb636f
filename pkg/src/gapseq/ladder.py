"""Riemann-Roch dimension ladders for the one-point divisors ``D_n = n*P``.

For ``n = 0..2g`` a ladder stores ``h0[n] = l(D_n)`` and ``i[n]``, the index
of speciality.  Only the integer bookkeeping is modelled: ``h0`` grows by one
exactly at non-gaps, and ``h0[n] - i[n] == 1 - g + n`` fixes ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from .core import GapSequence, non_gaps, validate

__all__ = [
    "DimensionLadder",
    "LadderError",
    "LawResult",
    "LAWS",
    "ladder_from_gaps",
    "gaps_from_ladder",
    "verify_ladder_laws",
    "decrease_points",
]


@dataclass(frozen=True)
class DimensionLadder:
    genus: int
    h0: Tuple[int, ...]
    i: Tuple[int, ...]

    @classmethod
    def from_h0(cls, genus: int, h0: Sequence[int]) -> "DimensionLadder":
        """Fill in ``i`` from ``h0`` via the Riemann-Roch identity."""
        return cls(genus, tuple(h0), tuple(h - (1 - genus + n) for n, h in enumerate(h0)))


class LawResult(NamedTuple):
    passed: bool
    index: Optional[int] = None


class LadderError(ValueError):
    def __init__(self, law: str, index: Optional[int]) -> None:
        super().__init__(f"ladder violates {law!r} at index {index}")
        self.law = law
        self.index = index


LAWS = (
    "length",
    "riemann-roch",
    "initial-speciality",
    "canonical-vanishing",
    "h0-steps",
    "i-steps",
    "total-decrease",
    "negative-degree",
)


def ladder_from_gaps(seq: GapSequence) -> DimensionLadder:
    members = non_gaps(seq)
    h0 = [1]
    for n in range(1, 2 * seq.genus + 1):
        h0.append(h0[-1] + (n in members))
    return DimensionLadder.from_h0(seq.genus, h0)


def _first_bad(pairs, ok) -> Optional[int]:
    for n, v in pairs:
        if not ok(v):
            return n
    return None


def verify_ladder_laws(ladder: DimensionLadder) -> Dict[str, LawResult]:
    """Check every ladder law and report the first offending index of each.

    Failures are reported, never raised.  ``negative-degree`` encodes the
    vanishing of ``h0`` for negative degree as the boundary ``h0[0] == 1``.
    """
    g, h0, sp = ladder.genus, ladder.h0, ladder.i
    size = 2 * g + 1
    report: Dict[str, LawResult] = {}

    def put(name, bad):
        report[name] = LawResult(bad is None, bad)

    put("length", None if len(h0) == size and len(sp) == size
        else min(len(h0), len(sp), size))
    n_max = min(len(h0), len(sp))
    put("riemann-roch", _first_bad(
        ((n, h0[n] - sp[n] - (1 - g + n)) for n in range(n_max)), lambda d: d == 0))
    put("initial-speciality", None if sp and sp[0] == g else 0)
    put("canonical-vanishing", _first_bad(
        ((n, sp[n]) for n in range(max(2 * g - 1, 0), len(sp))), lambda v: v == 0)
        if len(sp) >= 2 * g else max(2 * g - 1, 0))
    put("h0-steps", _first_bad(
        ((n, h0[n] - h0[n - 1]) for n in range(1, len(h0))), lambda d: d in (0, 1)))
    put("i-steps", _first_bad(
        ((n, sp[n - 1] - sp[n]) for n in range(1, len(sp))), lambda d: d in (0, 1)))
    end = max(2 * g - 1, 0)
    if len(sp) > end:
        drops = [n for n in range(1, end + 1) if sp[n - 1] - sp[n] == 1]
        total = sp[0] - sp[end]
        if total == g and len(drops) == g:
            put("total-decrease", None)
        else:
            put("total-decrease", end)
    else:
        put("total-decrease", len(sp))
    put("negative-degree", None if h0 and h0[0] == 1 else 0)
    return report


def gaps_from_ladder(ladder: DimensionLadder) -> GapSequence:
    """Indices where ``h0`` stalls.

    Raises :class:`LadderError` naming the first failed law, or
    :class:`~gapseq.core.ValidationError` when the ladder obeys every law but
    its stalls do not form a semigroup complement.
    """
    for law, res in verify_ladder_laws(ladder).items():
        if not res.passed:
            raise LadderError(law, res.index)
    h0 = ladder.h0
    gaps = tuple(n for n in range(1, len(h0)) if h0[n] == h0[n - 1])
    return validate(ladder.genus, gaps)


def decrease_points(ladder: DimensionLadder) -> Tuple[int, ...]:
    """Indices ``n >= 1`` where ``i`` drops; these are the gaps."""
    return tuple(n for n in range(1, len(ladder.i)) if ladder.i[n - 1] > ladder.i[n])

