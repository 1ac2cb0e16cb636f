"""Weights, classification, point-count bounds and the Jenkins gap test."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional

from .core import GapSequence, first_non_gap, validate

__all__ = [
    "Classification",
    "WeightReport",
    "PointCountBounds",
    "weight",
    "classify",
    "hyperelliptic_sequence",
    "exceptional_sequence",
    "point_count_bounds",
    "implied_hyperelliptic_point_count",
    "jenkins_forced_gap",
]


class Classification(str, Enum):
    RATIONAL = "rational"
    ORDINARY = "ordinary"
    HYPERELLIPTIC = "hyperelliptic"
    EXCEPTIONAL = "exceptional"
    GENERIC_WEIERSTRASS = "generic-weierstrass"


@dataclass(frozen=True)
class WeightReport:
    weight: int
    is_weierstrass: bool
    classification: Classification
    first_non_gap: Optional[int]
    # set when the sequence also has the exceptional shape but got another label
    also_exceptional: bool = False


@dataclass(frozen=True)
class PointCountBounds:
    genus: int
    lower: int
    upper: int
    total_weight: int


def weight(seq: GapSequence) -> int:
    """Sum of ``gaps[i] - (i + 1)``; zero exactly for ``{1, ..., g}``."""
    return sum(seq.gaps) - seq.genus * (seq.genus + 1) // 2


def _hyperelliptic_gaps(g: int):
    return tuple(range(1, 2 * g, 2))


def _exceptional_gaps(g: int):
    return tuple(range(1, g)) + (g + 1,)


def classify(seq: GapSequence) -> WeightReport:
    """Weight, Weierstrass flag and shape label of a valid sequence.

    At genus 2 the hyperelliptic and exceptional shapes coincide (``{1, 3}``);
    the label is hyperelliptic and ``also_exceptional`` is set.
    """
    g = seq.genus
    w = weight(seq)
    if g == 0:
        return WeightReport(0, False, Classification.RATIONAL, None)
    h = first_non_gap(seq)
    exceptional = g >= 2 and seq.gaps == _exceptional_gaps(g)
    if w == 0:
        label = Classification.ORDINARY
    elif g >= 2 and seq.gaps == _hyperelliptic_gaps(g):
        label = Classification.HYPERELLIPTIC
    elif exceptional:
        label = Classification.EXCEPTIONAL
    else:
        label = Classification.GENERIC_WEIERSTRASS
    return WeightReport(w, w > 0, label, h,
                        also_exceptional=exceptional and label is not Classification.EXCEPTIONAL)


def _need_genus_2(genus: int, what: str) -> None:
    if genus < 2:
        raise ValueError(f"{what} is defined for genus >= 2, got {genus}")


def hyperelliptic_sequence(genus: int) -> GapSequence:
    """Odd gaps ``{1, 3, ..., 2g-1}``; weight ``g(g-1)/2``."""
    _need_genus_2(genus, "hyperelliptic sequence")
    return validate(genus, _hyperelliptic_gaps(genus))


def exceptional_sequence(genus: int) -> GapSequence:
    """``{1, ..., g-1, g+1}``; weight 1."""
    _need_genus_2(genus, "exceptional sequence")
    return validate(genus, _exceptional_gaps(genus))


def point_count_bounds(genus: int) -> PointCountBounds:
    _need_genus_2(genus, "point-count bounds")
    total = (genus - 1) * genus * (genus + 1)
    return PointCountBounds(genus, 2 * genus + 2, total, total)


def implied_hyperelliptic_point_count(genus: int) -> int:
    """Total weight ``g^3 - g`` divided by the hyperelliptic weight ``g(g-1)/2``."""
    _need_genus_2(genus, "hyperelliptic point count")
    total = genus ** 3 - genus
    per_point = genus * (genus - 1) // 2
    q, r = divmod(total, per_point)
    assert r == 0, (genus, total, per_point)
    return q


def jenkins_forced_gap(h: int, k: int, genus: int) -> bool:
    """Whether ``k`` must be a gap when the first non-gap is ``h``.

    True iff ``2g > (h-1)(k-1)``.  Requires ``h, k >= 2``, ``gcd(h, k) == 1``
    and ``genus >= 1``; raises ``ValueError`` otherwise.
    """
    if h < 2 or k < 2:
        raise ValueError("h and k must be at least 2")
    if genus < 1:
        raise ValueError("genus must be at least 1")
    if gcd(h, k) != 1:
        raise ValueError(f"h={h} and k={k} are not coprime")
    return 2 * genus > (h - 1) * (k - 1)
