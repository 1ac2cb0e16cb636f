"""Field-runnable consistency checks (the ``selftest`` subcommand)."""

from __future__ import annotations

from math import gcd
from typing import Callable, Iterator, List, NamedTuple

from .core import first_non_gap, is_closed_under_addition, non_gaps, validate
from .enumerator import brute_force_enumerate, iter_tree
from .ladder import gaps_from_ladder, ladder_from_gaps, verify_ladder_laws
from .weierstrass import (
    exceptional_sequence,
    hyperelliptic_sequence,
    implied_hyperelliptic_point_count,
    jenkins_forced_gap,
    point_count_bounds,
    weight,
)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def _first_failure(items: Iterator, bad: Callable) -> str:
    for item in items:
        msg = bad(item)
        if msg:
            return msg
    return ""


def _sequences(max_genus: int):
    for g in range(max_genus + 1):
        yield from iter_tree(g)


def check_oracle(max_genus: int, limit: int) -> CheckResult:
    top = min(max_genus, limit)
    for g in range(top + 1):
        tree = sorted(s.gaps for s in iter_tree(g))
        brute = sorted(s.gaps for s in brute_force_enumerate(g, limit))
        if tree != brute:
            return CheckResult("oracle-equivalence", False, f"genus {g}: {len(tree)} vs {len(brute)}")
    return CheckResult("oracle-equivalence", True, f"genus 0..{top}")


def _structure(seq) -> str:
    g = seq.genus
    if g == 0:
        return "" if seq.gaps == () else "genus 0 with gaps"
    ng = non_gaps(seq)
    if seq.gaps[0] != 1 or seq.gaps[-1] >= 2 * g or len(seq.gaps) != g:
        return f"bad range {seq.gaps}"
    if 2 * g not in ng or len(ng) != g or not is_closed_under_addition(ng):
        return f"bad non-gaps {ng.non_gaps}"
    h = first_non_gap(seq)
    if h > g + 1:
        return f"first non-gap {h} > g+1 for {seq.gaps}"
    if (h <= g) != (weight(seq) > 0):
        return f"first non-gap / weight mismatch for {seq.gaps}"
    if validate(g, seq.gaps) != seq:
        return f"round trip failed for {seq.gaps}"
    parent = seq.gaps[:-1]
    if g >= 1 and validate(g - 1, parent).gaps != parent:
        return f"no parent for {seq.gaps}"
    return ""


def _ladder(seq) -> str:
    lad = ladder_from_gaps(seq)
    bad = [k for k, r in verify_ladder_laws(lad).items() if not r.passed]
    if bad:
        return f"{seq.gaps}: {bad}"
    if gaps_from_ladder(lad) != seq:
        return f"ladder round trip failed for {seq.gaps}"
    g = seq.genus
    if g and (lad.h0[2 * g - 1] != g or lad.h0[2 * g] != g + 1):
        return f"h0 endpoints wrong for {seq.gaps}"
    return ""


def _jenkins(seq) -> str:
    g = seq.genus
    if g == 0:
        return ""
    h = first_non_gap(seq)
    gaps = set(seq.gaps)
    for k in range(2, 2 * g):
        if gcd(h, k) == 1 and jenkins_forced_gap(h, k, g) and k not in gaps:
            return f"{seq.gaps}: k={k} forced but non-gap (h={h})"
    return ""


def _weight_range(seq) -> str:
    g = seq.genus
    w = weight(seq)
    top = g * (g - 1) // 2
    hyper = g >= 2 and seq.gaps == tuple(range(1, 2 * g, 2))
    if not 0 <= w <= top or (g >= 2 and (w == top) != hyper):
        return f"weight {w} out of range for {seq.gaps}"
    return ""


def check_formulas() -> CheckResult:
    for g in range(2, 51):
        if weight(hyperelliptic_sequence(g)) != g * (g - 1) // 2:
            return CheckResult("weight-formulas", False, f"hyperelliptic genus {g}")
        if weight(exceptional_sequence(g)) != 1:
            return CheckResult("weight-formulas", False, f"exceptional genus {g}")
    for g in range(2, 1001):
        b = point_count_bounds(g)
        if (b.lower, b.upper, b.total_weight) != (2 * g + 2, g ** 3 - g, g ** 3 - g):
            return CheckResult("weight-formulas", False, f"bounds genus {g}")
        if implied_hyperelliptic_point_count(g) != b.lower:
            return CheckResult("weight-formulas", False, f"implied count genus {g}")
    return CheckResult("weight-formulas", True)


def run_selftest(max_genus: int, limit: int) -> List[CheckResult]:
    results = [check_oracle(max_genus, limit)]
    for name, fn in (("structure", _structure), ("ladder-laws", _ladder),
                     ("jenkins", _jenkins), ("weight-range", _weight_range)):
        msg = _first_failure(_sequences(max_genus), fn)
        results.append(CheckResult(name, not msg, msg or f"genus 0..{max_genus}"))
    results.append(check_formulas())
    return results
