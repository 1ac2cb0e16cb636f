"""Exit criteria.  Each test prints one ``[ACCEPTANCE] PASS|FAIL`` line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also shown in the terminal summary.
"""

import io
import json
import subprocess
import sys
import time
from math import gcd

from gapseq import (
    brute_force_enumerate,
    classify,
    exceptional_sequence,
    first_non_gap,
    hyperelliptic_sequence,
    implied_hyperelliptic_point_count,
    iter_tree,
    jenkins_forced_gap,
    non_gaps,
    point_count_bounds,
    tree_enumerate,
    validate,
    weight,
)
from gapseq.cli import CliConfig, run_command
from gapseq.ladder import ladder_from_gaps


def cli(*argv, workers=1):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), CliConfig(workers=workers), out, err)
    return code, out.getvalue()


def test_c1_genus3_reproduction(report):
    t0 = time.perf_counter()
    code, out = cli("enumerate", "--genus", "3")
    elapsed = time.perf_counter() - t0
    recs = [json.loads(line) for line in out.splitlines()]
    gaps = [r["gaps"] for r in recs]
    ngs = [r["nonGaps"] for r in recs]
    ok = (code == 0
          and gaps == [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 5]]
          and ngs == [[4, 5, 6], [3, 5, 6], [3, 4, 6], [2, 4, 6]]
          and elapsed < 1.0)
    report(ok, f"gaps={gaps} nonGaps={ngs} {elapsed:.3f}s")


def test_c2_oracle_equivalence(report):
    t0 = time.perf_counter()
    bad = []
    for g in range(13):
        tree = tree_enumerate(g)
        brute = brute_force_enumerate(g)
        if (sorted(s.gaps for s in tree.sequences) != sorted(s.gaps for s in brute.sequences)
                or tree.count != brute.count):
            bad.append(g)
    elapsed = time.perf_counter() - t0
    report(not bad and elapsed < 300, f"mismatched genera={bad} {elapsed:.1f}s")


def _all(max_genus):
    for g in range(max_genus + 1):
        yield from iter_tree(g)


def test_c3_ladder_laws(report):
    violations = []
    checked = 0
    for seq in _all(10):
        g = seq.genus
        lad = ladder_from_gaps(seq)
        checked += 1
        if any(h - i != 1 - g + n for n, (h, i) in enumerate(zip(lad.h0, lad.i))):
            violations.append((seq.gaps, "riemann-roch"))
        if lad.i[0] != g:
            violations.append((seq.gaps, "i[0]"))
        if g and lad.i[2 * g - 1] != 0:
            violations.append((seq.gaps, "i[2g-1]"))
        drops = [lad.i[n - 1] - lad.i[n] for n in range(1, len(lad.i))]
        if any(d not in (0, 1) for d in drops) or sum(d == 1 for d in drops) != g:
            violations.append((seq.gaps, "decreases"))
    report(not violations, f"{checked} sequences, violations={violations[:3]}")


def test_c4_structural_invariants(report):
    violations = []
    checked = 0
    for seq in _all(10):
        g = seq.genus
        if g == 0:
            continue
        checked += 1
        ok = (seq.gaps[0] == 1 and max(seq.gaps) < 2 * g
              and 2 * g in non_gaps(seq) and first_non_gap(seq) <= g + 1)
        if not ok:
            violations.append(seq.gaps)
    report(not violations, f"{checked} sequences, violations={violations[:3]}")


def test_c5_weight_formulas(report):
    t0 = time.perf_counter()
    bad = []
    for g in range(2, 51):
        if weight(hyperelliptic_sequence(g)) != g * (g - 1) // 2:
            bad.append(("hyperelliptic", g))
        if weight(exceptional_sequence(g)) != 1:
            bad.append(("exceptional", g))
    for g in range(2, 1001):
        b = point_count_bounds(g)
        if implied_hyperelliptic_point_count(g) != 2 * g + 2:
            bad.append(("implied", g))
        if (b.lower, b.upper) != (2 * g + 2, g ** 3 - g):
            bad.append(("bounds", g))
    elapsed = time.perf_counter() - t0
    report(not bad and elapsed < 1.0, f"bad={bad[:3]} {elapsed:.3f}s")


def test_c6_jenkins_cross_validation(report):
    violations = []
    pairs = 0
    for seq in _all(10):
        g = seq.genus
        if g == 0:
            continue
        h = first_non_gap(seq)
        for k in range(2, 2 * g):
            if gcd(h, k) == 1 and jenkins_forced_gap(h, k, g):
                pairs += 1
                if k not in seq.gaps:
                    violations.append((seq.gaps, h, k))
    report(not violations, f"{pairs} forced pairs, violations={violations[:3]}")


def test_c7_genus6_example(report):
    hyper = hyperelliptic_sequence(6)
    r = classify(hyper)
    ng = non_gaps(hyper).non_gaps
    ordinary = validate(6, [1, 2, 3, 4, 5, 6])
    h_ord = first_non_gap(ordinary)
    ok = (r.classification.value == "hyperelliptic" and ng[:3] == (2, 4, 6)
          and r.first_non_gap == 2 and h_ord == 7
          and not classify(ordinary).is_weierstrass)
    report(ok, f"hyperelliptic non-gaps start {ng[:3]}, ordinary first non-gap {h_ord}")


def _cli_subprocess(*argv):
    return subprocess.run([sys.executable, "-m", "gapseq.cli", *argv],
                          capture_output=True, check=True).stdout


def test_c8_determinism(report):
    counts = {w: _cli_subprocess("count", "--genus", "18", "--workers", str(w)).strip()
              for w in (1, 2, 8)}
    first = _cli_subprocess("enumerate", "--genus", "10", "--workers", "1")
    second = _cli_subprocess("enumerate", "--genus", "10", "--workers", "1")
    ok = len(set(counts.values())) == 1 and first == second and len(first) > 0
    report(ok, f"count18={ {w: c.decode() for w, c in counts.items()} } "
               f"enumerate bytes equal={first == second}")
