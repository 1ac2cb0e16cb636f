import pytest

from gapseq import (
    Classification,
    ResourceLimitError,
    TreeNode,
    brute_force_enumerate,
    classify,
    count_by_genus,
    count_genus,
    filter_enumerate,
    iter_tree,
    tree_enumerate,
    validate,
)
from gapseq import _pykernels
from gapseq._backend import BACKEND, count_levels

from oracles import all_gap_sequences

# computed with tests/oracles.py (knapsack closure over all g-subsets of [1, 2g-1])
ORACLE_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]

GENUS_3 = [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5)]


def gaps_of(result):
    return [s.gaps for s in result.sequences]


def test_brute_force_genus_3():
    res = brute_force_enumerate(3)
    assert res.count == 4
    assert gaps_of(res) == GENUS_3


def test_brute_force_small():
    assert brute_force_enumerate(0).count == 1
    assert gaps_of(brute_force_enumerate(0)) == [()]
    assert gaps_of(brute_force_enumerate(2)) == [(1, 2), (1, 3)]


def test_brute_force_refuses_above_limit():
    with pytest.raises(ResourceLimitError):
        brute_force_enumerate(15)
    with pytest.raises(ResourceLimitError):
        brute_force_enumerate(5, limit=4)


@pytest.mark.parametrize("genus", range(0, 11))
def test_brute_force_matches_independent_oracle(genus):
    assert gaps_of(brute_force_enumerate(genus)) == list(all_gap_sequences(genus))


@pytest.mark.parametrize("genus", range(0, 11))
def test_tree_matches_brute_force(genus):
    tree = tree_enumerate(genus)
    brute = brute_force_enumerate(genus)
    # serial tree order is already lexicographic
    assert gaps_of(tree) == gaps_of(brute)
    assert tree.count == brute.count == ORACLE_COUNTS[genus]


def test_tree_examples():
    assert tree_enumerate(3).count == 4
    assert tree_enumerate(5).count == 12
    assert gaps_of(tree_enumerate(1)) == [(1,)]
    assert gaps_of(tree_enumerate(0)) == [()]


def test_streaming_result():
    res = tree_enumerate(6, stream=True)
    assert res.count == 23
    assert sum(1 for _ in res.sequences) == 23


def test_count_by_genus():
    assert count_by_genus(3) == [(0, 1), (1, 1), (2, 2), (3, 4)]
    assert count_by_genus(0) == [(0, 1)]
    assert count_by_genus(5)[-1] == (5, 12)
    assert [c for _, c in count_by_genus(12)] == ORACLE_COUNTS


def test_counts_monotone():
    counts = [c for _, c in count_by_genus(12)]
    assert all(a <= b for a, b in zip(counts, counts[1:]))


@pytest.mark.parametrize("genus", range(1, 11))
def test_parent_is_valid(genus):
    for seq in iter_tree(genus):
        parent = validate(genus - 1, seq.gaps[:-1])
        assert parent.gaps == seq.gaps[:-1]


@pytest.mark.parametrize("genus", range(2, 11))
def test_single_hyperelliptic_sequence(genus):
    odd = tuple(range(1, 2 * genus, 2))
    assert sum(s.gaps == odd for s in iter_tree(genus)) == 1


def test_tree_node_root_and_children():
    root = TreeNode.root(4)
    assert root.frobenius == -1
    assert root.effective_generators == (1,)
    (g1,) = root.children()
    assert g1.gaps == (1,) and g1.frobenius == 1
    assert g1.effective_generators == (2, 3)
    kids = g1.children()
    assert [k.gaps for k in kids] == [(1, 2), (1, 3)]
    assert kids[0].gap_set == 0b110


@pytest.mark.parametrize("workers", [2, 3])
def test_parallel_count_deterministic(workers):
    assert count_genus(14, workers=workers) == count_genus(14)


def test_parallel_emission_same_set():
    serial = [s.gaps for s in iter_tree(9)]
    parallel = [s.gaps for s in iter_tree(9, workers=2)]
    assert sorted(parallel) == serial


@pytest.mark.parametrize("genus", [0, 1, 5, 12, 18, 22])
def test_python_and_compiled_kernels_agree(genus):
    root = TreeNode.root(genus)
    expected = _pykernels.count_levels(root.dec, root.frobenius, 0, genus)
    assert count_levels(root.dec, root.frobenius, 0, genus) == expected


def test_kernel_from_inner_node():
    node = TreeNode.root(8).children()[0].children()[1]  # gaps (1, 3)
    got = count_levels(node.dec, node.frobenius, node.genus, 8)
    assert got[0] == 1
    want = [sum(1 for s in iter_tree(g) if s.gaps[:2] == (1, 3)) for g in range(2, 9)]
    assert got == want


def test_kernel_rejects_small_window():
    with pytest.raises(ValueError):
        count_levels(TreeNode.root(3).dec, -1, 0, 5)


def test_backend_name():
    assert BACKEND in ("cython", "python")


def test_filter_examples():
    assert gaps_of(filter_enumerate(3, "firstNonGap", 2)) == [(1, 3, 5)]
    assert gaps_of(filter_enumerate(3, "weight", 0)) == [(1, 2, 3)]
    assert gaps_of(filter_enumerate(4, "classification", "exceptional")) == [(1, 2, 3, 5)]


@pytest.mark.parametrize("genus", [3, 6, 8])
def test_filter_matches_post_hoc(genus):
    every = list(iter_tree(genus))
    for label in Classification:
        got = filter_enumerate(genus, "classification", label.value)
        want = [s for s in every if classify(s).classification is label]
        assert got.sequences == want and got.count == len(want)


def test_filter_errors():
    with pytest.raises(ValueError):
        filter_enumerate(3, "multiplicity", 2)
    with pytest.raises(ValueError):
        filter_enumerate(3, "weight", "heavy")
    with pytest.raises(ValueError):
        filter_enumerate(0, "weight", 0)
