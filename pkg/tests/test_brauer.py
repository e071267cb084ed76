import pytest

from zcverify.groups import dixon_character_table
from zcverify.groups.brauer import (
    BrauerData,
    DecompositionDataError,
    DecompositionMatrix,
    brauer_values,
)


def test_identity_decomposition_restricts_table(tables):
    # p coprime to |G|: D = identity, Phi = ordinary table on all classes
    tab = tables("S4")
    labels = tab.char_labels
    d = DecompositionMatrix(
        prime=5,
        ordinary_labels=labels,
        brauer_labels=[f"phi{i}" for i in range(len(labels))],
        matrix=[[1 if i == j else 0 for j in range(len(labels))] for i in range(len(labels))],
    )
    bd = brauer_values(tab, d)
    assert bd.regular_classes == list(range(tab.classes.n_classes()))
    for i in range(len(labels)):
        assert bd.values[i] == [tab.rows[i][k] for k in bd.regular_classes]


def test_zero_column_rejected():
    with pytest.raises(DecompositionDataError):
        DecompositionMatrix(prime=3, ordinary_labels=["1a", "2a"], brauer_labels=["x", "y"],
                            matrix=[[1, 0], [2, 0]])


def test_rank_deficient_rejected():
    with pytest.raises(DecompositionDataError):
        DecompositionMatrix(prime=3, ordinary_labels=["1a", "2a"], brauer_labels=["x", "y"],
                            matrix=[[1, 1], [2, 2]])


def test_shipped_216_153_brauer_values(corpus, tables):
    entry = corpus.get("SG(216,153)")
    tab = tables("SG(216,153)")
    d = DecompositionMatrix.from_json(entry.decomposition_files[3])
    bd = brauer_values(tab, d)
    # the first three rows of the decomposition matrix are the identity, so
    # the Brauer characters restrict the corresponding ordinary ones; on the
    # involution class their values are 1, -2, 3
    cd = tab.classes
    two_a = cd.label_to_idx["2a"]
    col = bd.regular_classes.index(two_a)
    vals = sorted(int(bd.values[i][col].rational_value()) for i in range(3))
    assert vals == [-2, 1, 3]
    # and the degree-8 row is consistent: chi_8a = phi_1 + 2 phi_2 + phi_3
    ri = tab.label_to_row[d.ordinary_labels[3]]
    for j, k in enumerate(bd.regular_classes):
        combo = bd.values[0][j] + bd.values[1][j] * 2 + bd.values[2][j]
        assert combo == tab.rows[ri][k]


def test_mismatched_pairing_rejected(tables):
    tab = tables("S4")
    # claim chi of degree 2 equals 2 * (trivial Brauer character): inconsistent
    d = DecompositionMatrix(
        prime=5,
        ordinary_labels=["1a", "2a"],
        brauer_labels=["x"],
        matrix=[[1], [2]],
    )
    with pytest.raises(DecompositionDataError):
        brauer_values(tab, d)
