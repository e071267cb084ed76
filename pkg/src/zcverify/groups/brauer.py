"""Brauer character values from an ingested decomposition matrix.

Decomposition matrices are never computed here; they are data. Given D with
full column rank and the ordinary table restricted to p-regular classes, the
Brauer character values solve X_reg = D * Phi exactly and uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactmath.cyclo import Cyclotomic
from .chartable import CharacterTable


class DecompositionDataError(Exception):
    pass


@dataclass
class DecompositionMatrix:
    prime: int
    ordinary_labels: list[str]   # row labels, matching CharacterTable labels
    brauer_labels: list[str]
    matrix: list[list[int]]      # len(ordinary_labels) x len(brauer_labels)

    def __post_init__(self):
        rows = len(self.ordinary_labels)
        cols = len(self.brauer_labels)
        if len(self.matrix) != rows or any(len(r) != cols for r in self.matrix):
            raise DecompositionDataError("decomposition matrix shape mismatch")
        if any(x < 0 for row in self.matrix for x in row):
            raise DecompositionDataError("decomposition numbers must be nonnegative")
        for j in range(cols):
            if all(row[j] == 0 for row in self.matrix):
                raise DecompositionDataError(f"zero column {self.brauer_labels[j]!r}")
        if _rank(self.matrix) != cols:
            raise DecompositionDataError("decomposition matrix must have full column rank")

    def to_json(self):
        return {
            "prime": self.prime,
            "ordinary": list(self.ordinary_labels),
            "brauer": list(self.brauer_labels),
            "matrix": [list(r) for r in self.matrix],
        }

    @staticmethod
    def from_json(obj) -> "DecompositionMatrix":
        return DecompositionMatrix(
            prime=int(obj["prime"]),
            ordinary_labels=[str(x) for x in obj["ordinary"]],
            brauer_labels=[str(x) for x in obj["brauer"]],
            matrix=[[int(x) for x in row] for row in obj["matrix"]],
        )


def _rank(mat: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass
class BrauerData:
    prime: int
    regular_classes: list[int]           # class indices with order coprime to p
    brauer_labels: list[str]
    values: list[list[Cyclotomic]]       # rows = Brauer characters, cols = regular classes

    def degree(self, row: int) -> int:
        # value at the identity class (always p-regular, index 0 by labeling)
        v = self.values[row][0]
        return int(v.rational_value())


def brauer_values(table: CharacterTable, decomp: DecompositionMatrix) -> BrauerData:
    """Solve X_reg = D * Phi for the Brauer character values Phi.

    The ordinary labels of D must name rows of the table (a subset is fine as
    long as it pins Phi down, i.e. D restricted to them keeps full column
    rank); any inconsistency is a data error.
    """
    cd = table.classes
    p = decomp.prime
    regular = [i for i, c in enumerate(cd.classes) if c.order % p != 0]
    rows = []
    for lab in decomp.ordinary_labels:
        if lab not in table.label_to_row:
            raise DecompositionDataError(f"unknown ordinary character label {lab!r}")
        rows.append(table.label_to_row[lab])
    x = [[table.rows[r][k] for k in regular] for r in rows]
    d = [[Fraction(v) for v in row] for row in decomp.matrix]
    n_b = len(decomp.brauer_labels)
    # Gaussian elimination on [D | X] over Q with cyclotomic right-hand sides
    work = [list(drow) for drow in d]
    rhs = [list(xrow) for xrow in x]
    pivots = []
    rank = 0
    for c in range(n_b):
        piv = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        rhs[rank], rhs[piv] = rhs[piv], rhs[rank]
        inv = 1 / work[rank][c]
        work[rank] = [v * inv for v in work[rank]]
        rhs[rank] = [v * inv for v in rhs[rank]]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
                rhs[i] = [a - f * b for a, b in zip(rhs[i], rhs[rank])]
        pivots.append(c)
        rank += 1
    if rank != n_b:
        raise DecompositionDataError(
            "decomposition rows provided do not determine the Brauer characters"
        )
    for i in range(rank, len(work)):
        if any(v != Cyclotomic.zero() for v in rhs[i]):
            raise DecompositionDataError("table and decomposition matrix are inconsistent")
    phi = [rhs[pivots.index(c)] for c in range(n_b)]
    return BrauerData(
        prime=p,
        regular_classes=regular,
        brauer_labels=list(decomp.brauer_labels),
        values=phi,
    )
