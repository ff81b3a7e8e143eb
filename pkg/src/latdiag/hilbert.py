"""Bigraded dimension tables of the span of all derivatives of a determinant.

For each bidegree (a, b) the homogeneous piece is spanned by the derivatives
of order (|p|-a, |q|-b); its dimension is the exact rank of those
polynomials in the monomial basis. Rank computation is fraction-free:
rows are scaled to integers and eliminated with exact Bareiss division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import weak_compositions
from .diagrams import LatticeDiagram, delta, epsilon
from .errors import ResourceLimitError
from .polynomials import Polynomial, diff_operator

DEGREE_CAP = 12


def exact_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of a rational matrix, by fraction-free (Bareiss) elimination."""
    matrix: list[list[int]] = []
    for row in rows:
        fracs = [Fraction(v) for v in row]
        if all(v == 0 for v in fracs):
            continue
        scale = math.lcm(*(v.denominator for v in fracs))
        matrix.append([int(v * scale) for v in fracs])
    if not matrix:
        return 0
    ncols = len(matrix[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        pivot_value = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            current = matrix[r]
            above = matrix[rank]
            entry = current[col]
            matrix[r] = [(pivot_value * current[c] - entry * above[c]) // prev
                         for c in range(ncols)]
        prev = pivot_value
        rank += 1
        if rank == len(matrix):
            break
    return rank


@dataclass(frozen=True, eq=True)
class HilbertTable:
    """Dimension of each bidegree piece of a derivative span."""

    x_top: int
    y_top: int
    dims: tuple[tuple[tuple[int, int], int], ...]

    def dim(self, a: int, b: int) -> int:
        return dict(self.dims).get((a, b), 0)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.dims)

    def to_tsv(self) -> str:
        """Grid with rows indexed by x-degree and columns by y-degree."""
        table = dict(self.dims)
        lines = ["x\\y\t" + "\t".join(str(b) for b in range(self.y_top + 1))]
        for a in range(self.x_top + 1):
            lines.append(str(a) + "\t" + "\t".join(
                str(table.get((a, b), 0)) for b in range(self.y_top + 1)))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "x_top": self.x_top,
            "y_top": self.y_top,
            "total": self.total,
            "dims": [{"x": a, "y": b, "dim": v} for (a, b), v in self.dims],
        }


def hilbert(diagram: LatticeDiagram, degree_cap: int = DEGREE_CAP,
            max_cells: int | None = None) -> HilbertTable:
    """The bigraded Hilbert series of the derivative span, as a table."""
    if not epsilon(diagram):
        raise ValueError("derivative span needs n distinct cells in the positive quadrant")
    base = delta(diagram, max_cells=max_cells)
    x_top = diagram.row_weight
    y_top = diagram.column_weight
    if x_top > degree_cap or y_top > degree_cap:
        raise ResourceLimitError(
            f"bidegree ({x_top}, {y_top}) exceeds the degree cap {degree_cap}")
    n = len(diagram)
    entries = []
    for a in range(x_top + 1):
        for b in range(y_top + 1):
            generators = []
            for xexp in weak_compositions(x_top - a, n):
                for yexp in weak_compositions(y_top - b, n):
                    op = Polynomial.monomial(n, xexp, yexp)
                    g = diff_operator(op, base)
                    if g:
                        generators.append(g)
            rank = _span_rank(generators)
            if rank:
                entries.append(((a, b), rank))
    return HilbertTable(x_top, y_top, tuple(entries))


def _span_rank(generators: list[Polynomial]) -> int:
    if not generators:
        return 0
    basis = sorted({m for g in generators for m in g.terms})
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        row = [Fraction(0)] * len(basis)
        for m, c in g.terms.items():
            row[index[m]] = c
        rows.append(row)
    return exact_rank(rows)


def total_dimension(diagram: LatticeDiagram, degree_cap: int = DEGREE_CAP,
                    max_cells: int | None = None) -> int:
    """Dimension of the full derivative span (the n! value for Ferrers diagrams)."""
    return hilbert(diagram, degree_cap=degree_cap, max_cells=max_cells).total
