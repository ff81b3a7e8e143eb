import math
from fractions import Fraction

import pytest

from latdiag.combinat import partitions_of, weak_compositions
from latdiag.diagrams import LatticeDiagram, delta, ferrers, normalize, transpose
from latdiag.errors import ResourceLimitError
from latdiag.hilbert import HilbertTable, exact_rank, hilbert, total_dimension
from latdiag.polynomials import Polynomial, diff_operator


def naive_rank(rows):
    """Independent rank: plain Gaussian elimination over Fraction."""
    matrix = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [v * inv for v in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


# -- rank ----------------------------------------------------------------------


def test_exact_rank_known_cases():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[1, 2], [3, 4]]) == 2
    assert exact_rank([[Fraction(1, 2), Fraction(1, 3)],
                       [Fraction(1, 4), Fraction(1, 6)]]) == 1


def test_exact_rank_matches_naive():
    import random

    rng = random.Random(3)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        matrix = [[Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                   for _ in range(cols)] for _ in range(rows)]
        assert exact_rank(matrix) == naive_rank(matrix)


# -- tables ----------------------------------------------------------------------


def test_hilbert_single_cell():
    table = hilbert(LatticeDiagram(((0, 0),)))
    assert table.total == 1
    assert table.dim(0, 0) == 1


def test_hilbert_vandermonde_pair():
    table = hilbert(ferrers((1, 1)))
    assert dict(table.dims) == {(0, 0): 1, (1, 0): 1}
    assert table.total == 2


def test_hilbert_hook_of_three():
    assert total_dimension(ferrers((2, 1))) == 6


def test_hilbert_examples_from_rank():
    assert total_dimension(ferrers((2,))) == 2
    assert total_dimension(ferrers((1, 1, 1))) == 6
    assert total_dimension(ferrers((2, 2))) == 24


def test_top_and_bottom_pieces():
    for mu in [(2, 1), (2, 2), (3, 1)]:
        diagram = ferrers(mu)
        table = hilbert(diagram)
        assert table.dim(diagram.row_weight, diagram.column_weight) == 1
        assert table.dim(0, 0) == 1


def test_transpose_symmetry():
    for mu in [(2, 1), (3, 1), (2, 2)]:
        diagram = ferrers(mu)
        flipped, _ = transpose(diagram)
        table = dict(hilbert(diagram).dims)
        swapped = {(b, a): v for (a, b), v in hilbert(flipped).dims}
        assert table == swapped


def test_derivative_closure_sample():
    # differentiating any generator of a piece lands in the span of the piece below
    diagram = ferrers((2, 1))
    base = delta(diagram)
    n = len(diagram)
    x_top, y_top = diagram.row_weight, diagram.column_weight
    for (a, b) in [(1, 1), (2, 0), (1, 0)]:
        lower = []
        for xe in weak_compositions(x_top - (a - 1), n):
            for ye in weak_compositions(y_top - b, n):
                g = diff_operator(Polynomial.monomial(n, xe, ye), base)
                if g:
                    lower.append(g)
        basis = sorted({m for g in lower for m in g.terms})
        index = {m: i for i, m in enumerate(basis)}

        def as_row(poly):
            row = [Fraction(0)] * len(basis)
            for m, c in poly.terms.items():
                row[index[m]] = c
            return row

        base_rank = exact_rank([as_row(g) for g in lower])
        for xe in weak_compositions(x_top - a, n):
            for ye in weak_compositions(y_top - b, n):
                g = diff_operator(Polynomial.monomial(n, xe, ye), base)
                for i in range(1, n + 1):
                    dg = g.partial("x", i)
                    if dg.is_zero:
                        continue
                    rows = [as_row(h) for h in lower] + [as_row(dg)]
                    assert exact_rank(rows) == base_rank


def test_factorial_dimensions():
    for n in range(1, 5):
        for mu in partitions_of(n):
            assert total_dimension(ferrers(mu)) == math.factorial(n), mu


def test_rejects_bad_inputs():
    bad, _ = normalize([(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        hilbert(bad)
    with pytest.raises(ResourceLimitError):
        hilbert(ferrers((2, 2)), degree_cap=1)


def test_tsv_and_json():
    table = hilbert(ferrers((2, 1)))
    tsv = table.to_tsv()
    lines = tsv.splitlines()
    assert lines[0] == "x\\y\t0\t1"
    assert len(lines) == table.x_top + 2
    obj = table.to_json_obj()
    assert obj["total"] == 6
    assert {(d["x"], d["y"]): d["dim"] for d in obj["dims"]} == dict(table.dims)
