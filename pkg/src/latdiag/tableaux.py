"""Column tableaux, merged-word parenthesization, and the shape involution.

A column tableau is a tuple of strictly increasing columns read bottom to
top; the shape is the composition of column heights. Column-strict Young
tableaux are the members whose shape is a partition and whose rows weakly
increase, which the pairing criterion detects without looking at rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .combinat import check_partition, conjugate, permutation_sign, staircase


@dataclass(frozen=True)
class ColumnTableau:
    """A tuple of strictly increasing columns with entries in 1..max_entry."""

    columns: tuple[tuple[int, ...], ...]
    max_entry: int

    def __post_init__(self):
        cols = tuple(tuple(int(v) for v in col) for col in self.columns)
        object.__setattr__(self, "columns", cols)
        for col in cols:
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                raise ValueError(f"column {col} is not strictly increasing")
            if col and (col[0] < 1 or col[-1] > self.max_entry):
                raise ValueError(f"column {col} has entries outside 1..{self.max_entry}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    @property
    def num_columns(self) -> int:
        return len(self.columns)

    def entry_multiplicities(self) -> dict[int, int]:
        """How many times each entry occurs across all columns."""
        mult: dict[int, int] = {}
        for col in self.columns:
            for v in col:
                mult[v] = mult.get(v, 0) + 1
        return mult

    def word(self) -> tuple[int, ...]:
        """All entries sorted increasingly (the merged word of the whole tableau)."""
        return tuple(sorted(v for col in self.columns for v in col))

    def with_columns(self, j: int, left: tuple[int, ...], right: tuple[int, ...]) -> "ColumnTableau":
        """Copy with columns j and j+1 replaced."""
        cols = self.columns[:j] + (left, right) + self.columns[j + 2:]
        return ColumnTableau(cols, self.max_entry)

    def __str__(self) -> str:
        return "|".join(",".join(str(v) for v in col) if col else "_" for col in self.columns)


def parse_tableau(text: str, max_entry: int | None = None) -> ColumnTableau:
    """Parse the "|"-separated column format, e.g. "7,8,10|3,9|4,5,6,8".

    An empty column is written "_". Entries are listed bottom to top.
    """
    body = text.strip()
    if not body:
        raise ValueError("empty tableau text")
    cols = []
    for chunk in body.split("|"):
        chunk = chunk.strip()
        if chunk == "_":
            cols.append(())
            continue
        try:
            cols.append(tuple(int(v) for v in chunk.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse column {chunk!r}") from exc
    if max_entry is None:
        max_entry = max((col[-1] for col in cols if col), default=0)
    return ColumnTableau(tuple(cols), max_entry)


@dataclass(frozen=True)
class WordPair:
    """Merged sorted word of two adjacent columns with parenthesis marks.

    Entries from the left column carry "(", entries from the right column
    carry ")"; a value occurring in both columns is read left-column-first.
    Pairing follows the usual nesting rule, so the unpaired marks always read
    ")...)(...(" in position order.
    """

    word: tuple[int, ...]
    marks: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]
    unpaired_rights: tuple[int, ...]
    unpaired_lefts: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.unpaired_rights)

    @property
    def l(self) -> int:
        return len(self.unpaired_lefts)

    def word_str(self) -> str:
        return " ".join(str(v) for v in self.word)

    def marks_str(self) -> str:
        return " ".join(self.marks)


def word_pair(left: tuple[int, ...], right: tuple[int, ...]) -> WordPair:
    """Merge two strict columns into the tagged word with its pairing."""
    for col in (left, right):
        if len(set(col)) != len(col):
            raise ValueError(f"column {col} has a repeated entry")
    tagged = sorted([(v, 0) for v in left] + [(v, 1) for v in right])
    word = tuple(v for v, _ in tagged)
    marks = tuple("(" if side == 0 else ")" for _, side in tagged)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    unpaired_rights: list[int] = []
    for pos, mark in enumerate(marks):
        if mark == "(":
            stack.append(pos)
        elif stack:
            pairs.append((stack.pop(), pos))
        else:
            unpaired_rights.append(pos)
    unpaired_lefts = stack
    assert not unpaired_rights or not unpaired_lefts or unpaired_rights[-1] < unpaired_lefts[0]
    return WordPair(word, marks, tuple(sorted(pairs)), tuple(unpaired_rights), tuple(unpaired_lefts))


def two_column_move(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rewrite the unpaired marks of an incompatible column pair.

    With r unpaired right marks and l unpaired left marks: for l >= r > 0 the
    l-r+1 leftmost unpaired lefts become rights; for r > l the r-l-1 rightmost
    unpaired rights become lefts. Either way the merged word is unchanged and
    the column sizes go from (|left|, |right|) to (|right|-1, |left|+1).
    The caller handles the r = 0 fixed-point case.
    """
    wp = word_pair(left, right)
    r, l = wp.r, wp.l
    if r == 0:
        raise ValueError("columns are already compatible; no move is defined")
    marks = list(wp.marks)
    if l >= r:
        for pos in wp.unpaired_lefts[: l - r + 1]:
            marks[pos] = ")"
    else:
        flip = r - l - 1
        for pos in (wp.unpaired_rights[-flip:] if flip else ()):
            marks[pos] = "("
    new_left = tuple(v for v, mark in zip(wp.word, marks) if mark == "(")
    new_right = tuple(v for v, mark in zip(wp.word, marks) if mark == ")")
    return new_left, new_right


def is_column_strict(tableau: ColumnTableau) -> bool:
    """Pairing criterion: column-strict iff no adjacent column pair has an
    unpaired right parenthesis."""
    cols = tableau.columns
    return all(word_pair(cols[j], cols[j + 1]).r == 0 for j in range(len(cols) - 1))


@cache
def enumerate_column_families(alpha: tuple[int, ...], n: int) -> tuple[ColumnTableau, ...]:
    """All tuples of strict columns of the given heights with entries in 1..n.

    Any negative height makes the family empty. The count is the product of
    binomial(n, alpha_j).
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        return ()
    pools = [list(itertools.combinations(range(1, n + 1), a)) for a in alpha]
    return tuple(ColumnTableau(cols, n) for cols in itertools.product(*pools))


@cache
def enumerate_cs_tableaux(lam: tuple[int, ...], n: int) -> tuple[ColumnTableau, ...]:
    """All column-strict Young tableaux of partition shape lam, entries in 1..n,
    ordered by their column reading word."""
    lam = check_partition(lam)
    families = enumerate_column_families(conjugate(lam), n)
    good = [t for t in families if is_column_strict(t)]
    good.sort(key=lambda t: tuple(itertools.chain.from_iterable(t.columns)))
    return tuple(good)


def find_violating_pair(tableau: ColumnTableau) -> tuple[int, int] | None:
    """Locate the first breach of column-strictness.

    Adjacent column pairs are scanned right to left; within a pair, rows
    bottom to top. A breach at row i between columns j and j+1 is either an
    entry inversion T(i,j) > T(i,j+1) or a cell present at (i, j+1) but
    absent at (i, j). Returns (row, left column index) or None.
    """
    cols = tableau.columns
    for j in range(len(cols) - 2, -1, -1):
        left, right = cols[j], cols[j + 1]
        for i in range(max(len(left), len(right))):
            if i < len(left) and i < len(right):
                if left[i] > right[i]:
                    return (i, j)
            elif i < len(right):
                return (i, j)
    return None


def shape_orbit_sign(alpha: tuple[int, ...], lam: tuple[int, ...]) -> int:
    """Sign of the permutation placing a shape in the staircase orbit of lam.

    alpha lies in the orbit when alpha + staircase rearranges
    conjugate(lam) + staircase; the rearrangement is unique because the
    target is strictly decreasing. Raises ValueError outside the orbit.
    """
    lam = check_partition(lam)
    lam_conj = conjugate(lam)
    ell = len(lam_conj)
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ell:
        raise ValueError(f"shape {alpha} has {len(alpha)} columns, orbit needs {ell}")
    d = staircase(ell)
    v = [lam_conj[i] + d[i] for i in range(ell)]
    w = [alpha[i] + d[i] for i in range(ell)]
    if sorted(w) != sorted(v):
        raise ValueError(f"shape {alpha} is not in the orbit of {lam}")
    position = {value: idx for idx, value in enumerate(v)}
    perm = tuple(position[value] for value in w)
    return permutation_sign(perm)


@dataclass(frozen=True)
class PsiStep:
    """One application of the involution, with diagnostics for the moved pair."""

    source: ColumnTableau
    result: ColumnTableau
    fixed: bool
    pair: tuple[int, int] | None
    before: WordPair | None
    after: WordPair | None


def psi_step(tableau: ColumnTableau, lam: tuple[int, ...]) -> PsiStep:
    """Apply the involution to a tableau in the staircase orbit of lam.

    Column-strict tableaux are fixed. Otherwise the two columns at the first
    violating pair are rewritten by two_column_move; the result lies in the
    adjacent orbit shape, keeps the merged word, and maps back under a second
    application.
    """
    shape_orbit_sign(tableau.shape, lam)
    violation = find_violating_pair(tableau)
    if violation is None:
        return PsiStep(tableau, tableau, True, None, None, None)
    i, j = violation
    left, right = tableau.columns[j], tableau.columns[j + 1]
    before = word_pair(left, right)
    new_left, new_right = two_column_move(left, right)
    result = tableau.with_columns(j, new_left, new_right)
    return PsiStep(tableau, result, False, (i, j), before, word_pair(new_left, new_right))


def psi(tableau: ColumnTableau, lam: tuple[int, ...]) -> ColumnTableau:
    """The sign-reversing, word-preserving involution on the orbit set of lam."""
    return psi_step(tableau, lam).result
