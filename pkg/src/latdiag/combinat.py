"""Partitions, compositions, staircases, and permutation signs.

Partitions are plain tuples of weakly decreasing positive integers;
compositions are tuples of arbitrary integers. Permutations of {0..n-1}
are tuples in one-line notation.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, Sequence


def check_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate and return a partition as a tuple (weakly decreasing, positive)."""
    out = tuple(int(v) for v in parts)
    if any(v <= 0 for v in out):
        raise ValueError(f"partition parts must be positive, got {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {out}")
    return out


def is_partition(parts: Sequence[int]) -> bool:
    try:
        check_partition(parts)
    except ValueError:
        return False
    return True


def conjugate(lam: Iterable[int]) -> tuple[int, ...]:
    """Conjugate partition: entry i counts the parts of size at least i+1."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


@cache
def partitions_of(k: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of k, in decreasing lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")

    def gen(rem: int, maxpart: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(k, k))


def staircase(ell: int) -> tuple[int, ...]:
    """The strictly decreasing sequence (ell-1, ell-2, ..., 1, 0)."""
    if ell < 1:
        raise ValueError("staircase length must be at least 1")
    return tuple(range(ell - 1, -1, -1))


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..n-1, computed from its cycle type."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated partition such as "4,2,1"."""
    body = text.strip()
    if not body:
        raise ValueError("empty partition")
    try:
        parts = tuple(int(v) for v in body.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)
