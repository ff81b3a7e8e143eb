"""The classical symmetric polynomials as exact values in x1..xn.

Everything is built in the x alphabet; callers wanting the y version swap
alphabets on the result. Results are cached, which is safe because
Polynomial values are immutable.
"""

from __future__ import annotations

import itertools
from functools import cache

from .combinat import check_partition, conjugate, permutation_sign, staircase
from .polynomials import Polynomial

from . import tableaux


@cache
def power_sum(k: int, n: int) -> Polynomial:
    """Sum of x_i^k over i = 1..n."""
    if k < 1 or n < 1:
        raise ValueError("power sum needs k >= 1 and n >= 1")
    terms = {}
    for i in range(n):
        mono = [0] * (2 * n)
        mono[i] = k
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)


@cache
def elementary(k: int, n: int) -> Polynomial:
    """Sum of squarefree monomials over strictly increasing index tuples.

    e_0 = 1 and e_k = 0 for k < 0.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if k < 0:
        return Polynomial.zero(n)
    if k == 0:
        return Polynomial.constant(n, 1)
    terms = {}
    for subset in itertools.combinations(range(n), k):
        mono = [0] * (2 * n)
        for i in subset:
            mono[i] = 1
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)


@cache
def homogeneous(k: int, n: int) -> Polynomial:
    """Sum of all monomials of degree k, over weakly increasing index tuples."""
    if n < 1:
        raise ValueError("need n >= 1")
    if k < 0:
        return Polynomial.zero(n)
    if k == 0:
        return Polynomial.constant(n, 1)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        mono = [0] * (2 * n)
        for i in combo:
            mono[i] += 1
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)


@cache
def schur_jacobi_trudi(lam: tuple[int, ...], n: int) -> Polynomial:
    """Schur polynomial via the dual Jacobi-Trudi determinant in the e_k,
    expanded over permutations of the staircase-shifted conjugate shape."""
    lam = check_partition(lam)
    if not lam:
        raise ValueError("need a nonempty partition")
    lam_conj = conjugate(lam)
    ell = len(lam_conj)
    d = staircase(ell)
    v = [lam_conj[i] + d[i] for i in range(ell)]
    total = Polynomial.zero(n)
    for perm in itertools.permutations(range(ell)):
        alpha = tuple(v[perm[i]] - d[i] for i in range(ell))
        if min(alpha) < 0:
            continue
        product = Polynomial.constant(n, permutation_sign(perm))
        for a in alpha:
            product = product * elementary(a, n)
        total = total + product
    return total


@cache
def schur_tableaux(lam: tuple[int, ...], n: int) -> Polynomial:
    """Schur polynomial as the generating function of column-strict Young
    tableaux: one monomial x^T per tableau."""
    lam = check_partition(lam)
    if not lam:
        raise ValueError("need a nonempty partition")
    terms: dict[tuple[int, ...], int] = {}
    for tab in tableaux.enumerate_cs_tableaux(lam, n):
        mono = [0] * (2 * n)
        for entry, mult in tab.entry_multiplicities().items():
            mono[entry - 1] = mult
        key = tuple(mono)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(n, terms)
