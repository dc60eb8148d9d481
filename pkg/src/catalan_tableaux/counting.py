"""Exact counts of iterates: structure Catalan numbers and their relatives.

Every count is a Python ``int``; floating point appears only in
:func:`catalan_asymptotic_ratio`, and only for the final division.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .terms import Signature


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be >= 0")
    return math.comb(n, k)


def composition_count(arity: int, n: int) -> int:
    """Number of solutions of x_1 + ... + x_arity = n in nonnegative integers."""
    if arity < 1 or n < 0:
        raise ValueError("need arity >= 1 and n >= 0")
    return math.comb(arity + n - 1, n)


def convolve(a: Sequence[int], b: Sequence[int], degree: int) -> list[int]:
    """Product of two power series truncated after ``degree``."""
    out = [0] * (degree + 1)
    for i, ai in enumerate(a[: degree + 1]):
        if ai:
            for j, bj in enumerate(b[: degree + 1 - i]):
                out[i + j] += ai * bj
    return out


def series_power(a: Sequence[int], exponent: int, degree: int) -> list[int]:
    result = [1] + [0] * degree
    for _ in range(exponent):
        result = convolve(result, a, degree)
    return result


@lru_cache(maxsize=64)
def _structure_catalan(arities: tuple[int, ...], N: int) -> tuple[int, ...]:
    values = [1]
    for n in range(N):
        # S_{n+1} = sum over ops of the arity-fold convolution of S at degree n
        total = 0
        for a in arities:
            total += series_power(values, a, n)[n]
        values.append(total)
    return tuple(values)


def structure_catalan(sig: Signature, N: int) -> list[int]:
    """Counts S_0..S_N of iterates of each order over ``sig``.

    >>> from catalan_tableaux.terms import make_signature
    >>> structure_catalan(make_signature([("V", 2), ("W", 2)]), 5)
    [1, 2, 8, 40, 224, 1344]
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    return list(_structure_catalan(sig.arities, N))


def classical_catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def fuss_catalan(arity: int, n: int) -> int:
    """Number of plane trees with ``n`` internal nodes, each of out-degree ``arity``."""
    if arity < 2 or n < 0:
        raise ValueError("need arity >= 2 and n >= 0")
    return math.comb(arity * n, n) // ((arity - 1) * n + 1)


def lambda_binary_closed(lam: int, n: int) -> int:
    """Closed form lam**n * C_n for ``lam`` binary operations."""
    if lam < 1 or n < 0:
        raise ValueError("need lam >= 1 and n >= 0")
    return lam**n * classical_catalan(n)


def functional_equation_residual(sig: Signature, N: int) -> list[int]:
    """Coefficients 0..N of phi - 1 - t * sum_i phi**arity_i; all zero when phi is right."""
    phi = structure_catalan(sig, N)
    rhs = [0] * (N + 1)
    for a in sig.arities:
        power = series_power(phi, a, N)
        for d in range(N):
            rhs[d + 1] += power[d]
    residual = [p - r for p, r in zip(phi, rhs)]
    residual[0] -= 1
    return residual


def catalan_asymptotic_ratio(n: int) -> float:
    """C_n divided by 4**n / (sqrt(pi) * n**1.5), evaluated in log space."""
    if n < 1:
        raise ValueError("n must be >= 1")
    log_exact = math.log(classical_catalan(n))
    log_approx = n * math.log(4) - 0.5 * math.log(math.pi) - 1.5 * math.log(n)
    return math.exp(log_exact - log_approx)
