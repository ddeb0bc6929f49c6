"""Closed-form weighted path counts.

Every function here is exact integer arithmetic over binomial coefficients
with the combinatorial zero convention: ``binom(n, r) = 0`` whenever
``r < 0``, ``r > n`` or ``n < 0``.  Floor-limited sums whose upper limit is
negative are empty.
"""

from __future__ import annotations

from math import comb

from .errors import DomainError, UnsupportedCaseError
from .lattice import strip_index

__all__ = [
    "binom",
    "ballot_f",
    "catalan_coefficient",
    "unrestricted_count",
    "wall_count",
    "filter_count",
    "poly_p",
    "poly_q",
    "aux_strip_multiplicity",
    "uq_multiplicity",
    "strip_sum_f1",
]


def binom(n: int, r: int) -> int:
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def _half(N: int, M: int) -> int:
    if (N - M) % 2:
        raise DomainError(f"N - M must be even, got N={N}, M={M}")
    return (N - M) // 2


def ballot_f(N: int, M: int) -> int:
    """``F_M^(N) = C(N, (N-M)/2) - C(N, (N-M)/2 - 1)``; negative for reflected ``M``."""
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    h = _half(N, M)
    return binom(N, h) - binom(N, h - 1)


def catalan_coefficient(k: int, j: int) -> int:
    """Coefficient ``F^(k-1+2j)_(k-1)`` of the j-th term in the strip-sum formula."""
    return ballot_f(k - 1 + 2 * j, k - 1)


def unrestricted_count(M: int, N: int) -> int:
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    return binom(N, _half(N, M))


def wall_count(M: int, N: int, a: int = 0) -> int:
    """Paths from the origin with a left wall at ``a <= 0``."""
    if a > 0:
        raise DomainError(f"wall position must be <= 0, got {a}")
    if M < a:
        raise DomainError(f"endpoint M={M} lies left of the wall at {a}")
    h = _half(N, M)
    return binom(N, h) - binom(N, h + a - 1)


def filter_count(M: int, N: int, d: int, n: int = 1) -> int:
    """Weighted paths past a single filter of type ``n`` at ``x = d > 0``.

    Only ``M < d`` and ``M > d`` are covered; the filter line itself is not.
    """
    if d <= 0:
        raise DomainError(f"filter position must be positive, got {d}")
    if n < 1:
        raise DomainError(f"filter type must be positive, got {n}")
    h = _half(N, M)
    if M < d:
        return binom(N, h) - binom(N, h + d)
    if M > d:
        return n * binom(N, h)
    raise UnsupportedCaseError("no closed form on the filter line M = d")


def poly_p(j: int, k: int) -> int:
    if j < 2:
        raise UnsupportedCaseError(f"P_j is only used for strips j >= 2, got j={j}")
    return sum(binom(j - 2, 2 * i) * binom(k - i + j - 2, j - 2) for i in range(j // 2 + 1))


def poly_q(j: int, k: int) -> int:
    if j < 2:
        raise UnsupportedCaseError(f"Q_j is only used for strips j >= 2, got j={j}")
    return sum(binom(j - 2, 2 * i + 1) * binom(k - i + j - 2, j - 2) for i in range(j // 2 + 1))


def _check_target(l: int, M: int, N: int) -> None:
    if l < 3:
        raise DomainError(f"modulus l must be >= 3, got {l}")
    if M < 0:
        raise DomainError(f"M must be non-negative, got {M}")
    if (M + N) % 2:
        raise DomainError(f"M + N must be even, got M={M}, N={N}")
    if N < M:
        raise DomainError(f"(M={M}, N={N}) lies outside the reachable cone")


def aux_strip_multiplicity(l: int, M: int, N: int) -> int:
    """Weighted count at ``(M, N)`` in the auxiliary model (wall plus type-1 filters).

    Strips ``j >= 2`` use the four alternating sums with ``P_j``/``Q_j``
    coefficients.  The first strip is not touched by long steps, so it is
    delegated to :func:`uq_multiplicity`.
    """
    _check_target(l, M, N)
    j = strip_index(M, l)
    if j == 1:
        return uq_multiplicity(l, M, N)
    total = 0
    for k in range((N - (j - 1) * l + 1) // (4 * l) + 1):
        total += poly_p(j, k) * ballot_f(N, M + 4 * k * l)
    for k in range((N - j * l) // (4 * l) + 1):
        total += poly_p(j, k) * ballot_f(N, M - 4 * k * l - 2 * j * l)
    for k in range((N - (j + 1) * l + 1) // (4 * l) + 1):
        total -= poly_q(j, k) * ballot_f(N, M + 2 * l + 4 * k * l)
    for k in range((N - j * l - 2 * l) // (4 * l) + 1):
        total -= poly_q(j, k) * ballot_f(N, M - 4 * k * l - 2 * (j + 1) * l)
    return total


def uq_multiplicity(l: int, M: int, N: int) -> int:
    """Multiplicity of ``T(M)`` in ``T(1)^N``: weighted count in the model with long steps."""
    _check_target(l, M, N)
    k = strip_index(M, l) - 1
    total = ballot_f(N, M)
    # floor(x + 1/2) with x = (N - lk + 1) / 2l
    for j in range(1, (N - l * k + 1 + l) // (2 * l) + 1):
        total += ballot_f(N, M - 2 * l * k - 2 * j * l)
    for j in range(1, (N - l * k + 1) // (2 * l) + 1):
        total += ballot_f(N, M + 2 * j * l)
    return total


def strip_sum_f1(l: int, k: int, M: int, N: int) -> int:
    """Strip ``k+1`` of the long-step model as a Catalan-weighted sum of auxiliary counts."""
    _check_target(l, M, N)
    if k < 1:
        raise DomainError(f"strip-sum formula needs k >= 1, got {k}")
    if strip_index(M, l) != k + 1:
        raise DomainError(f"M={M} is not in strip {k + 1} for l={l}")
    total = 0
    for j in range((N - l * k + 1) // (2 * l) + 1):
        shifted = M + 2 * j * l
        if shifted > N:
            break
        total += catalan_coefficient(k, j) * aux_strip_multiplicity(l, shifted, N)
    return total
