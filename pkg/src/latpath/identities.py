"""Binomial identities behind the main counting theorem and their WZ certificates.

Each ``identity_*`` function returns ``sum - expected``, so a correct identity
yields 0.  WZ certificates are evaluated in :class:`fractions.Fraction`; a
vanishing denominator raises :class:`~latpath.errors.WZPoleError` naming the
factor instead of guessing a limit.
"""

from __future__ import annotations

from fractions import Fraction

from .closed_form import ballot_f, binom
from .errors import DomainError, WZPoleError

__all__ = [
    "identity_q",
    "identity_onee",
    "identity_twoo",
    "wz_summand",
    "wz_certificate",
    "wz_poles",
    "wz_certificate_check",
    "CERTIFICATES",
]

CERTIFICATES = ("printed", "corrected")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def identity_q(n: int, k: int) -> int:
    return sum(
        _sign(j) * ballot_f(k - 1 + 2 * j, k - 1) * binom(j + n + k - 2, 2 * j + k - 2)
        for j in range(n + 1)
    )


def identity_onee(n: int, k: int) -> int:
    s = sum(_sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j) for j in range(n + 1))
    return s - 2 * _sign(n)


def identity_twoo(n: int, k: int) -> int:
    s = sum(_sign(j) * binom(j + n + k - 2, 2 * j + k - 2) * binom(2 * j + k - 1, j - 1) for j in range(n + 1))
    return s - 2 * _sign(n)


def _check_which(which: str) -> None:
    if which not in ("onee", "twoo"):
        raise DomainError(f"unknown identity {which!r}; expected 'onee' or 'twoo'")


def _binoms(which: str, n: int, j: int, k: int) -> int:
    second = binom(2 * j + k - 1, j) if which == "onee" else binom(2 * j + k - 1, j - 1)
    return binom(j + n + k - 2, 2 * j + k - 2) * second


def wz_summand(which: str, n: int, j: int, k: int) -> Fraction:
    """``F(n, j)``: the summand normalised so that ``sum_j F(n, j) = 1``."""
    _check_which(which)
    return Fraction(_sign(j + n), 2) * _binoms(which, n, j, k)


def _factors(which: str, n: int, j: int, k: int) -> list[tuple[str, int]]:
    quad = ("k^2+n(n-1)+k(2n-1)", k * k + n * (n - 1) + k * (2 * n - 1))
    if which == "onee":
        nn = ("n", n), ("n+1", n + 1)
    else:
        nn = ("n", n), ("n-1", n - 1)
    return [*nn, ("j-n-1", j - n - 1), ("k+2j-1", k + 2 * j - 1), quad]


def wz_poles(which: str, n: int, j: int, k: int) -> list[str]:
    """Names of the denominator factors of ``G(n, j)`` that vanish at this point."""
    _check_which(which)
    return [name for name, v in _factors(which, n, j, k) if v == 0]


def wz_certificate(which: str, n: int, j: int, k: int, certificate: str = "printed") -> Fraction:
    """``G(n, j)`` of the WZ pair for ``which``.

    ``certificate="printed"`` is the rational certificate exactly as published.
    ``"corrected"`` rescales the ``twoo`` certificate by ``(n+k-1)/(n+k+1)``,
    the factor that makes its telescoping relation hold; the ``onee``
    certificate is already correct and is returned unchanged.
    """
    _check_which(which)
    if certificate not in CERTIFICATES:
        raise DomainError(f"certificate must be one of {CERTIFICATES}, got {certificate!r}")
    den = 2
    for name, v in _factors(which, n, j, k):
        if v == 0:
            raise WZPoleError(name, n, j, k)
        den *= v
    if which == "onee":
        poly = 1 + k * k * n - 3 * n * n + k * (n * n - 3 * n - 1) + j * (2 * n * n + 2 * k * n + k - 1)
        num = j * (j + k - 1) * (k + 2 * n) * poly
    else:
        poly = 1 + k * k * (n - 1) + k * (n * n - 3 * n) - 3 * n * n + j * (2 * n * n + 2 * k * n - k - 1)
        num = (j - 1) * (j + k) * (k + 2 * n) * poly
    g = Fraction(_sign(j + n) * num, den) * _binoms(which, n, j, k)
    if certificate == "corrected" and which == "twoo":
        g *= Fraction(n + k - 1, n + k + 1)
    return g


def wz_certificate_check(which: str, n: int, j: int, k: int, certificate: str = "printed") -> Fraction:
    """Residual ``-F(n+1,j) + F(n,j) - G(n,j+1) + G(n,j)``; zero when the pair telescopes."""
    return (
        -wz_summand(which, n + 1, j, k)
        + wz_summand(which, n, j, k)
        - wz_certificate(which, n, j + 1, k, certificate)
        + wz_certificate(which, n, j, k, certificate)
    )
