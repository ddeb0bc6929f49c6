"""Tilting-module labels and the multiplicity recursion for ``T(1)^N``.

The recursion here is written directly from the tensor product rules with
``T(1)`` and never touches the lattice model, so comparing it with
:func:`latpath.paths.count_paths` is a genuine second route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .errors import DomainError
from .lattice import allowed_steps, uq
from .paths import count_paths

__all__ = [
    "TiltingLabel",
    "Decomposition",
    "tensor_step",
    "decompose",
    "decompositions",
    "tilting_dim",
    "tilting_dim_formula",
    "dim_table",
    "dimension_total",
    "VerificationReport",
    "verify_against_paths",
]


@dataclass(frozen=True)
class TiltingLabel:
    """Highest weight ``k = l*k1 + k0`` with ``0 <= k0 <= l-1``."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"highest weight must be non-negative, got {self.k}")
        if self.l < 3:
            raise DomainError(f"modulus l must be >= 3, got {self.l}")

    @property
    def k1(self) -> int:
        return self.k // self.l

    @property
    def k0(self) -> int:
        return self.k % self.l

    @property
    def on_filter(self) -> bool:
        """True for the special family ``l*k1 - 1``."""
        return self.k0 == self.l - 1


@dataclass(frozen=True)
class Decomposition:
    """Sparse multiplicities of ``T(k)`` in ``T(1)^N``."""

    N: int
    mult: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.N < 0:
            raise DomainError(f"tensor power must be non-negative, got {self.N}")
        for k, m in self.mult.items():
            if k < 0 or k > self.N or (k - self.N) % 2:
                raise DomainError(f"T({k}) cannot occur in T(1)^{self.N}")
            if m < 1:
                raise DomainError(f"stored multiplicities must be positive, got {m} for T({k})")
        object.__setattr__(self, "mult", MappingProxyType(dict(sorted(self.mult.items()))))

    def __getitem__(self, k: int) -> int:
        return self.mult.get(k, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mult)


def tensor_step(dec: Decomposition, l: int) -> Decomposition:
    """Decomposition of ``T(1)^(N+1)`` from that of ``T(1)^N``."""
    if l < 3:
        raise DomainError(f"modulus l must be >= 3, got {l}")
    m = dec.__getitem__
    out = {}
    for k in range((dec.N + 1) % 2, dec.N + 2, 2):
        lab = TiltingLabel(k, l)
        if k == 0:
            v = m(1)
        elif lab.on_filter:
            # k = l*k1' - 1: pulled from below, twice from above, and by the long step
            v = m(k - 1) + 2 * m(k + 1) + m(k + 2 * l - 1)
        elif lab.k0 == l - 2:
            v = m(k - 1)
        else:
            v = m(k - 1) + m(k + 1)
        if v:
            out[k] = v
    return Decomposition(dec.N + 1, out)


@lru_cache(maxsize=32)
def decompositions(N: int, l: int) -> tuple[Decomposition, ...]:
    """Decompositions for every power ``0..N``."""
    if N < 0:
        raise DomainError(f"tensor power must be non-negative, got {N}")
    decs = [Decomposition(0, {0: 1})]
    for _ in range(N):
        decs.append(tensor_step(decs[-1], l))
    return tuple(decs)


def decompose(N: int, l: int) -> Decomposition:
    return decompositions(N, l)[N]


def tilting_dim_formula(k: int, l: int) -> int:
    if k < 0:
        raise DomainError(f"highest weight must be non-negative, got {k}")
    if k <= l - 1:
        return k + 1
    lab = TiltingLabel(k, l)
    if lab.on_filter:
        return k + 1
    return 2 * l * lab.k1


@lru_cache(maxsize=32)
def dim_table(l: int, k_max: int) -> tuple[int, ...]:
    """Dimensions ``d(0..k_max)`` by propagating ``2 d(x) = sum w d(target)`` from ``d(0) = 1``.

    Every non-rightward step lands strictly left of ``x``, so the conservation
    law at ``x`` solves for ``d(x+1)``.
    """
    model = uq(l)
    d = [1]
    for x in range(k_max):
        rest = 0
        w_right = None
        for s in allowed_steps(model, x):
            if s.to_x == x + 1:
                w_right = s.weight
            else:
                rest += s.weight * d[s.to_x]
        num = 2 * d[x] - rest
        if w_right is None or num % w_right:
            raise DomainError(f"conservation cannot be solved at x={x} for l={l}")
        d.append(num // w_right)
    return tuple(d)


def tilting_dim(k: int, l: int) -> int:
    if k < 0:
        raise DomainError(f"highest weight must be non-negative, got {k}")
    # round the cache key up so repeated queries share tables
    return dim_table(l, max(k, 4 * l) | 63)[k]


def dimension_total(dec: Decomposition, l: int) -> int:
    """``sum_k mult(k) * dim T(k)``; equals ``2^N`` for a true decomposition."""
    if not dec.mult:
        return 0
    table = dim_table(l, max(max(dec.mult), 4 * l) | 63)
    return sum(m * table[k] for k, m in dec.mult.items())


@dataclass(frozen=True)
class VerificationReport:
    l: int
    N_max: int
    checked: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_against_paths(N_max: int, l: int) -> VerificationReport:
    """Compare the recursion with path counts in the long-step model for all ``N <= N_max``.

    Mismatches are ``(N, k, recursion_value, path_count)`` tuples.
    """
    table = count_paths(uq(l), N_max)
    bad = []
    checked = 0
    for N, dec in enumerate(decompositions(N_max, l)):
        row = table.level(N)
        for k in sorted(set(row) | set(dec.mult)):
            checked += 1
            if dec[k] != row.get(k, 0):
                bad.append((N, k, dec[k], row.get(k, 0)))
    return VerificationReport(l, N_max, checked, tuple(bad))
