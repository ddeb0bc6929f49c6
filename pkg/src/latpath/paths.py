"""Exact path counting, brute-force enumeration and the region calculus.

Counting runs the forward recursion of the Bratteli diagram level by level:
the entry at ``(x, n+1)`` is the weighted sum of the entries at level ``n``
that have an allowed step into ``x``.  Counts are Python integers, so nothing
overflows however deep the table goes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, EnumerationGuardError, IncompleteSeedError
from .lattice import LatticePoint, ModelSpec, WeightedStep, allowed_steps, incoming_steps, strip_bounds

__all__ = [
    "CountTable",
    "count_paths",
    "weighted_count",
    "EnumeratedPath",
    "enumerate_paths",
    "enumeration_guard",
    "DEFAULT_ENUM_GUARD",
    "Region",
    "Translation",
    "reachable_points",
    "boundary",
    "check_congruent",
    "counts_from_boundary",
    "strip_region",
    "band_region",
]

DEFAULT_ENUM_GUARD = 20
ENUM_GUARD_ENV = "LATPATH_ENUM_GUARD"


@dataclass(frozen=True)
class CountTable:
    """Weighted path counts from the origin, one read-only mapping per level."""

    l: int | None
    model_kind: str
    levels: tuple

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> Mapping[int, int]:
        return self.levels[n]

    def get(self, M: int, N: int) -> int:
        if N < 0 or N > self.n_max:
            raise DomainError(f"level {N} outside table range 0..{self.n_max}")
        return self.levels[N].get(M, 0)

    def __getitem__(self, point) -> int:
        M, N = point
        return self.get(M, N)

    def points(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(M, N, count)`` for every populated entry, level by level."""
        for n, row in enumerate(self.levels):
            for x in sorted(row):
                yield x, n, row[x]


@lru_cache(maxsize=128)
def count_paths(model: ModelSpec, n_max: int) -> CountTable:
    """Weighted counts ``Z((0,0) -> (M,N))`` for every ``N <= n_max``."""
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    step_cache: dict[int, list[WeightedStep]] = {}
    row = {0: 1}
    levels = [MappingProxyType(dict(row))]
    for _ in range(n_max):
        nxt: dict[int, int] = {}
        for x, c in row.items():
            steps = step_cache.get(x)
            if steps is None:
                steps = step_cache[x] = allowed_steps(model, x)
            for s in steps:
                nxt[s.to_x] = nxt.get(s.to_x, 0) + s.weight * c
        row = {x: nxt[x] for x in sorted(nxt)}
        levels.append(MappingProxyType(row))
    return CountTable(model.l, model.kind, tuple(levels))


def weighted_count(model: ModelSpec, M: int, N: int) -> int:
    if N < 0:
        raise DomainError(f"level must be non-negative, got N={N}")
    if (M + N) % 2:
        raise DomainError(f"M + N must be even, got M={M}, N={N}")
    return count_paths(model, N).get(M, N)


# -- brute force ------------------------------------------------------------


@dataclass(frozen=True)
class EnumeratedPath:
    steps: tuple
    weight: int

    @property
    def word(self) -> str:
        """``R``/``L`` for elementary steps, ``J`` for a long jump."""
        return "".join("J" if s.is_long else ("R" if s.dx > 0 else "L") for s in self.steps)

    @property
    def positions(self) -> tuple[int, ...]:
        xs = [0]
        xs += [s.to_x for s in self.steps]
        return tuple(xs)


def enumeration_guard(guard: int | None = None) -> int:
    """Resolve the exhaustive-search cap: explicit argument, then env var, then default."""
    if guard is not None:
        return guard
    env = os.environ.get(ENUM_GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{ENUM_GUARD_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_ENUM_GUARD


def _walk(model: ModelSpec, N: int, target: int | None) -> Iterator[EnumeratedPath]:
    jump = model.max_left_jump()
    cache: dict[int, list[WeightedStep]] = {}

    def rec(x, depth, trail, weight):
        rem = N - depth
        if rem == 0:
            if target is None or x == target:
                yield EnumeratedPath(tuple(trail), weight)
            return
        if target is not None and (x + rem < target or x - rem * jump > target):
            return
        steps = cache.get(x)
        if steps is None:
            steps = cache[x] = allowed_steps(model, x)
        for s in steps:
            trail.append(s)
            yield from rec(s.to_x, depth + 1, trail, weight * s.weight)
            trail.pop()

    yield from rec(0, 0, [], 1)


def enumerate_paths(model: ModelSpec, M: int | None, N: int, *, guard: int | None = None) -> list[EnumeratedPath]:
    """Every restricted path from the origin to ``(M, N)`` with its weight.

    ``M=None`` lists the paths to every endpoint at level ``N``.  This is the
    independent oracle for :func:`count_paths`; it never consults the table.
    """
    cap = enumeration_guard(guard)
    if N > cap:
        raise EnumerationGuardError(f"N={N} exceeds the enumeration guard {cap}")
    if N < 0:
        raise DomainError(f"level must be non-negative, got N={N}")
    if M is not None and (M + N) % 2:
        raise DomainError(f"M + N must be even, got M={M}, N={N}")
    return list(_walk(model, N, M))


# -- regions ----------------------------------------------------------------


@dataclass(frozen=True)
class Translation:
    dx: int
    dn: int = 0

    def __post_init__(self):
        if (self.dx + self.dn) % 2:
            raise DomainError("a lattice translation needs dx + dn even")

    def __call__(self, p: LatticePoint) -> LatticePoint:
        return LatticePoint(p.x + self.dx, p.n + self.dn)

    def inverse(self) -> "Translation":
        return Translation(-self.dx, -self.dn)


@dataclass(frozen=True)
class Region:
    points: frozenset
    model: ModelSpec

    def __init__(self, points: Iterable, model: ModelSpec):
        pts = frozenset(p if isinstance(p, LatticePoint) else LatticePoint(*p) for p in points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "model", model)

    def __contains__(self, p) -> bool:
        return p in self.points

    def __len__(self) -> int:
        return len(self.points)

    def translate(self, t: Translation, model: ModelSpec | None = None) -> "Region":
        return Region((t(p) for p in self.points), model or self.model)

    def ordered(self) -> list[LatticePoint]:
        return sorted(self.points, key=lambda p: (p.n, p.x))


def strip_region(model: ModelSpec, j: int, n_max: int) -> Region:
    """Strip ``j`` (``(j-1)l - 1 <= M <= jl - 2``) cut off at level ``n_max``."""
    if model.l is None:
        raise DomainError("strips need a model with a modulus l")
    lo, hi = strip_bounds(j, model.l)
    return band_region(model, lo, hi, 0, n_max)


def band_region(model: ModelSpec, x_lo: int, x_hi: int, n_lo: int, n_hi: int, *, diagonal=None) -> Region:
    """Lattice points with ``x_lo <= x <= x_hi`` and ``n_lo <= n <= n_hi``.

    ``diagonal=(a, b)`` further keeps only points with ``x + a <= n <= x + b``.
    """
    pts = []
    for n in range(max(n_lo, 0), n_hi + 1):
        for x in range(x_lo, x_hi + 1):
            if (x + n) % 2:
                continue
            if diagonal is not None and not (x + diagonal[0] <= n <= x + diagonal[1]):
                continue
            pts.append(LatticePoint(x, n))
    return Region(pts, model)


@lru_cache(maxsize=64)
def reachable_points(model: ModelSpec, n_max: int) -> frozenset:
    """All lattice points reachable from the origin within ``n_max`` steps."""
    seen = {LatticePoint(0, 0)}
    front = {0}
    for n in range(n_max):
        nxt = set()
        for x in front:
            nxt.update(s.to_x for s in allowed_steps(model, x))
        seen.update(LatticePoint(x, n + 1) for x in nxt)
        front = nxt
    return frozenset(seen)


def _sources(model: ModelSpec, p: LatticePoint) -> list[tuple[LatticePoint, int]]:
    if p.n == 0:
        return []
    return [(LatticePoint(s.from_x, p.n - 1), s.weight) for s in incoming_steps(model, p.x)]


def boundary(region: Region) -> frozenset:
    """Points of the region entered by an allowed step from a reachable point outside it.

    Only predecessors reachable from the origin count: an unreachable
    predecessor carries weight zero and cannot feed the recursion.
    """
    if not region.points:
        return frozenset()
    top = max(p.n for p in region.points)
    reach = reachable_points(region.model, top)
    out = set()
    for p in region.points:
        for q, _ in _sources(region.model, p):
            if q not in region.points and q in reach:
                out.add(p)
                break
    return frozenset(out)


def _inner_steps(model: ModelSpec, points: frozenset, p: LatticePoint) -> set[tuple[int, int]]:
    """``(dx, weight)`` of the steps from ``p`` that stay inside ``points``."""
    if model.wall is not None and p.x < model.wall:
        return set()
    out = set()
    for s in allowed_steps(model, p.x):
        q = LatticePoint(s.to_x, p.n + 1)
        if q in points:
            out.add((s.dx, s.weight))
    return out


def check_congruent(a: Region, b: Region, t: Translation) -> bool:
    """Whether ``t`` carries region ``a`` onto ``b`` with a weight-preserving bijection of inner steps."""
    if frozenset(t(p) for p in a.points) != b.points:
        return False
    for p in a.points:
        if _inner_steps(a.model, a.points, p) != _inner_steps(b.model, b.points, t(p)):
            return False
    return True


def counts_from_boundary(region: Region, boundary_values: Mapping) -> dict[LatticePoint, int]:
    """Rebuild every count in the region from its boundary values alone."""
    bd = boundary(region)
    seeds = {(p if isinstance(p, LatticePoint) else LatticePoint(*p)): v for p, v in boundary_values.items()}
    missing = bd - seeds.keys()
    if missing:
        raise IncompleteSeedError(f"no seed for boundary points {sorted(missing)[:5]}")
    extra = seeds.keys() - bd
    if extra:
        raise DomainError(f"seed given for non-boundary points {sorted(extra)[:5]}")
    origin = LatticePoint(0, 0)
    out: dict[LatticePoint, int] = {}
    for p in region.ordered():
        if p in bd:
            out[p] = seeds[p]
        elif p == origin:
            out[p] = 1
        else:
            out[p] = sum(w * out[q] for q, w in _sources(region.model, p) if q in region.points)
    return out
