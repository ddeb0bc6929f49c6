"""Parity lattice, weighted steps and the restriction kinds that shape a model.

A model is a step family on the lattice ``{(x, n) : x + n even}`` together with
a set of restrictions.  Every path starts at ``(0, 0)`` and each step raises the
level ``n`` by one.  The step set available at a position never depends on the
level, so :func:`allowed_steps` takes only ``x``.

Periodic families (filters at ``n*l - 1`` and long steps ``S(k)``) are kept
symbolic and resolved arithmetically on demand, so a model with infinitely many
restrictions is still a small immutable value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import DomainError

__all__ = [
    "LatticePoint",
    "WeightedStep",
    "WallLeft",
    "Filter",
    "LongStepSource",
    "PeriodicFilters",
    "LongStepFamily",
    "ModelSpec",
    "MODEL_KINDS",
    "unrestricted",
    "wall_only",
    "single_filter",
    "auxiliary",
    "uq",
    "two_filter",
    "periodic_with_long_steps",
    "allowed_steps",
    "incoming_steps",
    "strip_index",
    "strip_bounds",
]

MODEL_KINDS = ("unrestricted", "wall_only", "single_filter", "auxiliary", "uq", "custom")


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"level must be non-negative, got n={self.n}")
        if (self.x + self.n) % 2:
            raise DomainError(f"({self.x}, {self.n}) is off the parity lattice")

    def __iter__(self):
        yield self.x
        yield self.n


@dataclass(frozen=True)
class WeightedStep:
    from_x: int
    to_x: int
    weight: int = 1

    def __post_init__(self):
        if self.weight < 1:
            raise DomainError(f"step weight must be >= 1, got {self.weight}")
        if abs(self.to_x - self.from_x) % 2 == 0:
            raise DomainError("a step must change x by an odd amount")

    @property
    def dx(self) -> int:
        return self.to_x - self.from_x

    @property
    def is_long(self) -> bool:
        return abs(self.dx) > 1


# -- restrictions -----------------------------------------------------------


@dataclass(frozen=True)
class WallLeft:
    """Only the rightward step is allowed at ``x = d``; positions left of it are unreachable."""

    d: int = 0


@dataclass(frozen=True)
class Filter:
    """Filter of type ``filter_type`` at ``x = d``.

    At ``d`` only the right step survives (weight ``filter_type``); at ``d + 1``
    the right step has weight 1 and the step back to ``d`` has weight 2.
    """

    d: int
    filter_type: int = 1

    def __post_init__(self):
        if self.filter_type < 1:
            raise DomainError(f"filter type must be positive, got {self.filter_type}")


@dataclass(frozen=True)
class LongStepSource:
    """The long-step sequence ``S(k)``: from ``x = l(k+2) - 2`` to ``x = lk - 1``."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"long steps S(k) need k >= 1, got k={self.k}")
        if self.l < 3:
            raise DomainError(f"modulus l must be >= 3, got {self.l}")

    @property
    def source(self) -> int:
        return self.l * (self.k + 2) - 2

    @property
    def target(self) -> int:
        return self.l * self.k - 1


@dataclass(frozen=True)
class PeriodicFilters:
    """Filters at ``x = n*l - 1`` for every ``n >= start``."""

    l: int
    start: int = 1
    filter_type: int = 1

    def __post_init__(self):
        if self.l < 3:
            raise DomainError(f"modulus l must be >= 3, got {self.l}")
        if self.start < 1:
            raise DomainError(f"periodic filters start at n >= 1, got {self.start}")

    def contains(self, x: int) -> bool:
        return x >= self.start * self.l - 1 and (x + 1) % self.l == 0

    @property
    def first(self) -> int:
        return self.start * self.l - 1


@dataclass(frozen=True)
class LongStepFamily:
    """Every ``S(k)`` with ``k >= start``."""

    l: int
    start: int = 1

    def __post_init__(self):
        if self.l < 3:
            raise DomainError(f"modulus l must be >= 3, got {self.l}")
        if self.start < 1:
            raise DomainError(f"long-step families start at k >= 1, got {self.start}")

    def source_k(self, x: int) -> int | None:
        """Return ``k`` if ``x`` is the source of ``S(k)`` in this family."""
        if (x + 2) % self.l:
            return None
        k = (x + 2) // self.l - 2
        return k if k >= self.start else None

    def target_k(self, x: int) -> int | None:
        """Return ``k`` if ``x`` is the target of ``S(k)`` in this family."""
        if (x + 1) % self.l:
            return None
        k = (x + 1) // self.l
        return k if k >= self.start else None


Restriction = Union[WallLeft, Filter, LongStepSource, PeriodicFilters, LongStepFamily]


@dataclass(frozen=True)
class ModelSpec:
    """A complete lattice path model: modulus, restrictions and a kind tag."""

    kind: str
    restrictions: tuple = ()
    l: int | None = None
    _walls: tuple = field(init=False, repr=False, compare=False)
    _filters: dict = field(init=False, repr=False, compare=False)
    _periodic: tuple = field(init=False, repr=False, compare=False)
    _long: tuple = field(init=False, repr=False, compare=False)
    _families: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise DomainError(f"unknown model kind {self.kind!r}")
        if self.l is not None and self.l < 3:
            raise DomainError(f"modulus l must be >= 3, got {self.l}")
        rs = tuple(self.restrictions)
        object.__setattr__(self, "restrictions", rs)
        walls = tuple(r for r in rs if isinstance(r, WallLeft))
        filters = [r for r in rs if isinstance(r, Filter)]
        periodic = tuple(r for r in rs if isinstance(r, PeriodicFilters))
        long_steps = tuple(r for r in rs if isinstance(r, LongStepSource))
        families = tuple(r for r in rs if isinstance(r, LongStepFamily))
        if len(walls) > 1:
            raise DomainError("at most one left wall is supported")
        if len(periodic) > 1:
            raise DomainError("at most one periodic filter family is supported")
        positions = [f.d for f in filters]
        if len(set(positions)) != len(positions):
            raise DomainError("filter positions must be pairwise distinct")
        # A second filter at d+1 would make the step set at d+1 ambiguous.
        if any(abs(a - b) < 2 for i, a in enumerate(positions) for b in positions[i + 1:]):
            raise DomainError("filters must be at least two columns apart")
        for f in filters:
            for p in periodic:
                if any(p.contains(f.d + e) for e in (-1, 0, 1)):
                    raise DomainError(f"explicit filter at {f.d} collides with the periodic family")
        if walls:
            wall = walls[0].d
            lefts = positions + [p.first for p in periodic]
            if any(wall >= d for d in lefts):
                raise DomainError("the wall must lie strictly left of all filters")
        object.__setattr__(self, "_walls", walls)
        object.__setattr__(self, "_filters", {f.d: f.filter_type for f in filters})
        object.__setattr__(self, "_periodic", periodic)
        object.__setattr__(self, "_long", long_steps)
        object.__setattr__(self, "_families", families)

    @property
    def wall(self) -> int | None:
        return self._walls[0].d if self._walls else None

    def filter_type_at(self, x: int) -> int | None:
        if x in self._filters:
            return self._filters[x]
        for p in self._periodic:
            if p.contains(x):
                return p.filter_type
        return None

    def long_targets(self, x: int) -> list[int]:
        """Targets of long steps leaving ``x``."""
        out = [s.target for s in self._long if s.source == x]
        for fam in self._families:
            k = fam.source_k(x)
            if k is not None:
                out.append(fam.l * k - 1)
        return sorted(set(out), reverse=True)

    def long_sources(self, x: int) -> list[int]:
        """Sources of long steps landing on ``x``."""
        out = [s.source for s in self._long if s.target == x]
        for fam in self._families:
            k = fam.target_k(x)
            if k is not None:
                out.append(fam.l * (k + 2) - 2)
        return sorted(set(out))

    @property
    def has_long_steps(self) -> bool:
        return bool(self._long or self._families)

    def max_left_jump(self) -> int:
        """Largest leftward displacement of any single step."""
        jumps = [1]
        jumps += [s.source - s.target for s in self._long]
        jumps += [2 * f.l - 1 for f in self._families]
        return max(jumps)


# -- constructors -----------------------------------------------------------


def unrestricted(l: int | None = None) -> ModelSpec:
    return ModelSpec("unrestricted", (), l)


def wall_only(a: int = 0, l: int | None = None) -> ModelSpec:
    if a > 0:
        raise DomainError(f"left wall must sit at a <= 0, got {a}")
    return ModelSpec("wall_only", (WallLeft(a),), l)


def single_filter(d: int, filter_type: int = 1, l: int | None = None) -> ModelSpec:
    if d <= 0:
        raise DomainError(f"filter position must be positive, got {d}")
    return ModelSpec("single_filter", (Filter(d, filter_type),), l)


def auxiliary(l: int) -> ModelSpec:
    """Wall at 0 and type-1 filters at every ``n*l - 1``."""
    return ModelSpec("auxiliary", (WallLeft(0), PeriodicFilters(l)), l)


def uq(l: int) -> ModelSpec:
    """The auxiliary model with every long-step family ``S(k)``, ``k >= 1``."""
    return ModelSpec("uq", (WallLeft(0), PeriodicFilters(l), LongStepFamily(l)), l)


def two_filter(l: int, k: int, long_steps: bool = False) -> ModelSpec:
    """Filters at ``lk - 1`` and ``l(k+2) - 1`` only, optionally with ``S(k)``."""
    rs: list = [Filter(l * k - 1), Filter(l * (k + 2) - 1)]
    if long_steps:
        rs.append(LongStepSource(k, l))
    return ModelSpec("custom", tuple(rs), l)


def periodic_with_long_steps(l: int, ks: Iterable[int] = (), first_filter: int = 1) -> ModelSpec:
    """Wall at 0, filters at ``n*l - 1`` for ``n >= first_filter`` and the listed ``S(k)``."""
    rs: list = [WallLeft(0), PeriodicFilters(l, first_filter)]
    rs += [LongStepSource(k, l) for k in sorted(set(ks))]
    return ModelSpec("custom", tuple(rs), l)


# -- step resolution --------------------------------------------------------


def _elementary(model: ModelSpec, x: int) -> list[WeightedStep]:
    if model.wall is not None and x == model.wall:
        return [WeightedStep(x, x + 1, 1)]
    ftype = model.filter_type_at(x)
    if ftype is not None:
        return [WeightedStep(x, x + 1, ftype)]
    if model.filter_type_at(x - 1) is not None:
        return [WeightedStep(x, x + 1, 1), WeightedStep(x, x - 1, 2)]
    return [WeightedStep(x, x + 1, 1), WeightedStep(x, x - 1, 1)]


def allowed_steps(model: ModelSpec, x: int) -> list[WeightedStep]:
    """Outgoing weighted steps at position ``x``.

    The elementary steps are resolved first (wall, then filter line, then the
    column just right of a filter), and any long steps sourced at ``x`` are
    appended.

    >>> [(s.to_x, s.weight) for s in allowed_steps(uq(3), 7)]
    [(8, 1), (6, 1), (2, 1)]
    """
    if model.wall is not None and x < model.wall:
        raise DomainError(f"x={x} lies left of the wall at {model.wall}")
    steps = _elementary(model, x)
    steps += [WeightedStep(x, t, 1) for t in model.long_targets(x)]
    return steps


def incoming_steps(model: ModelSpec, x: int) -> list[WeightedStep]:
    """Every allowed step whose target is ``x``."""
    out = []
    for src in (x - 1, x + 1, *model.long_sources(x)):
        if model.wall is not None and src < model.wall:
            continue
        out += [s for s in allowed_steps(model, src) if s.to_x == x]
    return out


def strip_index(M: int, l: int) -> int:
    """Strip number ``j`` with ``(j-1)l - 1 <= M <= jl - 2``."""
    if M < 0:
        raise DomainError(f"strip index needs M >= 0, got {M}")
    if l < 3:
        raise DomainError(f"modulus l must be >= 3, got {l}")
    return (M + 1) // l + 1


def strip_bounds(j: int, l: int) -> tuple[int, int]:
    """Inclusive x-range of strip ``j``."""
    return (j - 1) * l - 1, j * l - 2
