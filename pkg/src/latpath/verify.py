"""Cross-validation suites: every route against every other, on finite grids.

Each suite returns a :class:`SuiteResult`.  The first mismatch is kept as a
counterexample; the suite keeps counting checks so the report shows how much
ground was covered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import lattice as lat
from .closed_form import aux_strip_multiplicity, ballot_f, catalan_coefficient, strip_sum_f1, uq_multiplicity
from .identities import identity_onee, identity_q, identity_twoo, wz_certificate_check, wz_poles
from .paths import (
    Region,
    Translation,
    band_region,
    boundary,
    check_congruent,
    count_paths,
    counts_from_boundary,
    enumerate_paths,
    strip_region,
)
from .tilting import decompositions, dimension_total

__all__ = [
    "SuiteResult",
    "SUITES",
    "DEFAULT_N_MAX",
    "catalan_numbers",
    "run_suite",
    "suite_closed_form",
    "suite_f1",
    "suite_catalan",
    "suite_identities",
    "suite_wz",
    "suite_longstep",
    "suite_oracle",
    "suite_congruence",
    "suite_tilting",
]


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    skipped: int = 0
    counterexample: dict | None = None
    failures: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def expect(self, expected, got, **where) -> bool:
        self.checks += 1
        if expected == got:
            return True
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = {"suite": self.name, **where, "expected": expected, "got": got}
        return False

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checks": self.checks, "failures": self.failures}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.counterexample is not None:
            out["counterexample"] = {k: _jsonable(v) for k, v in self.counterexample.items()}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, set):
        return sorted(v)
    return str(v)


def _grid(n_max: int):
    for N in range(n_max + 1):
        for M in range(N % 2, N + 1, 2):
            yield M, N


def catalan_numbers(count: int) -> list[int]:
    """First ``count`` Catalan numbers from ``C_{n+1} = sum C_i C_{n-i}``."""
    cat = [1]
    while len(cat) < count:
        n = len(cat) - 1
        cat.append(sum(cat[i] * cat[n - i] for i in range(n + 1)))
    return cat[:count]


def suite_closed_form(ls: Sequence[int] = (3, 5, 7), n_max: int = 40) -> SuiteResult:
    res = SuiteResult("closed-form")
    for l in ls:
        uq_t = count_paths(lat.uq(l), n_max)
        aux_t = count_paths(lat.auxiliary(l), n_max)
        for M, N in _grid(n_max):
            res.expect(uq_t.get(M, N), uq_multiplicity(l, M, N), l=l, M=M, N=N, route="uq")
            res.expect(aux_t.get(M, N), aux_strip_multiplicity(l, M, N), l=l, M=M, N=N, route="auxiliary")
    return res


def suite_f1(ls: Sequence[int] = (3, 5, 7), n_max: int = 40) -> SuiteResult:
    res = SuiteResult("f1")
    for l in ls:
        for M, N in _grid(n_max):
            k = lat.strip_index(M, l) - 1
            if k < 1:
                continue
            res.expect(uq_multiplicity(l, M, N), strip_sum_f1(l, k, M, N), l=l, M=M, N=N)
    sub = suite_catalan()
    res.checks += sub.checks
    res.failures += sub.failures
    res.counterexample = res.counterexample or sub.counterexample
    return res


def suite_catalan(j_max: int = 15) -> SuiteResult:
    res = SuiteResult("catalan")
    for j, c in enumerate(catalan_numbers(j_max + 1)):
        res.expect(c, ballot_f(2 * j, 0), j=j)
        res.expect(c, catalan_coefficient(1, j), j=j, route="coefficient")
    return res


def suite_identities(n_max: int = 30, k_max: int = 20) -> SuiteResult:
    res = SuiteResult("identities")
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            res.expect(0, identity_onee(n, k), identity="onee", n=n, k=k)
            if n >= 2:
                res.expect(0, identity_twoo(n, k), identity="twoo", n=n, k=k)
                res.expect(0, identity_q(n, k), identity="q", n=n, k=k)
    return res


def suite_wz(n_max: int = 15, k_max: int = 10, certificate: str = "printed", which=("onee", "twoo")) -> SuiteResult:
    """Telescoping residuals on ``2 <= n <= n_max``, ``0 <= j <= n``, ``1 <= k <= k_max``.

    Points where ``G(n, j)`` or ``G(n, j+1)`` has a vanishing denominator
    factor are declared poles and skipped.
    """
    res = SuiteResult("wz")
    for w in which:
        for n in range(2, n_max + 1):
            for j in range(n + 1):
                for k in range(1, k_max + 1):
                    if wz_poles(w, n, j, k) or wz_poles(w, n, j + 1, k):
                        res.skipped += 1
                        continue
                    res.expect(0, wz_certificate_check(w, n, j, k, certificate), identity=w, n=n, j=j, k=k)
    res.notes.append(f"certificate={certificate}")
    return res


def _longstep_ranges(l: int, k: int):
    lo, hi = l * k - 1, l * (k + 2) - 2
    return lo, hi, l * (k + 4) - 2


def suite_longstep(ls: Sequence[int] = (3, 5), ks: Sequence[int] = (1, 2), n_max: int = 40) -> SuiteResult:
    """Long-step lemma regions I and II, its periodic-filter variant, and the strip sums."""
    res = SuiteResult("longstep")
    for l in ls:
        for k in ks:
            lo, hi, top = _longstep_ranges(l, k)
            depth = max(top, hi + 4 * l)
            plain = count_paths(lat.two_filter(l, k), depth)
            withs = count_paths(lat.two_filter(l, k, long_steps=True), depth)
            for M in range(lo, hi + 1):
                for N in range(M, M + 2 * l - 1, 2):
                    res.expect(plain.get(M, N), withs.get(M, N), l=l, k=k, M=M, N=N, region="I")
                for N in range(M + 2 * l, top + 1, 2):
                    res.expect(plain.get(M, N) + plain.get(M + 2 * l, N), withs.get(M, N),
                               l=l, k=k, M=M, N=N, region="II")
            for first in range(1, k + 1):
                plain = count_paths(lat.periodic_with_long_steps(l, (), first), depth)
                withs = count_paths(lat.periodic_with_long_steps(l, (k,), first), depth)
                for M in range(lo, hi + 1):
                    for N in range(M, M + 2 * l - 1, 2):
                        res.expect(plain.get(M, N), withs.get(M, N), l=l, k=k, M=M, N=N, region="I-periodic")
                    upper = M + 4 * l - 2 if M <= l * (k + 1) - 2 else top
                    for N in range(M + 2 * l, min(upper, depth) + 1, 2):
                        res.expect(plain.get(M, N) + plain.get(M + 2 * l, N), withs.get(M, N),
                                   l=l, k=k, M=M, N=N, region="II-periodic", first_filter=first)
            aux = count_paths(lat.auxiliary(l), n_max)
            single = count_paths(lat.periodic_with_long_steps(l, (k,)), n_max)
            for M, N in _grid(n_max):
                m = lat.strip_index(M, l) - 1
                if m < k:
                    continue
                expected = sum(aux.get(M + 2 * j * l, N) for j in range((N - l * m + 1) // (2 * l) + 1))
                res.expect(expected, single.get(M, N), l=l, k=k, M=M, N=N, region="strip-sum")
    return res


def oracle_models(l: int = 3) -> list[lat.ModelSpec]:
    return [
        lat.unrestricted(l),
        lat.wall_only(0, l),
        lat.single_filter(2, 1, l),
        lat.auxiliary(l),
        lat.uq(l),
    ]


def suite_oracle(n_max: int = 14, ls: Sequence[int] = (3,)) -> SuiteResult:
    res = SuiteResult("oracle")
    for l in ls:
        for model in oracle_models(l):
            table = count_paths(model, n_max)
            for N in range(n_max + 1):
                for M in range(-N, N + 1, 2):
                    if model.wall is not None and M < model.wall:
                        continue
                    total = sum(p.weight for p in enumerate_paths(model, M, N, guard=max(n_max, 20)))
                    res.expect(table.get(M, N), total, model=model.kind, l=l, M=M, N=N)
    return res


def region_two(l: int, k: int) -> Region:
    """Region II of the long-step lemma in the two-filter model carrying ``S(k)``."""
    lo, hi, top = _longstep_ranges(l, k)
    return band_region(lat.two_filter(l, k, long_steps=True), lo, hi, 0, top, diagonal=(2 * l, top))


def suite_congruence(ls: Sequence[int] = (3, 5), ks: Sequence[int] = (1, 2), n_max: int = 12) -> SuiteResult:
    res = SuiteResult("congruence")
    for l in ls:
        for k in ks:
            a = region_two(l, k)
            t = Translation(2 * l, 0)
            b = a.translate(t, lat.two_filter(l, k))
            res.expect(True, check_congruent(a, b, t), l=l, k=k, check="region II vs translate")
            res.expect(True, check_congruent(b, a, t.inverse()), l=l, k=k, check="symmetry")
        aux = lat.auxiliary(l)
        wall_strip = strip_region(aux, 1, n_max)
        filter_strip = strip_region(aux, 3, n_max)
        t = Translation(2 * l, 0)
        res.expect(False, check_congruent(wall_strip, filter_strip, t), l=l, check="wall strip vs filter strip")
        res.expect(False, check_congruent(filter_strip, wall_strip, t.inverse()), l=l, check="symmetry")
        strip2 = strip_region(aux, 2, n_max)
        table = count_paths(aux, n_max)
        seeds = {p: table.get(p.x, p.n) for p in boundary(strip2)}
        rebuilt = counts_from_boundary(strip2, seeds)
        for p in strip2.ordered():
            res.expect(table.get(p.x, p.n), rebuilt[p], l=l, M=p.x, N=p.n, check="counts from boundary")
        bd_cols = {p.x for p in boundary(strip2)}
        res.expect({l - 1}, bd_cols, l=l, check="strip boundary column")
    return res


def suite_tilting(ls: Sequence[int] = (3, 5, 7), n_max: int = 40) -> SuiteResult:
    """Recursion, path counts and closed form agree; dimensions sum to ``2^N``."""
    res = SuiteResult("tilting")
    for l in ls:
        table = count_paths(lat.uq(l), n_max)
        for N, dec in enumerate(decompositions(n_max, l)):
            res.expect(dict(table.level(N)), dec.as_dict(), l=l, N=N, check="recursion vs paths")
            closed = {M: uq_multiplicity(l, M, N) for M in range(N % 2, N + 1, 2)}
            closed = {M: v for M, v in closed.items() if v}
            res.expect(closed, dec.as_dict(), l=l, N=N, check="recursion vs closed form")
            res.expect(2 ** N, dimension_total(dec, l), l=l, N=N, check="dimension")
    return res


DEFAULT_N_MAX = {
    "closed-form": 40,
    "f1": 40,
    "identities": 30,
    "wz": 15,
    "longstep": 40,
    "oracle": 14,
    "congruence": 12,
    "tilting": 40,
}

SUITES: dict[str, Callable[..., SuiteResult]] = {
    "closed-form": lambda ls, n, **kw: suite_closed_form(ls, n),
    "f1": lambda ls, n, **kw: suite_f1(ls, n),
    "identities": lambda ls, n, **kw: suite_identities(n),
    "wz": lambda ls, n, certificate="printed", **kw: suite_wz(n, certificate=certificate),
    "longstep": lambda ls, n, **kw: suite_longstep([l for l in ls if l <= 5] or ls[:1], (1, 2), n),
    "oracle": lambda ls, n, **kw: suite_oracle(n, ls[:1]),
    "congruence": lambda ls, n, **kw: suite_congruence([l for l in ls if l <= 5] or ls[:1], (1, 2), n),
    "tilting": lambda ls, n, **kw: suite_tilting(ls, n),
}


def run_suite(name: str, ls: Sequence[int] = (3, 5, 7), n_max: int | None = None, **kw) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](tuple(ls), DEFAULT_N_MAX[name] if n_max is None else n_max, **kw)
