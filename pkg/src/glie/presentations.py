"""Graded Lie ring presentations of pure braid and pure mapping class groups.

Every builder returns generators ``X_{i,j}`` with ``i < j`` in lexicographic
order; letter ``t`` of the free Lie ring is the ``t``-th generator.  The
symmetric conventions ``B_{j,i} = B_{i,j}`` and ``B_{i,i} = 0`` are absorbed
into the labelling and never appear as relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from glie.freelie import LieElement, bracket


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    i: int
    j: int
    symbol: str = "A"

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"generator indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        return f"{self.symbol}_{{{self.i},{self.j}}}"


@dataclass(frozen=True)
class GradedPresentation:
    name: str
    n: int
    generators: tuple[GeneratorLabel, ...]
    relations: tuple[LieElement, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    def index(self, i: int, j: int) -> int:
        """Letter of the generator ``X_{i,j}``; the order of ``i, j`` is irrelevant."""
        if i > j:
            i, j = j, i
        for t, g in enumerate(self.generators):
            if g.pair == (i, j):
                return t
        raise KeyError(f"no generator with indices ({i}, {j}) in {self.name}")

    def gen(self, i: int, j: int) -> LieElement:
        return LieElement.generator(self.index(i, j), self.k)

    def relations_of_degree(self, d: int) -> list[LieElement]:
        return [r for r in self.relations if r.degree == d]

    def total_sum(self) -> LieElement:
        return sum_of(range(self.k), self.k)

    def describe(self) -> str:
        by_degree: dict[int, int] = {}
        for r in self.relations:
            by_degree[r.degree] = by_degree.get(r.degree, 0) + 1
        counts = ", ".join(f"{c} in degree {d}" for d, c in sorted(by_degree.items())) or "none"
        return f"{self.name}(n={self.n}): {self.k} generators, relations: {counts}"


def sum_of(letters, k: int, scale: int = 1) -> LieElement:
    coords: dict[tuple[int, ...], int] = {}
    for t in letters:
        coords[(t,)] = coords.get((t,), 0) + scale
    return LieElement(k, 1, {w: c for w, c in coords.items() if c})


def _labels(m: int, symbol: str) -> tuple[GeneratorLabel, ...]:
    return tuple(GeneratorLabel(i, j, symbol) for i, j in combinations(range(1, m + 1), 2))


def _disjoint_commutators(labels) -> list[LieElement]:
    k = len(labels)
    out = []
    for s, t in combinations(range(k), 2):
        if not set(labels[s].pair) & set(labels[t].pair):
            out.append(bracket(LieElement.generator(s, k), LieElement.generator(t, k)))
    return out


def _row_sums(labels, m: int) -> list[LieElement]:
    k = len(labels)
    return [sum_of([t for t, g in enumerate(labels) if i in g.pair], k) for i in range(1, m + 1)]


def _require(n: int, least: int, name: str) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"{name} needs n >= {least}, got {n!r}")


def build_kohno(n: int) -> GradedPresentation:
    """Infinitesimal pure braid relations on ``A_{i,j}``, ``1 <= i < j <= n``."""
    _require(n, 2, "kohno")
    labels = _labels(n, "A")
    k = len(labels)
    idx = {g.pair: t for t, g in enumerate(labels)}

    def a(i, j):
        return LieElement.generator(idx[(i, j)], k)

    rels = _disjoint_commutators(labels)
    for i, j, l in combinations(range(1, n + 1), 3):
        rels.append(bracket(a(i, j), a(i, l) + a(j, l)))
        rels.append(bracket(a(i, l), a(i, j) + a(j, l)))
    return GradedPresentation("kohno", n, labels, tuple(rels))


def build_ihara(n: int) -> GradedPresentation:
    _require(n, 3, "ihara")
    labels = _labels(n, "B")
    rels = _disjoint_commutators(labels) + _row_sums(labels, n)
    return GradedPresentation("ihara", n, labels, tuple(rels))


def build_pm0n_full(n: int) -> GradedPresentation:
    _require(n, 3, "pm0n-full")
    base = build_ihara(n)
    rels = base.relations + (base.total_sum(),)
    return GradedPresentation("pm0n-full", n, base.generators, rels)


def _reduced(n: int, name: str, scale: int) -> GradedPresentation:
    _require(n, 4, name)
    labels = _labels(n - 1, "A")
    k = len(labels)
    rels = _disjoint_commutators(labels) + [sum_of(range(k), k, scale)]
    return GradedPresentation(name, n, labels, tuple(rels))


def build_pm0n_reduced(n: int) -> GradedPresentation:
    """Generators ``A_{i,j}`` on the first ``n - 1`` points, commuting when disjoint, summing to zero."""
    return _reduced(n, "pm0n-reduced", 1)


def build_sphere_reduced(n: int) -> GradedPresentation:
    """As :func:`build_pm0n_reduced` but only twice the total sum vanishes."""
    return _reduced(n, "sphere-reduced", 2)


BUILDERS = {
    "kohno": build_kohno,
    "ihara": build_ihara,
    "pm0n-full": build_pm0n_full,
    "pm0n-reduced": build_pm0n_reduced,
    "sphere-reduced": build_sphere_reduced,
}

MIN_N = {"kohno": 2, "ihara": 3, "pm0n-full": 3, "pm0n-reduced": 4, "sphere-reduced": 4}


def build(name: str, n: int) -> GradedPresentation:
    try:
        builder = BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown presentation {name!r}; choose from {', '.join(BUILDERS)}") from None
    return builder(n)


def disjoint_pair_count(m: int) -> int:
    return 3 * comb(m, 4)
