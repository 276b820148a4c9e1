"""Graded components of a free Lie ring modulo a homogeneous ideal.

The degree-``d`` part of the ideal generated by homogeneous relations is

    I_d = R_d + sum over generators g of [g, I_{d-1}],

where ``R_d`` is the span of relations of degree ``d``.  This suffices
because the ring is generated in degree 1 and ``ad [a, b] = ad a ad b -
ad b ad a``, so every ``ad`` of a bracket is a combination of compositions
of ``ad`` of generators.  Each component is then ``Z^witt / I_d``, read off
by Smith invariants.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from glie.freelie import LieElement, _bracket_basis, bracket, sparse_vector
from glie.lyndon import enumerate_lyndon_words, lyndon_index, witt_rank
from glie.presentations import GradedPresentation
from glie.zmodule import SubgroupBasis, lattice_member, quotient_invariants


@dataclass
class IdealSlice:
    degree: int
    basis: SubgroupBasis

    @property
    def rank(self) -> int:
        return self.basis.rank


@dataclass(frozen=True)
class GradedComponentReport:
    degree: int
    witt: int
    free_rank: int
    torsion: tuple[int, ...]
    elapsed: float = 0.0

    def same_group(self, other: "GradedComponentReport") -> bool:
        return self.free_rank == other.free_rank and self.torsion == other.torsion


def torsion_text(torsion) -> str:
    """``(2, 2, 4)`` -> ``"(Z/2)^2 + Z/4"``; empty torsion -> ``"-"``."""
    if not torsion:
        return "-"
    counts: dict[int, int] = {}
    for t in torsion:
        counts[t] = counts.get(t, 0) + 1
    return " + ".join(f"(Z/{t})^{c}" if c > 1 else f"Z/{t}" for t, c in counts.items())


def worker_count() -> int:
    raw = os.environ.get("GLIE_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"GLIE_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"GLIE_THREADS must be a positive integer, got {raw!r}")
    return n


@lru_cache(maxsize=None)
def _ad_column(k: int, d: int, g: int, i: int) -> tuple[tuple[int, int], ...]:
    # [g, w_i] for the i-th Lyndon word of degree d, as sparse degree-(d+1) coordinates
    w = enumerate_lyndon_words(k, d)[i]
    index = lyndon_index(k, d + 1)
    return tuple((index[u], c) for u, c in _bracket_basis((g,), w))


def ad(k: int, d: int, g: int, v: dict[int, int]) -> dict[int, int]:
    """Sparse coordinates of ``[g, v]`` for ``v`` sparse in degree ``d``."""
    out: dict[int, int] = {}
    for i, a in v.items():
        for j, c in _ad_column(k, d, g, i):
            x = out.get(j, 0) + a * c
            if x:
                out[j] = x
            else:
                del out[j]
    return out


def _ad_batch(args) -> list[dict[int, int]]:
    k, d, gens, rows = args
    return [ad(k, d, g, v) for g in gens for v in rows]


def _ad_products(k: int, d: int, rows: list[dict[int, int]], workers: int) -> list[dict[int, int]]:
    gens = list(range(k))
    if workers <= 1 or len(gens) * len(rows) < 256:
        return _ad_batch((k, d, gens, rows))
    chunks = [(k, d, [g], rows) for g in gens]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_ad_batch, chunks))
    # assembled in generator order, so the lattice does not depend on the schedule
    return [v for part in parts for v in part]


def ideal_slice(
    p: GradedPresentation, d: int, prev: IdealSlice | None = None, workers: int | None = None
) -> IdealSlice:
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d == 1 and prev is not None:
        raise ValueError("degree 1 takes no previous slice")
    if d >= 2:
        if prev is None:
            raise ValueError(f"degree {d} needs the slice of degree {d - 1}")
        if prev.degree != d - 1:
            raise ValueError(f"previous slice has degree {prev.degree}, expected {d - 1}")
    k = p.k
    basis = SubgroupBasis(witt_rank(k, d))
    for r in p.relations_of_degree(d):
        basis.add(sparse_vector(r))
    if prev is not None and prev.rank:
        if workers is None:
            workers = worker_count()
        basis.extend(_ad_products(k, d - 1, prev.basis.echelon_rows(), workers))
    return IdealSlice(d, basis)


def ideal_slices(p: GradedPresentation, dmax: int):
    """Yield the slices for degrees ``1..dmax``, each built from the last."""
    prev = None
    for d in range(1, dmax + 1):
        prev = ideal_slice(p, d, prev)
        yield prev


def _report(s: IdealSlice, started: float) -> GradedComponentReport:
    inv = quotient_invariants(s.basis)
    return GradedComponentReport(s.degree, s.basis.ambient, inv.free_rank, inv.torsion,
                                 time.perf_counter() - started)


def hilbert_table(p: GradedPresentation, dmax: int) -> list[GradedComponentReport]:
    if dmax < 1:
        raise ValueError(f"max degree must be >= 1, got {dmax}")
    out = []
    started = time.perf_counter()
    for s in ideal_slices(p, dmax):
        out.append(_report(s, started))
        started = time.perf_counter()
    return out


def graded_component(p: GradedPresentation, d: int) -> GradedComponentReport:
    return hilbert_table(p, d)[-1]


def central_element_check(
    p: GradedPresentation, z: LieElement, slice2: IdealSlice | None = None
) -> bool:
    """True iff ``[z, g]`` vanishes in the degree-2 component for every generator ``g``."""
    if z.k != p.k or z.degree != 1:
        raise ValueError("z must be a degree-1 element over the presentation's generators")
    if z.is_zero():
        return True
    if slice2 is None:
        slice2 = ideal_slice(p, 2, ideal_slice(p, 1))
    for g in range(p.k):
        c = bracket(z, LieElement.generator(g, p.k))
        if not lattice_member(slice2.basis, sparse_vector(c)):
            return False
    return True
