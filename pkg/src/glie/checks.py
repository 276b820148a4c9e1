"""Cross-checks between presentations and braid identities.

Each check returns a :class:`CheckResult` whose ``lines`` say what was
compared; the CLI prints them and the acceptance suite asserts on them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from glie import braidcheck
from glie.gradedquotient import GradedComponentReport, central_element_check, hilbert_table, torsion_text
from glie.lyndon import witt_rank
from glie.presentations import build


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    lines: list[str] = field(default_factory=list)

    def record(self, ok: bool, message: str) -> None:
        self.passed = self.passed and ok
        self.lines.append(f"{'PASS' if ok else 'FAIL'}  {message}")

    def merge(self, other: "CheckResult") -> None:
        self.passed = self.passed and other.passed
        self.lines.extend(other.lines)


def _fmt(r: GradedComponentReport) -> str:
    return f"rank {r.free_rank}" + (f" torsion {torsion_text(r.torsion)}" if r.torsion else "")


def _table(name: str, n: int, dmax: int, cache: dict | None = None):
    if cache is None:
        return hilbert_table(build(name, n), dmax)
    key = (name, n)
    if key not in cache or len(cache[key]) < dmax:
        cache[key] = hilbert_table(build(name, n), dmax)
    return cache[key][:dmax]


def compare_tables(
    left: tuple[str, int],
    right: tuple[str, int],
    dmax: int,
    rank_offset: dict[int, int] | None = None,
    torsion_extra: dict[int, tuple[int, ...]] | None = None,
    ranks_only: bool = False,
    cache: dict | None = None,
) -> CheckResult:
    """Compare ``left`` against ``right`` degree by degree.

    ``left`` is expected to have ``rank_offset[d]`` more free rank and the
    additional torsion ``torsion_extra[d]`` (merged into the right's list).
    """
    rank_offset = rank_offset or {}
    torsion_extra = torsion_extra or {}
    a = _table(*left, dmax, cache)
    b = _table(*right, dmax, cache)
    res = CheckResult(f"{left[0]}({left[1]}) vs {right[0]}({right[1]})")
    for ra, rb in zip(a, b):
        d = ra.degree
        want_rank = rb.free_rank + rank_offset.get(d, 0)
        want_torsion = tuple(sorted(rb.torsion + torsion_extra.get(d, ())))
        ok = ra.free_rank == want_rank and (ranks_only or tuple(sorted(ra.torsion)) == want_torsion)
        res.record(ok, f"d={d}: {left[0]}({left[1]}) {_fmt(ra)}; {right[0]}({right[1]}) {_fmt(rb)}")
    return res


def example_pm04(dmax: int = 6) -> CheckResult:
    """pm0n-reduced(4) should be free on two generators."""
    res = CheckResult("example-pm04")
    for r in hilbert_table(build("pm0n-reduced", 4), dmax):
        w = witt_rank(2, r.degree)
        res.record(r.free_rank == w and not r.torsion, f"d={r.degree}: {_fmt(r)}; witt(2,{r.degree}) = {w}")
    return res


def theorem2(n: int, dmax: int, cache: dict | None = None) -> CheckResult:
    res = compare_tables(("pm0n-full", n), ("pm0n-reduced", n), dmax, cache=cache)
    res.name = f"theorem2 n={n}"
    return res


def theorem1_ii(n: int, dmax: int, cache: dict | None = None) -> CheckResult:
    """kohno(n) = Z (degree 1) + pm0n-reduced(n+1)."""
    res = compare_tables(("kohno", n), ("pm0n-reduced", n + 1), dmax, rank_offset={1: 1}, cache=cache)
    res.name = f"theorem1(ii) n={n}"
    return res


def theorem1_i(n: int, dmax: int, cache: dict | None = None) -> CheckResult:
    """ihara(n) = Z/2 (degree 1) + pm0n-reduced(n)."""
    res = compare_tables(("ihara", n), ("pm0n-reduced", n), dmax, torsion_extra={1: (2,)}, cache=cache)
    res.name = f"theorem1(i) n={n}"
    return res


def ihara_vs_sphere(n: int, dmax: int, cache: dict | None = None) -> CheckResult:
    res = compare_tables(("ihara", n), ("sphere-reduced", n), dmax, cache=cache)
    res.name = f"ihara vs sphere-reduced n={n}"
    return res


def theorem1(n: int, dmax: int) -> CheckResult:
    cache: dict = {}
    res = CheckResult(f"theorem1 n={n}")
    res.merge(theorem1_ii(n, dmax, cache))
    if n >= 4:
        res.merge(theorem1_i(n, dmax, cache))
        res.merge(ihara_vs_sphere(n, dmax, cache))
    return res


def corollary(n: int, dmax: int) -> CheckResult:
    """Degree-1 torsion, centrality of the total sum, and ranks against pm0n-reduced."""
    res = CheckResult(f"corollary n={n}")
    p = build("sphere-reduced", n)
    table = hilbert_table(p, max(dmax, 2))
    first = table[0]
    want = witt_rank(len(p.generators), 1) - 1
    res.record(
        first.free_rank == want and first.torsion == (2,),
        f"d=1: {_fmt(first)}; expected rank {want} torsion Z/2",
    )
    central = central_element_check(p, p.total_sum())
    res.record(central, f"sum of generators central in degree 2: {central}")
    if dmax >= 2:
        res.merge(compare_tables(("sphere-reduced", n), ("pm0n-reduced", n), dmax, ranks_only=True))
    return res


def burau(n: int) -> CheckResult:
    rep = braidcheck.verify_burau_relations(n)
    res = CheckResult(f"burau n={n}")
    for c in rep.checks:
        res.record(c.passed, f"{c.family} {c.indices}")
    if not rep.checks:
        res.lines.append(f"PASS  no instances for n={n}")
    return res


def delta2(n: int) -> CheckResult:
    res = CheckResult(f"delta2 n={n}")
    d2 = braidcheck.delta_word(n) ** 2
    res.record(braidcheck.braids_equal(d2, braidcheck.delta_squared_product(n)), "Delta^2 = row product of a_ij")
    res.record(braidcheck.braids_equal(d2, braidcheck.delta_squared_columns(n)), "Delta^2 = column product of a_ij")
    return res


def magnus(n: int) -> CheckResult:
    res = CheckResult(f"magnus n={n}")
    res.record(braidcheck.verify_magnus_equivalence(n), "(s_1 ... s_{n-1})^n = Delta^2")
    return res


def central(n: int) -> CheckResult:
    res = CheckResult(f"central n={n}")
    res.record(braidcheck.centrality_check(n), "Delta^2 commutes with every s_i")
    return res


def sphere_sanity(n: int) -> CheckResult:
    s = braidcheck.sphere_relator_sanity(n)
    res = CheckResult(f"sphere-sanity n={n}")
    res.record(s.permutation == tuple(range(n)), f"permutation {list(s.permutation)}")
    res.record(s.exponent_sum == 2 * (n - 1), f"exponent sum {s.exponent_sum}")
    res.record(not s.trivial_in_disc_group, "relator nontrivial in the disc braid group")
    return res


# name -> (callable, uses n, uses max degree, default n, minimum n)
CHECKS = {
    "burau": (burau, True, False, 5, 2),
    "delta2": (delta2, True, False, 4, 2),
    "magnus": (magnus, True, False, 4, 2),
    "central": (central, True, False, 4, 2),
    "sphere-sanity": (sphere_sanity, True, False, 4, 3),
    "theorem1": (theorem1, True, True, 3, 2),
    "theorem2": (theorem2, True, True, 4, 4),
    "corollary": (corollary, True, True, 4, 4),
    "example-pm04": (example_pm04, False, True, None, None),
}


def run_check(name: str, n: int | None = None, dmax: int | None = None) -> CheckResult:
    fn, uses_n, uses_d, default_n, min_n = CHECKS[name]
    args = []
    if uses_n:
        n = default_n if n is None else n
        if n < min_n:
            raise ValueError(f"check {name} needs n >= {min_n}, got {n}")
        args.append(n)
    if uses_d:
        dmax = 4 if dmax is None else dmax
        if dmax < 1:
            raise ValueError(f"max degree must be >= 1, got {dmax}")
        args.append(dmax)
    return fn(*args)
