"""Exit criteria.  All comparisons are exact integer equalities.

Each test appends one PASS/FAIL line (shown in the terminal summary) before
asserting, so a run reports every criterion even when some fail.
"""
import random
import time
from math import prod


from glie import braidcheck as bc
from glie.checks import compare_tables
from glie.freelie import LieElement, bracket
from glie.gradedquotient import central_element_check, hilbert_table
from glie.lyndon import enumerate_lyndon_words, witt_rank
from glie.presentations import build
from glie.zmodule import hermite_form, smith_diagonal, smith_invariants

TABLES: dict = {}


class Criterion:
    def __init__(self, log, number, title, budget):
        self.log, self.number, self.title, self.budget = log, number, title, budget
        self.failures: list[str] = []
        self.started = time.perf_counter()

    def expect(self, ok, message):
        if not ok:
            self.failures.append(message)

    def finish(self):
        elapsed = time.perf_counter() - self.started
        self.expect(elapsed < self.budget, f"runtime {elapsed:.1f}s over budget {self.budget}s")
        status = "PASS" if not self.failures else "FAIL"
        detail = "" if not self.failures else "  <- " + "; ".join(self.failures)
        self.log.append(f"[{status}] criterion {self.number}: {self.title} ({elapsed:.2f}s){detail}")
        assert not self.failures, "\n".join(self.failures)


def _check_compare(c, result):
    for line in result.lines:
        c.expect(line.startswith("PASS"), f"{result.name}: {line[6:]}")


def test_criterion_1_pm04_is_free(acceptance_log):
    c = Criterion(acceptance_log, 1, "pm0n-reduced(4) ranks 2,1,2,3,6,9 = witt(2,d), no torsion", 10)
    table = hilbert_table(build("pm0n-reduced", 4), 6)
    ranks = [r.free_rank for r in table]
    c.expect(ranks == [2, 1, 2, 3, 6, 9], f"ranks {ranks}")
    c.expect(ranks == [witt_rank(2, d) for d in range(1, 7)], "ranks differ from witt(2,d)")
    c.expect(all(r.torsion == () for r in table), "unexpected torsion")
    c.finish()


def test_criterion_2_full_vs_reduced(acceptance_log):
    c = Criterion(acceptance_log, 2, "pm0n-full(n) = pm0n-reduced(n), n = 4, 5, d <= 4", 120)
    for n in (4, 5):
        _check_compare(c, compare_tables(("pm0n-full", n), ("pm0n-reduced", n), 4, cache=TABLES))
    c.finish()


def test_criterion_3_corollary(acceptance_log):
    c = Criterion(acceptance_log, 3, "sphere-reduced(4): d=1 Z^2+Z/2, sum central (n=4,5), ranks = pm0n-reduced(4)", 60)
    r1 = hilbert_table(build("sphere-reduced", 4), 1)[0]
    c.expect((r1.free_rank, r1.torsion) == (2, (2,)), f"degree 1: rank {r1.free_rank} torsion {r1.torsion}")
    for n in (4, 5):
        p = build("sphere-reduced", n)
        c.expect(central_element_check(p, p.total_sum()), f"sum of A_ij not central in degree 2 for n={n}")
    res = compare_tables(("sphere-reduced", 4), ("pm0n-reduced", 4), 4, ranks_only=True, cache=TABLES)
    _check_compare(c, res)
    c.finish()


def test_criterion_4_ihara_vs_sphere_reduced(acceptance_log):
    c = Criterion(acceptance_log, 4, "ihara(n) = sphere-reduced(n), n = 4, 5, d <= 4", 120)
    for n in (4, 5):
        _check_compare(c, compare_tables(("ihara", n), ("sphere-reduced", n), 4, cache=TABLES))
    c.finish()


def test_criterion_5_kohno_splitting(acceptance_log):
    c = Criterion(acceptance_log, 5, "kohno(n) = Z(d=1) + pm0n-reduced(n+1), n = 3, 4, d <= 5", 120)
    for n in (3, 4):
        res = compare_tables(("kohno", n), ("pm0n-reduced", n + 1), 5, rank_offset={1: 1}, cache=TABLES)
        _check_compare(c, res)
    c.finish()


def test_criterion_6_ihara_splitting(acceptance_log):
    c = Criterion(acceptance_log, 6, "ihara(n) = Z/2(d=1) + pm0n-reduced(n), n = 4, 5, d <= 4", 120)
    for n in (4, 5):
        res = compare_tables(("ihara", n), ("pm0n-reduced", n), 4, torsion_extra={1: (2,)}, cache=TABLES)
        _check_compare(c, res)
    c.finish()


def test_criterion_7_braid_identities(acceptance_log):
    c = Criterion(acceptance_log, 7, "Burau, Delta^2 product, Magnus, centrality, sphere relator, n <= 6", 10)
    for n in range(3, 7):
        rep = bc.verify_burau_relations(n)
        c.expect(rep.passed, f"burau n={n}: {[(f.family, f.indices) for f in rep.failures()]}")
    for n in range(2, 7):
        c.expect(bc.braids_equal(bc.delta_word(n) ** 2, bc.delta_squared_product(n)), f"Delta^2 product n={n}")
        c.expect(bc.verify_magnus_equivalence(n), f"magnus n={n}")
        c.expect(bc.centrality_check(n), f"centrality n={n}")
    for n in range(3, 7):
        s = bc.sphere_relator_sanity(n)
        c.expect(s.permutation == tuple(range(n)) and s.exponent_sum == 2 * (n - 1), f"sphere relator n={n}")
    c.finish()


def _random_element(rng, k, d):
    basis = enumerate_lyndon_words(k, d)
    return LieElement.from_vector([rng.randint(-3, 3) for _ in basis], k, d)


def _cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _cofactor_det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def test_criterion_8_property_suites(acceptance_log):
    c = Criterion(acceptance_log, 8, "Jacobi/antisymmetry, Lyndon counts, HNF canonicality, SNF chain + det", 30)
    rng = random.Random(20240101)
    for _ in range(200):
        k = rng.randint(1, 3)
        x, y, z = (_random_element(rng, k, rng.randint(1, 4)) for _ in range(3))
        c.expect((bracket(x, y) + bracket(y, x)).is_zero(), f"antisymmetry {x} {y}")
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        c.expect(jac.is_zero(), f"jacobi {x} {y} {z}")
    for k in range(1, 5):
        for d in range(1, 9):
            c.expect(len(enumerate_lyndon_words(k, d)) == witt_rank(k, d), f"lyndon count k={k} d={d}")
    for _ in range(100):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        extra = []
        for _ in range(3):
            coeffs = [rng.randint(-3, 3) for _ in m]
            extra.append([sum(a * r[j] for a, r in zip(coeffs, m)) for j in range(cols)])
        mixed = m + extra
        rng.shuffle(mixed)
        c.expect(hermite_form(mixed) == hermite_form(m), f"hermite not canonical for {m}")
    for _ in range(100):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        diag = smith_diagonal(m)
        inv = smith_invariants(m)
        c.expect(all(b % a == 0 for a, b in zip(diag, diag[1:])), f"divisibility {diag}")
        c.expect(len(diag) == 4 - inv.free_rank, f"rank mismatch for {m}")
        det = _cofactor_det(m)
        c.expect(prod(diag) == abs(det) if det else len(diag) < 4, f"determinant {det} vs {diag}")
    c.finish()
