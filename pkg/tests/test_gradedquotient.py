import pytest

from glie.freelie import LieElement, bracket, sparse_vector
from glie.gradedquotient import (
    ad,
    central_element_check,
    graded_component,
    hilbert_table,
    ideal_slice,
    ideal_slices,
    worker_count,
)
from glie.lyndon import witt_rank
from glie.presentations import GeneratorLabel, GradedPresentation, build
from glie.zmodule import lattice_member


def free(k):
    labels = tuple(GeneratorLabel(1, j + 2) for j in range(k))
    return GradedPresentation("free", k + 1, labels, ())


def table(name, n, dmax):
    return [(r.free_rank, r.torsion) for r in hilbert_table(build(name, n), dmax)]


def test_slice_examples_pm04():
    p = build("pm0n-reduced", 4)
    s1 = ideal_slice(p, 1)
    assert s1.basis.rows() == [[1, 1, 1]]
    s2 = ideal_slice(p, 2, s1)
    assert s2.rank == 2 and s2.basis.ambient == 3
    # hand computation: [A12, S] = [A12,A13] + [A12,A23], [A13, S] = -[A12,A13] + [A13,A23]
    assert s2.basis.rows() == [[1, 0, -1], [0, 1, 1]]


def test_empty_ideal_for_free_presentation():
    for s in ideal_slices(free(2), 4):
        assert s.rank == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_free_sanity(k):
    for r in hilbert_table(free(k), 6):
        assert r.free_rank == witt_rank(k, r.degree) == r.witt
        assert r.torsion == ()


def test_graded_component_examples():
    r = graded_component(build("pm0n-reduced", 4), 1)
    assert (r.free_rank, r.torsion) == (2, ())
    r = graded_component(build("sphere-reduced", 4), 1)
    assert (r.free_rank, r.torsion) == (2, (2,))
    r = graded_component(build("pm0n-reduced", 4), 2)
    assert (r.free_rank, r.torsion) == (1, ())


def test_hilbert_table_examples():
    assert table("pm0n-reduced", 4, 5) == [(witt_rank(2, d), ()) for d in range(1, 6)]
    assert table("kohno", 2, 3) == [(1, ()), (0, ()), (0, ())]
    assert table("ihara", 4, 2)[0] == (2, (2,))


def test_known_pure_braid_ranks():
    # gr P_4 has Poincare polynomial (1+t)(1+2t)(1+3t); lower central ranks 6, 4, 10, 21
    assert [r for r, _ in table("kohno", 4, 4)] == [6, 4, 10, 21]
    assert all(t == () for _, t in table("kohno", 4, 4))


def test_prev_slice_validation():
    p = build("kohno", 3)
    s1 = ideal_slice(p, 1)
    with pytest.raises(ValueError):
        ideal_slice(p, 3, s1)
    with pytest.raises(ValueError):
        ideal_slice(p, 2)
    with pytest.raises(ValueError):
        ideal_slice(p, 1, s1)
    with pytest.raises(ValueError):
        hilbert_table(p, 0)


@pytest.mark.parametrize("name,n", [("kohno", 4), ("ihara", 4), ("pm0n-reduced", 5)])
def test_monotone_ideal_growth(name, n):
    p = build(name, n)
    prev = None
    for s in ideal_slices(p, 3):
        if prev is not None:
            for v in prev.basis.sparse_rows():
                for g in range(p.k):
                    assert lattice_member(s.basis, ad(p.k, prev.degree, g, v))
        prev = s


@pytest.mark.parametrize("n", [3, 4])
def test_third_triangle_family_in_kohno_ideal(n):
    p = build("kohno", n)
    s2 = ideal_slice(p, 2, ideal_slice(p, 1))
    from itertools import combinations

    for i, j, k in combinations(range(1, n + 1), 3):
        rel = bracket(p.gen(j, k), p.gen(i, j) + p.gen(i, k))
        assert lattice_member(s2.basis, sparse_vector(rel))


def test_central_element_examples():
    p = build("sphere-reduced", 4)
    assert not central_element_check(p, p.gen(1, 2))
    assert central_element_check(p, LieElement.zero(p.k, 1))
    # total sum of A_ij is central in the infinitesimal pure braid algebra
    k4 = build("kohno", 4)
    assert central_element_check(k4, k4.total_sum())
    assert not central_element_check(k4, k4.gen(1, 2))


def test_sum_in_sphere_reduced_only_central_up_to_two():
    # the degree-2 slice is spanned by 2[g, S], so [S, A12] = -([A12,A13] + [A12,A23]) is
    # not in it while twice it is
    p = build("sphere-reduced", 4)
    s = p.total_sum()
    s2 = ideal_slice(p, 2, ideal_slice(p, 1))
    c = bracket(s, p.gen(1, 2))
    assert c.vector() == [-1, -1, 0]
    assert not lattice_member(s2.basis, c.vector())
    assert lattice_member(s2.basis, (2 * c).vector())
    assert not central_element_check(p, s)


def test_determinism_and_parallel_schedule(monkeypatch):
    # ihara(5) has enough products in degree 3 to take the process-pool path
    p = build("ihara", 5)
    seq = hilbert_table(p, 3)
    again = hilbert_table(p, 3)
    s_seq = list(ideal_slices(p, 3))
    monkeypatch.setenv("GLIE_THREADS", "2")
    assert worker_count() == 2
    par = hilbert_table(p, 3)
    s_par = list(ideal_slices(p, 3))
    strip = lambda t: [(r.degree, r.witt, r.free_rank, r.torsion) for r in t]
    assert strip(seq) == strip(again) == strip(par)
    assert [s.basis.rows() for s in s_seq] == [s.basis.rows() for s in s_par]


@pytest.mark.parametrize("value", ["0", "-1", "two"])
def test_bad_thread_count(monkeypatch, value):
    monkeypatch.setenv("GLIE_THREADS", value)
    with pytest.raises(ValueError):
        worker_count()


def test_slice_coefficients_stay_small():
    p = build("ihara", 5)
    for s in ideal_slices(p, 4):
        assert max((abs(x) for r in s.basis.echelon_rows() for x in r.values()), default=0) < 100


@pytest.mark.parametrize("n", [4, 5])
def test_full_presentation_matches_kohno_mod_total_sum(n):
    # eliminating B_{i,n} leaves kohno(n-1) with the total sum killed
    k = build("kohno", n - 1)
    kohno_mod_sum = GradedPresentation("kohno+S", n, k.generators, k.relations + (k.total_sum(),))
    full = [(r.free_rank, r.torsion) for r in hilbert_table(build("pm0n-full", n), 3)]
    assert [(r.free_rank, r.torsion) for r in hilbert_table(kohno_mod_sum, 3)] == full
