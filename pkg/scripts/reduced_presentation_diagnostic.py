"""Where the reduced presentation of gr PM_{0,n} parts ways with the full one.

Eliminating B_{i,n} through the row relations turns the commutators
[B_{i,j}, B_{s,n}] into [A_{i,j}, sum over l of A_{s,l}], which contain the
triangle relations of the infinitesimal pure braid algebra.  Compare three
presentations degree by degree:

  full      pm0n-full(n)
  reduced   pm0n-reduced(n)               (disjoint commutators + total sum)
  kohno+S   kohno(n-1) plus the total sum (all triangle relations kept)
"""
import argparse

from glie.gradedquotient import hilbert_table, torsion_text
from glie.presentations import GradedPresentation, build, build_kohno


def kohno_mod_sum(n: int, scale: int = 1) -> GradedPresentation:
    k = build_kohno(n - 1)
    rels = k.relations + (scale * k.total_sum(),)
    return GradedPresentation(f"kohno({n - 1})+{scale}S", n, k.generators, rels)


def fmt(rows):
    return [f"{r.free_rank}" + (f"+{torsion_text(r.torsion)}" if r.torsion else "") for r in rows]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--max-degree", type=int, default=4)
    args = ap.parse_args()
    for n in args.n:
        full = hilbert_table(build("pm0n-full", n), args.max_degree)
        reduced = hilbert_table(build("pm0n-reduced", n), args.max_degree)
        fixed = hilbert_table(kohno_mod_sum(n), args.max_degree)
        print(f"n={n}")
        print(f"  full     {fmt(full)}")
        print(f"  reduced  {fmt(reduced)}")
        print(f"  kohno+S  {fmt(fixed)}")
        same = [(a.free_rank, a.torsion) == (b.free_rank, b.torsion) for a, b in zip(full, fixed)]
        print(f"  full == kohno+S in every degree: {all(same)}")


if __name__ == "__main__":
    main()
