"""Print rank/torsion tables for every presentation over a range of n."""
import argparse
import time

from glie.gradedquotient import hilbert_table, torsion_text
from glie.presentations import BUILDERS, MIN_N, build


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--presentation", choices=list(BUILDERS), nargs="*", default=list(BUILDERS))
    args = ap.parse_args()
    for n in args.n:
        for name in args.presentation:
            if n < MIN_N[name]:
                continue
            t = time.perf_counter()
            rows = hilbert_table(build(name, n), args.max_degree)
            cells = ", ".join(
                f"{r.free_rank}" + (f"+{torsion_text(r.torsion)}" if r.torsion else "") for r in rows
            )
            print(f"{name:<15} n={n}  [{cells}]  ({time.perf_counter() - t:.2f}s)")
        print()


if __name__ == "__main__":
    main()
