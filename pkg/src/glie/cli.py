"""Command line front end: ``table``, ``verify``, ``list-presentations``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from glie import __version__
from glie.checks import CHECKS, run_check
from glie.gradedquotient import hilbert_table, torsion_text, worker_count
from glie.presentations import BUILDERS, MIN_N, build


@dataclass
class TableRow:
    degree: int
    witt: int
    rank: int
    torsion: list[int]


@dataclass
class TableDocument:
    presentation: str
    n: int
    rows: list[TableRow]
    version: str = __version__
    timing: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> str:
        doc = {
            "presentation": self.presentation,
            "n": self.n,
            "rows": [asdict(r) for r in self.rows],
            "version": self.version,
        }
        if timing:
            doc["metadata"] = {"timing": self.timing}
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TableDocument":
        doc = json.loads(text)
        return cls(
            doc["presentation"],
            doc["n"],
            [TableRow(**r) for r in doc["rows"]],
            doc["version"],
            doc.get("metadata", {}).get("timing", {}),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "witt", "rank", "torsion"])
        for r in self.rows:
            w.writerow([r.degree, r.witt, r.rank, ";".join(map(str, r.torsion))])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.presentation}  n={self.n}", f"{'degree':>6} {'witt':>8} {'rank':>8}  torsion"]
        for r in self.rows:
            tors = torsion_text(r.torsion)
            lines.append(f"{r.degree:>6} {r.witt:>8} {r.rank:>8}  {tors}")
        if self.timing:
            lines.append(f"total {self.timing.get('total', 0.0):.3f}s")
        return "\n".join(lines) + "\n"


def make_table(name: str, n: int, dmax: int) -> TableDocument:
    started = time.perf_counter()
    reports = hilbert_table(build(name, n), dmax)
    rows = [TableRow(r.degree, r.witt, r.free_rank, list(r.torsion)) for r in reports]
    timing = {"total": time.perf_counter() - started, "per_degree": [r.elapsed for r in reports]}
    return TableDocument(name, n, rows, timing=timing)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glie", description="Graded Lie rings of pure braid and pure mapping class groups."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="free rank and torsion per degree")
    t.add_argument("--presentation", required=True, choices=sorted(BUILDERS))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--max-degree", type=int, default=4)
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--timing", action="store_true", help="add a timing metadata block to json output")

    v = sub.add_parser("verify", help="run a named verification")
    v.add_argument("check_name", nargs="?", choices=sorted(CHECKS), metavar="CHECK")
    v.add_argument("--check", choices=sorted(CHECKS))
    v.add_argument("--n", type=int)
    v.add_argument("--max-degree", type=int)
    v.add_argument("--quiet", action="store_true", help="print only the summary line")

    sub.add_parser("list-presentations", help="names accepted by --presentation")
    return parser


def _usage_error(msg: str) -> int:
    print(f"glie: error: {msg}", file=sys.stderr)
    return 2


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        worker_count()
    except ValueError as e:
        return _usage_error(str(e))

    if args.command == "list-presentations":
        for name in BUILDERS:
            print(f"{name:<16} n >= {MIN_N[name]}")
        return 0

    if args.command == "table":
        if args.max_degree < 1:
            return _usage_error("--max-degree must be >= 1")
        try:
            doc = make_table(args.presentation, args.n, args.max_degree)
        except ValueError as e:
            return _usage_error(str(e))
        if args.format == "json":
            sys.stdout.write(doc.to_json(timing=args.timing))
        elif args.format == "csv":
            sys.stdout.write(doc.to_csv())
        else:
            sys.stdout.write(doc.to_text())
        return 0

    name = args.check or args.check_name
    if name is None:
        return _usage_error(f"verify needs a check name: {', '.join(sorted(CHECKS))}")
    if args.check and args.check_name and args.check != args.check_name:
        return _usage_error("conflicting check names")
    try:
        result = run_check(name, args.n, args.max_degree)
    except ValueError as e:
        return _usage_error(str(e))
    if not args.quiet:
        for line in result.lines:
            print(line)
    print(f"{result.name}: {'PASS' if result.passed else 'FAIL'}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
