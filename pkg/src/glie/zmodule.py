"""Integer lattices: Hermite normal form, Smith invariants, membership.

Rows are kept sparse (``{column: value}``) because the lattices built by the
graded quotient engine live in spaces of a few thousand dimensions with short
rows.  ``SubgroupBasis`` is incremental: rows can be appended at any time and
the canonical Hermite form is recomputed lazily.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Row = Union[Mapping[int, int], Sequence[int]]


class DimensionMismatch(ValueError):
    pass


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _as_sparse(row: Row, ambient: int) -> dict[int, int]:
    if isinstance(row, Mapping):
        out = {int(j): int(c) for j, c in row.items() if c}
        if out and (min(out) < 0 or max(out) >= ambient):
            raise DimensionMismatch(f"column index out of range for ambient dimension {ambient}")
        return out
    if len(row) != ambient:
        raise DimensionMismatch(f"row of length {len(row)} in ambient dimension {ambient}")
    return {j: int(c) for j, c in enumerate(row) if c}


def _axpy(v: dict[int, int], q: int, p: Mapping[int, int]) -> None:
    """v -= q * p, in place."""
    for j, c in p.items():
        x = v.get(j, 0) - q * c
        if x:
            v[j] = x
        else:
            v.pop(j, None)


class SubgroupBasis:
    """Sublattice of ``Z^ambient`` spanned by rows, kept in echelon form.

    ``rows()`` returns the canonical row Hermite form: echelon, positive
    pivots, entries above each pivot reduced into ``[0, pivot)``.
    """

    __slots__ = ("ambient", "_piv", "_canonical")

    def __init__(self, ambient: int, rows: Iterable[Row] = ()):
        if ambient < 0:
            raise ValueError("ambient dimension must be nonnegative")
        self.ambient = ambient
        self._piv: dict[int, dict[int, int]] = {}
        self._canonical: dict[int, dict[int, int]] | None = {}
        self.extend(rows)

    def copy(self) -> "SubgroupBasis":
        other = SubgroupBasis(self.ambient)
        other._piv = {c: dict(r) for c, r in self._piv.items()}
        other._canonical = None
        return other

    @property
    def rank(self) -> int:
        return len(self._piv)

    def add(self, row: Row) -> bool:
        """Add a generator; return True iff the lattice grew."""
        v = _as_sparse(row, self.ambient)
        grew = False
        piv = self._piv
        while v:
            c = min(v)
            p = piv.get(c)
            if p is None:
                if v[c] < 0:
                    v = {j: -x for j, x in v.items()}
                piv[c] = self._reduce_tail(v, c)
                grew = True
                break
            a, b = p[c], v[c]
            q = b // a
            if q:
                _axpy(v, q, p)
            if c not in v:
                continue
            # remainder nonzero: replace the pivot row by the gcd combination
            b = v[c]
            g, s, t = xgcd(a, b)
            new = {j: s * x for j, x in p.items()} if s else {}
            _axpy(new, -t, v)
            rest = {j: (a // g) * x for j, x in v.items()}
            _axpy(rest, b // g, p)
            piv[c] = self._reduce_tail(new, c)
            v = rest
            grew = True
        if grew:
            self._canonical = None
        return grew

    def _reduce_tail(self, v: dict[int, int], c: int) -> dict[int, int]:
        # reduce entries right of the pivot modulo the existing pivots; keeps
        # coefficients bounded and, near full rank, rows short
        piv = self._piv
        todo = [j for j in v if j > c and j in piv]
        heapq.heapify(todo)
        while todo:
            j = heapq.heappop(todo)
            x = v.get(j)
            if not x:
                continue
            p = piv[j]
            q = x // p[j]
            if not q:
                continue
            for i in p:
                if i != j and i in piv and i not in v:
                    heapq.heappush(todo, i)
            _axpy(v, q, p)
        return v

    def extend(self, rows: Iterable[Row]) -> None:
        for r in rows:
            self.add(r)

    def _canonicalize(self) -> dict[int, dict[int, int]]:
        if self._canonical is not None:
            return self._canonical
        rows = {c: dict(r) for c, r in self._piv.items()}
        cols = sorted(rows)
        # columns where some row has a nonzero entry, to avoid scanning every row
        holders: dict[int, set[int]] = {}
        for c, r in rows.items():
            for j in r:
                if j != c:
                    holders.setdefault(j, set()).add(c)
        for c in cols:
            p = rows[c]
            a = p[c]
            for rc in sorted(holders.get(c, ())):
                r = rows[rc]
                x = r.get(c, 0)
                if not x:
                    continue
                q = x // a
                if not q:
                    continue
                for j, y in p.items():
                    z = r.get(j, 0) - q * y
                    if z:
                        if j not in r and j != rc:
                            holders.setdefault(j, set()).add(rc)
                        r[j] = z
                    else:
                        r.pop(j, None)
        self._canonical = rows
        return rows

    def sparse_rows(self) -> list[dict[int, int]]:
        can = self._canonicalize()
        return [dict(can[c]) for c in sorted(can)]

    def echelon_rows(self) -> list[dict[int, int]]:
        """Unreduced echelon generators; same lattice, usually sparser."""
        return [self._piv[c] for c in sorted(self._piv)]

    def rows(self) -> list[list[int]]:
        out = []
        for r in self.sparse_rows():
            dense = [0] * self.ambient
            for j, c in r.items():
                dense[j] = c
            out.append(dense)
        return out

    def pivots(self) -> list[tuple[int, int]]:
        """(column, pivot value) pairs in column order."""
        return [(c, self._piv[c][c]) for c in sorted(self._piv)]

    def __contains__(self, v: Row) -> bool:
        return lattice_member(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupBasis):
            return NotImplemented
        return self.ambient == other.ambient and self.sparse_rows() == other.sparse_rows()

    def __repr__(self) -> str:
        return f"SubgroupBasis(ambient={self.ambient}, rows={self.rows()})"


def hermite_form(m: Iterable[Row], ambient: int | None = None) -> SubgroupBasis:
    m = list(m)
    if ambient is None:
        if not m or isinstance(m[0], Mapping):
            raise ValueError("ambient dimension required for empty or sparse input")
        ambient = len(m[0])
    return SubgroupBasis(ambient, m)


def lattice_member(b: SubgroupBasis, v: Row) -> bool:
    v = _as_sparse(v, b.ambient)
    piv = b._piv
    while v:
        c = min(v)
        p = piv.get(c)
        if p is None:
            return False
        q, r = divmod(v[c], p[c])
        if r:
            return False
        _axpy(v, q, p)
    return True


@dataclass(frozen=True)
class QuotientInvariants:
    """Cokernel ``Z^free_rank + Z/t_1 + ... + Z/t_r`` with ``t_i | t_{i+1}``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} breaks the divisibility chain")


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors (including 1s, excluding zeros) of a dense integer matrix."""
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot on the smallest nonzero entry of the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a[t:]:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # entries of the block not divisible by the pivot get folded into row t
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, cols):
                    rt[j] += rb[j]
                dirty = True
            # move the smallest nonzero of row/column t onto the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return _normalize_diagonal(diag)


def _normalize_diagonal(diag: list[int]) -> list[int]:
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def quotient_invariants(b: SubgroupBasis) -> QuotientInvariants:
    """Invariants of ``Z^ambient / b``.

    Reducing a vector by the unit-pivot rows until it vanishes on their pivot
    columns is a surjection onto the remaining coordinates whose kernel is
    the span of those rows.  So only the rows with pivot > 1 need that
    reduction followed by a genuine Smith computation.
    """
    piv = b._piv
    units = {c: r for c, r in piv.items() if r[c] == 1}
    hard = [piv[c] for c in sorted(piv) if c not in units]
    torsion: list[int] = []
    if hard:
        reduced = [_clear_columns(r, units) for r in hard]
        cols = sorted({j for r in reduced for j in r})
        pos = {j: i for i, j in enumerate(cols)}
        dense = []
        for r in reduced:
            d = [0] * len(cols)
            for j, c in r.items():
                d[pos[j]] = c
            dense.append(d)
        torsion = [x for x in smith_diagonal(dense) if x > 1]
    return QuotientInvariants(b.ambient - b.rank, tuple(torsion))


def _clear_columns(row: Mapping[int, int], units: Mapping[int, Mapping[int, int]]) -> dict[int, int]:
    v = dict(row)
    todo = [c for c in v if c in units]
    heapq.heapify(todo)
    while todo:
        c = heapq.heappop(todo)
        x = v.get(c)
        if not x:
            continue
        u = units[c]
        for j in u:
            if j != c and j in units and j not in v:
                heapq.heappush(todo, j)
        _axpy(v, x, u)
    return v


def smith_invariants(m: Iterable[Row], ncols: int | None = None) -> QuotientInvariants:
    """Invariants of the cokernel ``Z^ncols / rowspace(m)``."""
    return quotient_invariants(hermite_form(m, ncols))
