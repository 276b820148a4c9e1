"""Braid identities checked through the Artin action on a free group.

The Artin representation ``Br_n -> Aut(F_n)`` is faithful, so two braid words
are equal in the disc braid group iff their actions agree on every free
generator.  Free group words are tuples of nonzero ints (``-i`` is the inverse
of ``x_i``), always stored freely reduced.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

FreeWord = tuple[int, ...]


def reduce(w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for a in w:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(w: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(w))


def mul(*words: FreeWord) -> FreeWord:
    return reduce(a for w in words for a in w)


@dataclass(frozen=True)
class BraidWord:
    """``letters`` holds signed indices: ``+i`` is sigma_i, ``-i`` its inverse."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for a in self.letters:
            if a == 0 or abs(a) >= self.n:
                raise ValueError(f"letter {a} out of range for {self.n} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same_strands(self, other)
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, e: int) -> "BraidWord":
        if e < 0:
            return self.inverse() ** -e
        return BraidWord(self.n, self.letters * e)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Image in the symmetric group: entry ``p`` is where the strand starting at ``p`` ends (0-based)."""
        pos = list(range(self.n))  # pos[p] = strand currently at position p
        for a in self.letters:
            i = abs(a) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        end = [0] * self.n
        for p, strand in enumerate(pos):
            end[strand] = p
        return tuple(end)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)


def _same_strands(a: BraidWord, b: BraidWord) -> None:
    if a.n != b.n:
        raise ValueError(f"strand mismatch: {a.n} and {b.n}")


def sigma(i: int, n: int, e: int = 1) -> BraidWord:
    return BraidWord(n, (i,) * e if e >= 0 else (-i,) * -e)


def word(n: int, *parts: BraidWord | Sequence[int]) -> BraidWord:
    letters: list[int] = []
    for p in parts:
        letters.extend(p.letters if isinstance(p, BraidWord) else p)
    return BraidWord(n, tuple(letters))


@dataclass(frozen=True)
class FreeGroupEndomorphism:
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> "FreeGroupEndomorphism":
        return cls(tuple((i,) for i in range(1, n + 1)))

    def apply(self, w: FreeWord) -> FreeWord:
        return reduce(a for x in w for a in (self.images[x - 1] if x > 0 else invert(self.images[-x - 1])))

    def compose(self, inner: "FreeGroupEndomorphism") -> "FreeGroupEndomorphism":
        """``self o inner``: apply ``inner`` first."""
        return FreeGroupEndomorphism(tuple(self.apply(w) for w in inner.images))

    def abelianized(self) -> list[list[int]]:
        rows = []
        for w in self.images:
            r = [0] * len(self.images)
            for a in w:
                r[abs(a) - 1] += 1 if a > 0 else -1
            rows.append(r)
        return rows


def artin_action(b: BraidWord) -> FreeGroupEndomorphism:
    """Automorphism of ``F_n`` with ``action(uv) = action(u) o action(v)``.

    ``sigma_i``: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``; others fixed.
    """
    imgs = [(i,) for i in range(1, b.n + 1)]
    # right-multiplying by a letter s precomposes with action(s), which only
    # touches the images of x_i and x_{i+1}
    for a in b.letters:
        i = abs(a) - 1
        u, v = imgs[i], imgs[i + 1]
        if a > 0:
            imgs[i], imgs[i + 1] = mul(u, v, invert(u)), u
        else:
            imgs[i], imgs[i + 1] = v, mul(invert(v), u, v)
    return FreeGroupEndomorphism(tuple(imgs))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    _same_strands(a, b)
    return artin_action(a) == artin_action(b)


def is_trivial(b: BraidWord) -> bool:
    return artin_action(b) == FreeGroupEndomorphism.identity(b.n)


def pure_generator_word(i: int, j: int, n: int) -> BraidWord:
    """``a_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    conj = tuple(range(j - 1, i, -1))
    return BraidWord(n, conj + (i, i) + tuple(-a for a in reversed(conj)))


def garside_prefix(t: int, n: int) -> BraidWord:
    """``Pi_t = s_1 ... s_t``."""
    return BraidWord(n, tuple(range(1, t + 1)))


def delta_word(n: int) -> BraidWord:
    """Garside's half twist ``Pi_{n-1} ... Pi_1``."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return word(n, *(garside_prefix(t, n) for t in range(n - 1, 0, -1)))


def delta_squared_product(n: int) -> BraidWord:
    """``(a_12 ... a_1n)(a_23 ... a_2n) ... (a_{n-1,n})``."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return word(n, *(pure_generator_word(i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)))


def delta_squared_columns(n: int) -> BraidWord:
    """``(a_12)(a_13 a_23) ... (a_1n ... a_{n-1,n})``."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return word(n, *(pure_generator_word(i, j, n) for j in range(2, n + 1) for i in range(1, j)))


@dataclass
class RelationCheck:
    family: str
    indices: tuple[int, ...]
    lhs: BraidWord
    rhs: BraidWord
    passed: bool


@dataclass
class VerificationReport:
    name: str
    n: int
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]


def verify_burau_relations(n: int) -> VerificationReport:
    """Check every instance of the four pure braid relation families on ``n`` strands."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    report = VerificationReport("burau", n)

    def a(i, j):
        return pure_generator_word(i, j, n)

    def check(family, idx, lhs, rhs):
        report.checks.append(RelationCheck(family, idx, lhs, rhs, braids_equal(lhs, rhs)))

    for i, j, k, l in combinations(range(1, n + 1), 4):
        # disjoint and nested pairs commute
        check("commute i<j<k<l", (i, j, k, l), a(i, j) * a(k, l), a(k, l) * a(i, j))
        check("commute i<k<l<j", (i, l, j, k), a(i, l) * a(j, k), a(j, k) * a(i, l))
    for i, j, k in combinations(range(1, n + 1), 3):
        check("triangle 1", (i, j, k), a(i, j) * a(i, k) * a(j, k), a(i, k) * a(j, k) * a(i, j))
        check("triangle 2", (i, j, k), a(i, k) * a(j, k) * a(i, j), a(j, k) * a(i, j) * a(i, k))
    for i, j, k, l in combinations(range(1, n + 1), 4):
        conj = a(j, k) * a(j, l) * a(j, k).inverse()
        check("conjugate", (i, j, k, l), a(i, k) * conj, conj * a(i, k))
    return report


def verify_delta_squared(n: int) -> bool:
    d2 = delta_word(n) ** 2
    return braids_equal(d2, delta_squared_product(n)) and braids_equal(d2, delta_squared_columns(n))


def verify_magnus_equivalence(n: int) -> bool:
    """``(s_1 ... s_{n-1})^n == Delta^2`` in the disc braid group."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return braids_equal(garside_prefix(n - 1, n) ** n, delta_word(n) ** 2)


def centrality_check(n: int) -> bool:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    d2 = delta_word(n) ** 2
    return all(braids_equal(d2 * sigma(i, n), sigma(i, n) * d2) for i in range(1, n))


def sphere_relator(n: int) -> BraidWord:
    """``s_1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_1``."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    up = tuple(range(1, n - 1))
    return BraidWord(n, up + (n - 1, n - 1) + tuple(reversed(up)))


@dataclass(frozen=True)
class SphereSanity:
    n: int
    permutation: tuple[int, ...]
    exponent_sum: int
    trivial_in_disc_group: bool

    @property
    def passed(self) -> bool:
        return (
            self.permutation == tuple(range(self.n))
            and self.exponent_sum == 2 * (self.n - 1)
            and not self.trivial_in_disc_group
        )


def sphere_relator_sanity(n: int) -> SphereSanity:
    w = sphere_relator(n)
    return SphereSanity(n, w.permutation(), w.exponent_sum(), is_trivial(w))
