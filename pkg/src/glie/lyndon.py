"""Lyndon words, their standard bracketings, and Witt dimension counts.

Words are tuples of 0-based letter indices.  A bracket tree is either an
``int`` (a leaf) or a pair ``(left, right)`` of trees.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Union

from sympy import divisors, mobius

Word = tuple[int, ...]
BracketTree = Union[int, tuple["BracketTree", "BracketTree"]]


def _check_args(k: int, d: int) -> None:
    if k < 1 or d < 1:
        raise ValueError(f"alphabet size and degree must be >= 1, got k={k}, d={d}")


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is nonempty and strictly smaller than each proper rotation."""
    n = len(w)
    if n == 0:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, n))


def _duval(k: int, d: int) -> Iterator[Word]:
    # Duval's next-word generator: yields all Lyndon words of length <= d in
    # lexicographic order.
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < d:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


@lru_cache(maxsize=None)
def enumerate_lyndon_words(k: int, d: int) -> tuple[Word, ...]:
    """All Lyndon words of length ``d`` over ``k`` letters, in lexicographic order."""
    _check_args(k, d)
    return tuple(w for w in _duval(k, d) if len(w) == d)


@lru_cache(maxsize=None)
def witt_rank(k: int, d: int) -> int:
    """Rank of the degree-``d`` component of the free Lie ring on ``k`` generators."""
    _check_args(k, d)
    total = sum(mobius(e) * k ** (d // e) for e in divisors(d))
    return int(total) // d


@lru_cache(maxsize=None)
def lyndon_index(k: int, d: int) -> dict[Word, int]:
    return {w: i for i, w in enumerate(enumerate_lyndon_words(k, d))}


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as ``u + v`` with ``v`` its longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w!r} has no proper Lyndon suffix")


@lru_cache(maxsize=None)
def standard_bracketing(w: Word) -> BracketTree:
    w = tuple(w)
    if not is_lyndon(w):
        raise ValueError(f"{w!r} is not a Lyndon word")
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (standard_bracketing(u), standard_bracketing(v))


def leaves(t: BracketTree) -> Word:
    if isinstance(t, int):
        return (t,)
    return leaves(t[0]) + leaves(t[1])


def tree_degree(t: BracketTree) -> int:
    return len(leaves(t))
