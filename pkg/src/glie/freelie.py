"""Exact arithmetic in the free Lie ring over the integers.

Elements are stored by their coordinates in the Lyndon basis.  Brackets of
basis elements are computed by rewriting along standard factorizations and
memoized.  The associative envelope is used for the independent route:
expand both sides into noncommutative polynomials, take the commutator, and
read it back into Lyndon coordinates by triangular elimination.  That
elimination relies on the standard bracketing of a Lyndon word ``w``
expanding to ``w`` plus lexicographically larger words, with coefficient
exactly 1 on ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from glie.lyndon import (
    BracketTree,
    Word,
    enumerate_lyndon_words,
    is_lyndon,
    lyndon_index,
    standard_bracketing,
    standard_factorization,
    witt_rank,
)

# word -> nonzero integer coefficient, all words of one length
AssocPolynomial = dict[Word, int]


class NotALieElement(ValueError):
    pass


class AlphabetMismatch(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


def _add_into(acc: dict, other: Mapping, scale: int = 1) -> None:
    for key, c in other.items():
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def poly_mul(p: Mapping[Word, int], q: Mapping[Word, int]) -> AssocPolynomial:
    out: AssocPolynomial = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            c = out.get(w, 0) + a * b
            if c:
                out[w] = c
            else:
                del out[w]
    return out


def commutator(p: Mapping[Word, int], q: Mapping[Word, int]) -> AssocPolynomial:
    out = poly_mul(p, q)
    _add_into(out, poly_mul(q, p), -1)
    return out


def expand_tree(t: BracketTree) -> AssocPolynomial:
    """Associative image of a bracket tree: ``[l, r] -> lr - rl``."""
    if isinstance(t, int):
        return {(t,): 1}
    return commutator(expand_tree(t[0]), expand_tree(t[1]))


@lru_cache(maxsize=None)
def _basis_expansion(w: Word) -> tuple[tuple[Word, int], ...]:
    # sorted so the leading (smallest) word comes first
    return tuple(sorted(expand_tree(standard_bracketing(w)).items()))


@dataclass(frozen=True, eq=True)
class LieElement:
    """Homogeneous element of the free Lie ring on ``k`` generators.

    ``coords`` maps Lyndon words of length ``degree`` to nonzero integers.
    Treat instances as immutable.
    """

    k: int
    degree: int
    coords: dict[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1 or self.degree < 1:
            raise ValueError("alphabet size and degree must be positive")
        for w, c in self.coords.items():
            if len(w) != self.degree or not c:
                raise ValueError(f"bad coordinate {w!r}: {c!r} in degree {self.degree}")
            if max(w) >= self.k or min(w) < 0:
                raise ValueError(f"letter out of range in {w!r} for k={self.k}")
            if not is_lyndon(w):
                raise ValueError(f"{w!r} is not a Lyndon word")

    @classmethod
    def generator(cls, i: int, k: int) -> "LieElement":
        return cls(k, 1, {(i,): 1})

    @classmethod
    def zero(cls, k: int, degree: int) -> "LieElement":
        return cls(k, degree, {})

    @classmethod
    def from_vector(cls, vec: Iterable[int], k: int, degree: int) -> "LieElement":
        basis = enumerate_lyndon_words(k, degree)
        vec = list(vec)
        if len(vec) != len(basis):
            raise DegreeMismatch(f"vector of length {len(vec)} for witt rank {len(basis)}")
        return cls(k, degree, {w: c for w, c in zip(basis, vec) if c})

    def is_zero(self) -> bool:
        return not self.coords

    def _check(self, other: "LieElement") -> None:
        if self.k != other.k:
            raise AlphabetMismatch(f"alphabet sizes {self.k} and {other.k}")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        coords = dict(self.coords)
        _add_into(coords, other.coords)
        return LieElement(self.k, self.degree, coords)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement(self.k, self.degree, {w: -c for w, c in self.coords.items()})

    def __mul__(self, n: int) -> "LieElement":
        if not n:
            return LieElement.zero(self.k, self.degree)
        return LieElement(self.k, self.degree, {w: n * c for w, c in self.coords.items()})

    __rmul__ = __mul__

    def expand(self) -> AssocPolynomial:
        out: AssocPolynomial = {}
        for w, c in self.coords.items():
            _add_into(out, dict(_basis_expansion(w)), c)
        return out

    def vector(self) -> list[int]:
        return coordinate_vector(self, self.degree)

    def __repr__(self) -> str:
        if not self.coords:
            return f"LieElement(k={self.k}, degree={self.degree}, 0)"
        terms = " + ".join(f"{c}*[{''.join(map(str, w))}]" for w, c in sorted(self.coords.items()))
        return f"LieElement(k={self.k}, {terms})"


def to_lyndon_coordinates(p: Mapping[Word, int], k: int, degree: int | None = None) -> LieElement:
    """Read an associative polynomial back into Lyndon coordinates.

    Repeatedly the smallest word in the support must be Lyndon; its
    coefficient is the coordinate of that basis element, whose expansion is
    then subtracted.
    """
    rest = {w: c for w, c in p.items() if c}
    if degree is None:
        if not rest:
            raise ValueError("degree is required for the zero polynomial")
        degree = len(next(iter(rest)))
    coords: dict[Word, int] = {}
    while rest:
        w = min(rest)
        if len(w) != degree:
            raise NotALieElement(f"inhomogeneous polynomial: word {w!r} in degree {degree}")
        if not is_lyndon(w):
            raise NotALieElement(f"leading word {w!r} is not Lyndon")
        c = rest[w]
        coords[w] = c
        for u, b in _basis_expansion(w):
            v = rest.get(u, 0) - c * b
            if v:
                rest[u] = v
            else:
                del rest[u]
    return LieElement(k, degree, coords)


def _accumulate(acc: dict[Word, int], terms, scale: int) -> None:
    for w, c in terms:
        v = acc.get(w, 0) + scale * c
        if v:
            acc[w] = v
        else:
            del acc[w]


@lru_cache(maxsize=None)
def _bracket_basis(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """Lyndon coordinates of ``[P_u, P_v]`` for Lyndon words ``u``, ``v``.

    For ``u < v`` the word ``uv`` is Lyndon, and its standard factorization is
    ``(u, v)`` when ``u`` is a letter or the right factor of ``u`` is ``>= v``.
    Otherwise ``u = (u1, u2)`` and Jacobi gives
    ``[[u1, u2], v] = [u1, [u2, v]] + [[u1, v], u2]``.
    """
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in _bracket_basis(v, u))
    if len(u) == 1:
        return ((u + v, 1),)
    u1, u2 = standard_factorization(u)
    if u2 >= v:
        return ((u + v, 1),)
    acc: dict[Word, int] = {}
    for w, c in _bracket_basis(u2, v):
        _accumulate(acc, _bracket_basis(u1, w), c)
    for w, c in _bracket_basis(u1, v):
        _accumulate(acc, _bracket_basis(w, u2), c)
    return tuple(sorted(acc.items()))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    if x.k != y.k:
        raise AlphabetMismatch(f"alphabet sizes {x.k} and {y.k}")
    coords: dict[Word, int] = {}
    for u, a in x.coords.items():
        for v, b in y.coords.items():
            for w, c in _bracket_basis(u, v):
                s = coords.get(w, 0) + a * b * c
                if s:
                    coords[w] = s
                else:
                    del coords[w]
    return LieElement(x.k, x.degree + y.degree, coords)


def bracket_by_expansion(x: LieElement, y: LieElement) -> LieElement:
    """Bracket computed in the associative envelope; independent of the rewriting in :func:`bracket`."""
    if x.k != y.k:
        raise AlphabetMismatch(f"alphabet sizes {x.k} and {y.k}")
    return to_lyndon_coordinates(commutator(x.expand(), y.expand()), x.k, x.degree + y.degree)


def coordinate_vector(x: LieElement, d: int) -> list[int]:
    """Dense coordinates of ``x`` in the lexicographically ordered Lyndon basis of degree ``d``."""
    if x.degree != d:
        raise DegreeMismatch(f"element of degree {x.degree} requested in degree {d}")
    index = lyndon_index(x.k, d)
    vec = [0] * witt_rank(x.k, d)
    for w, c in x.coords.items():
        vec[index[w]] = c
    return vec


def sparse_vector(x: LieElement) -> dict[int, int]:
    index = lyndon_index(x.k, x.degree)
    return {index[w]: c for w, c in x.coords.items()}


def from_sparse(vec: Mapping[int, int], k: int, degree: int) -> LieElement:
    basis = enumerate_lyndon_words(k, degree)
    return LieElement(k, degree, {basis[i]: c for i, c in vec.items() if c})
