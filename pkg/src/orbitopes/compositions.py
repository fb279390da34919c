"""Integer compositions and their splitting calculus.

A composition is a finite sequence of positive integers (possibly empty).
Compositions index the normal equivalence classes of orbit polytopes, and
the two joining operations ``concat`` and ``near_concat`` are the two ways
a composition can be cut in half at a given weight.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Composition:
    """Immutable sequence of positive integers; the empty composition is allowed."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __lt__(self, other: "Composition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Composition{self.parts}"

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")


EMPTY = Composition()


def concat(beta: Composition, gamma: Composition) -> Composition:
    """Join two compositions end to end."""
    return Composition(beta.parts + gamma.parts)


def near_concat(beta: Composition, gamma: Composition) -> Composition:
    """Join two nonempty compositions, merging the boundary parts into one."""
    if not beta or not gamma:
        raise ValueError("near-concatenation requires nonempty operands")
    return Composition(beta.parts[:-1] + (beta.parts[-1] + gamma.parts[0],) + gamma.parts[1:])


@lru_cache(maxsize=None)
def splits(alpha: Composition) -> tuple[tuple[Composition, Composition], ...]:
    """All cuts of ``alpha``, one per left weight i = 0..|alpha|.

    The i-th entry is the unique pair (beta, gamma) with beta of weight i
    such that concat(beta, gamma) or near_concat(beta, gamma) gives back
    ``alpha``.  A cut that lands between two parts is a concatenation; a
    cut through the interior of a part is a near-concatenation.
    """
    out = []
    for i in range(alpha.weight + 1):
        out.append(restrict_contract(alpha, i))
    return tuple(out)


@lru_cache(maxsize=None)
def restrict_contract(alpha: Composition, i: int) -> tuple[Composition, Composition]:
    """Cut ``alpha`` after total weight ``i``: the i-th entry of splits(alpha)."""
    if not 0 <= i <= alpha.weight:
        raise ValueError(f"cut weight {i} out of range for {alpha}")
    acc = 0
    for j, part in enumerate(alpha.parts):
        if acc == i:
            return Composition(alpha.parts[:j]), Composition(alpha.parts[j:])
        if acc + part > i:
            # the cut falls inside part j, splitting it in two
            left = alpha.parts[:j] + (i - acc,)
            right = (acc + part - i,) + alpha.parts[j + 1:]
            return Composition(left), Composition(right)
        acc += part
    return alpha, EMPTY


def iterated_restrict(alpha: Composition, sizes: Sequence[int]) -> list[Composition]:
    """Cut ``alpha`` into consecutive pieces of the given weights.

    Reassembling the pieces with concatenation (at cuts between parts) and
    near-concatenation (at cuts through a part) recovers ``alpha``.
    """
    if any(s < 0 for s in sizes):
        raise ValueError("piece sizes must be nonnegative")
    if sum(sizes) != alpha.weight:
        raise ValueError(f"sizes {list(sizes)} do not sum to |{alpha}| = {alpha.weight}")
    pieces = []
    rest = alpha
    for s in sizes:
        piece, rest = restrict_contract(rest, s)
        pieces.append(piece)
    return pieces


def refinements(alpha: Composition) -> list[Composition]:
    """All compositions obtained by splitting each part of ``alpha`` in place."""
    if not alpha:
        return [EMPTY]
    out = [EMPTY]
    for part in alpha.parts:
        out = [concat(prefix, piece) for prefix in out for piece in compositions_of(part)]
    return out


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All 2^(n-1) compositions of n, in lexicographic order on part sequences."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append(Composition((first,) + rest.parts))
    return tuple(out)  # lexicographic by construction


def multinomial(n: int, gamma: Composition) -> int:
    """n! / (gamma_1! ... gamma_k!), exact."""
    if gamma.weight != n:
        raise ValueError(f"{gamma} is not a composition of {n}")
    result = math.factorial(n)
    for part in gamma.parts:
        result //= math.factorial(part)
    return result
