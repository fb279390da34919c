"""Exact geometry of orbit polytopes over rational coordinates.

An orbit polytope is the convex hull of all coordinate permutations of a
point.  Everything here works with ``fractions.Fraction`` so that equality
of coordinates (which drives run-length grouping and vertex enumeration)
is exact.  The ground set carries a fixed linear order on its labels; the
chamber of points weakly decreasing along that order is the reference
chamber, and the composition of a point reads off the run lengths of its
sorted coordinate multiset.

Brute-force operations (vertex enumeration over all chambers, base
polytope verification) are guarded by a ground-set size bound, default
``DEFAULT_BOUND`` and overridable through the ``ORBITOPE_MAX_N``
environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby, permutations, product
from math import factorial
from typing import Iterable, Mapping

from .compositions import Composition
from .enumeration import distinct_permutations, subsets
from .jsonio import frac_from_str, frac_to_str

DEFAULT_BOUND = 8


def brute_force_bound(default: int = DEFAULT_BOUND) -> int:
    env = os.environ.get("ORBITOPE_MAX_N")
    return int(env) if env else default


def _check_bound(n: int, bound: int | None, default: int = DEFAULT_BOUND):
    limit = brute_force_bound(default) if bound is None else bound
    if n > limit:
        raise ValueError(f"brute-force bound exceeded: ground set of size {n} > {limit}")


@dataclass(frozen=True)
class GroundSet:
    """Finite ordered sequence of distinct labels; the order is the reference order."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"ground-set labels must be distinct: {labels}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.labels

    def restricted(self, keep: Iterable[str]) -> "GroundSet":
        """Sub-ground-set of the given labels, preserving the reference order."""
        keep = set(keep)
        missing = keep - set(self.labels)
        if missing:
            raise ValueError(f"labels {sorted(missing)} not in ground set")
        return GroundSet(tuple(l for l in self.labels if l in keep))


def standard_ground(n: int) -> GroundSet:
    """Ground set with labels "1".."n" in natural order."""
    return GroundSet(tuple(str(i) for i in range(1, n + 1)))


class Point:
    """Rational point indexed by a ground set's labels."""

    __slots__ = ("ground", "values")

    def __init__(self, ground: GroundSet, coords: Mapping[str, Fraction]):
        if set(coords) != set(ground.labels):
            raise ValueError("coordinates must be given for exactly the ground-set labels")
        self.ground = ground
        self.values = tuple(Fraction(coords[l]) for l in ground.labels)

    @classmethod
    def from_values(cls, ground: GroundSet, values: Iterable[Fraction]) -> "Point":
        values = tuple(values)
        return cls(ground, dict(zip(ground.labels, values)))

    def __getitem__(self, label: str) -> Fraction:
        return self.values[self.ground.labels.index(label)]

    def coords(self) -> dict[str, Fraction]:
        return dict(zip(self.ground.labels, self.values))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Point)
            and self.ground == other.ground
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.values))

    def __repr__(self) -> str:
        inner = ", ".join(f"{l}={v}" for l, v in zip(self.ground.labels, self.values))
        return f"Point({inner})"

    def to_json(self) -> dict[str, str]:
        return {l: frac_to_str(v) for l, v in zip(self.ground.labels, self.values)}

    @classmethod
    def from_json(cls, data, ground: GroundSet | None = None) -> "Point":
        if not isinstance(data, dict):
            raise ValueError(f"a point must be a JSON object, got {data!r}")
        coords = {str(k): frac_from_str(v) for k, v in data.items()}
        if ground is None:
            ground = GroundSet(tuple(data.keys()))
        return cls(ground, coords)


@dataclass(frozen=True)
class OrderedSetPartition:
    """Sequence of disjoint nonempty label sets covering a ground set."""

    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        total = sum(len(b) for b in blocks)
        union = set().union(*blocks) if blocks else set()
        if len(union) != total:
            raise ValueError("blocks must be pairwise disjoint")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def support(self) -> frozenset:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()


class SubmodularOracle:
    """Set function z on a ground set with z(emptyset) = 0, tabulated on all subsets."""

    def __init__(self, ground: GroundSet, values: Mapping[frozenset, Fraction]):
        values = {frozenset(k): Fraction(v) for k, v in values.items()}
        expected = {frozenset(s) for s in subsets(ground.labels)}
        if set(values) != expected:
            raise ValueError("values must be given for every subset of the ground set")
        if values[frozenset()] != 0:
            raise ValueError("z(emptyset) must be 0")
        self.ground = ground
        self.values = values

    def __call__(self, S: Iterable[str]) -> Fraction:
        return self.values[frozenset(S)]

    def is_submodular(self) -> bool:
        """Exhaustive check of z(S&T) + z(S|T) <= z(S) + z(T) over all pairs."""
        sets = list(self.values)
        for S in sets:
            for T in sets:
                if self.values[S & T] + self.values[S | T] > self.values[S] + self.values[T]:
                    return False
        return True

    def is_cardinality_invariant(self) -> bool:
        """True iff z(S) depends only on |S|."""
        by_size: dict[int, Fraction] = {}
        for S, v in self.values.items():
            if by_size.setdefault(len(S), v) != v:
                return False
        return True


def sorted_values(p: Point) -> tuple[Fraction, ...]:
    return tuple(sorted(p.values, reverse=True))


def composition_of_point(p: Point) -> Composition:
    """Run lengths of the coordinate multiset sorted in decreasing order."""
    return Composition(len(list(run)) for _, run in groupby(sorted_values(p)))


def orbit_vertices(p: Point) -> set[Point]:
    """All distinct coordinate rearrangements of p; these are the orbit polytope's vertices."""
    return {
        Point.from_values(p.ground, arrangement)
        for arrangement in distinct_permutations(p.values)
    }


def level_partition(y: Mapping[str, Fraction], ground: GroundSet) -> OrderedSetPartition:
    """Level sets of the functional y, ordered by decreasing value."""
    levels: dict[Fraction, set[str]] = {}
    for label in ground.labels:
        levels.setdefault(Fraction(y[label]), set()).add(label)
    blocks = tuple(frozenset(levels[v]) for v in sorted(levels, reverse=True))
    return OrderedSetPartition(blocks)


def max_face_vertices(p: Point, y: Mapping[str, Fraction]) -> set[Point]:
    """Vertices of the orbit polytope of p on which the functional y is maximal.

    The maximizers place the largest |S_1| coordinates in the top level set
    S_1 of y, the next largest in S_2, and so on, in every arrangement
    within each level set.
    """
    if set(y) != set(p.ground.labels):
        raise ValueError("functional must be defined on exactly the ground-set labels")
    partition = level_partition(y, p.ground)
    values = sorted_values(p)
    per_block: list[list[tuple[str, ...]]] = []
    block_labels: list[tuple[str, ...]] = []
    start = 0
    for block in partition:
        chunk = values[start:start + len(block)]
        start += len(block)
        block_labels.append(tuple(sorted(block)))
        per_block.append(list(distinct_permutations(chunk)))
    out = set()
    for choice in product(*per_block):
        coords: dict[str, Fraction] = {}
        for labels, arrangement in zip(block_labels, choice):
            coords.update(zip(labels, arrangement))
        out.add(Point(p.ground, coords))
    return out


def submodular_of_orbit(p: Point) -> SubmodularOracle:
    """z(S) = sum of the |S| largest coordinates of p; the half-space data of the orbit polytope."""
    values = sorted_values(p)
    prefix = [Fraction(0)]
    for v in values:
        prefix.append(prefix[-1] + v)
    table = {frozenset(S): prefix[len(S)] for S in subsets(p.ground.labels)}
    return SubmodularOracle(p.ground, table)


def check_base_polytope(p: Point, bound: int | None = None) -> bool:
    """Verify the half-space description against the vertex description.

    Every orbit vertex must satisfy sum(x) = z(I) and sum over S <= z(S)
    for each proper nonempty S, and each such inequality must be attained
    with equality by some vertex.  Subsets are scanned as bitmasks over
    the label positions, sharing one addition per (vertex, subset) pair.
    """
    n = len(p.ground)
    _check_bound(n, bound)
    values = sorted_values(p)
    prefix = [Fraction(0)]
    for v in values:
        prefix.append(prefix[-1] + v)
    size = 1 << n
    best: list[Fraction | None] = [None] * size
    zero = Fraction(0)
    for vertex in orbit_vertices(p):
        vals = vertex.values
        sums = [zero] * size
        for m in range(1, size):
            low = (m & -m).bit_length() - 1
            s = sums[m & (m - 1)] + vals[low]
            sums[m] = s
            if best[m] is None or s > best[m]:
                best[m] = s
        if sums[size - 1] != prefix[n]:
            return False
    for m in range(1, size - 1):
        # max over vertices must meet z(S) exactly: <= is validity, == is tightness
        if best[m] != prefix[bin(m).count("1")]:
            return False
    return True


def chamber_census(p: Point, bound: int | None = None) -> dict[tuple[str, ...], Point]:
    """For each total order on the labels, the unique orbit vertex weakly sorted along it.

    An order (l_1, ..., l_n) stands for the closed chamber x_{l_1} >= ... >= x_{l_n}.
    """
    n = len(p.ground)
    _check_bound(n, bound)
    values = sorted_values(p)
    census = {}
    for order in permutations(p.ground.labels):
        census[order] = Point(p.ground, dict(zip(order, values)))
    return census


def normally_equivalent(p: Point, q: Point) -> bool:
    """Same normal fan, decided combinatorially: equal compositions."""
    if len(p.ground) != len(q.ground):
        raise ValueError("points must have ground sets of equal size")
    return composition_of_point(p) == composition_of_point(q)


def face_decomposition(p: Point, S: Iterable[str]) -> tuple[Point, Point]:
    """Split p along S: the face maximizing the indicator of S is a product.

    Returns (q, q') where q lives on S and carries the |S| largest
    coordinates of p, and q' lives on the complement with the rest.
    """
    S = set(S)
    missing = S - set(p.ground.labels)
    if missing:
        raise ValueError(f"labels {sorted(missing)} not in ground set")
    values = sorted_values(p)
    ground_s = p.ground.restricted(S)
    ground_t = p.ground.restricted(set(p.ground.labels) - S)
    q = Point.from_values(ground_s, values[:len(S)])
    q_prime = Point.from_values(ground_t, values[len(S):])
    return q, q_prime


def representative_point(alpha: Composition, ground: GroundSet) -> Point:
    """A point with the given composition: values n-1, n-2, ... repeated along the parts."""
    n = alpha.weight
    if n != len(ground):
        raise ValueError(f"|{alpha}| = {n} does not match ground set of size {len(ground)}")
    values = []
    for j, part in enumerate(alpha.parts):
        values.extend([Fraction(n - 1 - j)] * part)
    return Point.from_values(ground, values)


def vertex_count(p: Point) -> int:
    """n! / prod(m_i!) for the multiplicities m_i of the coordinate multiset."""
    comp = composition_of_point(p)
    count = factorial(len(p.ground))
    for part in comp.parts:
        count //= factorial(part)
    return count
