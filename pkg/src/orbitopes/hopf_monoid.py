"""Labeled orbit-polytope classes with merge and split operations.

An element over a finite label set is a partition of the labels into
blocks, each block carrying a composition of its size: the normal
equivalence class of a product of orbit polytopes.  Elements are kept in
canonical form, where a one-part composition (n) with n >= 2 never
appears on a block; such a factor is a point and is stored as n singleton
blocks carrying (1).  Equality of elements is then plain set comparison.

``mu`` merges two elements over disjoint label sets; ``delta`` splits an
element along a subset, cutting each block's composition at the size of
its overlap with the subset.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .compositions import Composition, restrict_contract
from .jsonio import composition_from_json, composition_to_json

Block = tuple[frozenset, Composition]

ONE = Composition((1,))


class OrbitClassElement:
    """Canonical blocks-with-compositions structure over a finite label set."""

    __slots__ = ("ground", "blocks")

    def __init__(self, ground: Iterable[str], blocks: Iterable[Block]):
        ground = frozenset(ground)
        canonical = set()
        covered: set[str] = set()
        for labels, comp in blocks:
            labels = frozenset(labels)
            if not isinstance(comp, Composition):
                comp = Composition(comp)
            if comp.weight != len(labels):
                raise ValueError(f"composition {comp} does not fit block of size {len(labels)}")
            if not labels <= ground:
                raise ValueError("block labels must lie in the ground set")
            if covered & labels:
                raise ValueError("blocks must be disjoint")
            covered |= labels
            if len(comp) == 1 and comp.weight >= 2:
                # a one-part class is a point: decompose into singleton blocks
                canonical.update((frozenset([l]), ONE) for l in labels)
            elif labels:
                canonical.add((labels, comp))
        if covered != ground:
            raise ValueError("blocks must cover the ground set")
        self.ground = ground
        self.blocks = frozenset(canonical)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrbitClassElement)
            and self.ground == other.ground
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.blocks))

    def __repr__(self) -> str:
        parts = sorted(self.blocks, key=lambda b: min(b[0]))
        inner = " * ".join(f"O{tuple(c.parts)}@{{{','.join(sorted(b))}}}" for b, c in parts)
        return inner if inner else "O()@{}"

    def is_unit(self) -> bool:
        return not self.ground

    def to_json(self) -> dict:
        ordered = sorted(self.blocks, key=lambda b: min(b[0]))
        return {
            "ground": sorted(self.ground),
            "blocks": [
                {"labels": sorted(labels), "composition": composition_to_json(comp)}
                for labels, comp in ordered
            ],
        }

    @classmethod
    def from_json(cls, data) -> "OrbitClassElement":
        if not isinstance(data, dict) or "ground" not in data or "blocks" not in data:
            raise ValueError("an element must be a JSON object with 'ground' and 'blocks'")
        blocks = [
            (frozenset(b["labels"]), composition_from_json(b["composition"]))
            for b in data["blocks"]
        ]
        return cls(data["ground"], blocks)


UNIT = OrbitClassElement((), ())


def class_of(alpha: Composition, ground: Iterable[str]) -> OrbitClassElement:
    """The class of orbit polytopes with composition ``alpha`` over ``ground``."""
    ground = frozenset(ground)
    if alpha.weight != len(ground):
        raise ValueError(f"|{alpha}| = {alpha.weight} does not match {len(ground)} labels")
    if not ground:
        return UNIT
    return OrbitClassElement(ground, [(ground, alpha)])


def relabel(x: OrbitClassElement, sigma: Mapping[str, str]) -> OrbitClassElement:
    """Push the element through a bijection of label sets; compositions are untouched."""
    if set(sigma) != set(x.ground):
        raise ValueError("relabeling must be defined on exactly the ground set")
    image = set(sigma.values())
    if len(image) != len(x.ground):
        raise ValueError("relabeling must be a bijection")
    blocks = [(frozenset(sigma[l] for l in labels), comp) for labels, comp in x.blocks]
    return OrbitClassElement(image, blocks)


def mu(x: OrbitClassElement, y: OrbitClassElement) -> OrbitClassElement:
    """Merge two elements over disjoint label sets (the free commutative product)."""
    if x.ground & y.ground:
        raise ValueError(f"ground sets overlap: {sorted(x.ground & y.ground)}")
    return OrbitClassElement(x.ground | y.ground, list(x.blocks) + list(y.blocks))


def delta(x: OrbitClassElement, S: Iterable[str]) -> tuple[OrbitClassElement, OrbitClassElement]:
    """Split ``x`` along the subset S of its ground set.

    Each block B cuts at weight |B & S|: the block's composition restricts
    to the overlap and contracts to the rest.  Restriction depends only on
    the overlap size, so no order on S is needed.
    """
    S = frozenset(S)
    if not S <= x.ground:
        raise ValueError(f"labels {sorted(S - x.ground)} not in ground set")
    left_blocks: list[Block] = []
    right_blocks: list[Block] = []
    for labels, comp in x.blocks:
        inside = labels & S
        outside = labels - S
        left_part, right_part = restrict_contract(comp, len(inside))
        if inside:
            left_blocks.append((inside, left_part))
        if outside:
            right_blocks.append((outside, right_part))
    return (
        OrbitClassElement(S, left_blocks),
        OrbitClassElement(x.ground - S, right_blocks),
    )


def delta_iterated(x: OrbitClassElement, parts) -> list[OrbitClassElement]:
    """Split ``x`` along an ordered partition of its ground set.

    ``parts`` is any sequence of label collections (an OrderedSetPartition
    works); empty parts are allowed and produce unit factors.
    """
    part_sets = [frozenset(p) for p in parts]
    total = sum(len(p) for p in part_sets)
    union = frozenset().union(*part_sets) if part_sets else frozenset()
    if union != x.ground or total != len(x.ground):
        raise ValueError("parts must form an ordered partition of the ground set")
    factors = []
    rest = x
    for part in part_sets:
        left, rest = delta(rest, part)
        factors.append(left)
    return factors


@lru_cache(maxsize=None)
def _generator_count(m: int) -> int:
    # compositions of m usable on an m-label block: (1) for m = 1, >= 2 parts otherwise
    if m == 1:
        return 1
    return 2 ** (m - 1) - 1


@lru_cache(maxsize=None)
def count_structures(n: int) -> int:
    """Number of elements over n labels: set partitions weighted by per-block class counts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    # condition on the block containing the last label
    total = 0
    for k in range(1, n + 1):
        total += comb(n - 1, k - 1) * _generator_count(k) * count_structures(n - k)
    return total
