"""Built-in oracle-equivalence suites, runnable from the CLI.

Each suite pits a combinatorial formula against an independent geometric
or enumerative computation and counts agreements.  Randomized suites use
a fixed seed so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .characters import Character, char_to_series, convolve, in_group_G, series_mul
from .compositions import compositions_of, concat, near_concat, splits
from .geometry import (
    Point,
    chamber_census,
    check_base_polytope,
    composition_of_point,
    face_decomposition,
    orbit_vertices,
    representative_point,
    standard_ground,
)
from .hopf_monoid import class_of, count_structures, delta
from .invariants import chi, chi_bruteforce
from .enumeration import subsets

SEED = 20230817


def _series_exp(coeffs: list[Fraction]) -> list[Fraction]:
    # exp of a series with zero constant term, via exp(f)' = f' exp(f)
    n = len(coeffs)
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += j * coeffs[j] * out[k - j]
        out[k] = acc / k
    return out


def egf_counts(max_n: int) -> list[int]:
    """Coefficients n! [t^n] exp(e^(2t)/2 - e^t + t + 1/2), by series composition."""
    n = max_n + 1
    fact = [Fraction(1)]
    for i in range(1, n):
        fact.append(fact[-1] * i)
    inner = [Fraction(0)] * n
    for k in range(n):
        inner[k] = (Fraction(2**k, 1) / 2 - 1) / fact[k]
    inner[0] += Fraction(1, 2)  # constant: 1/2 - 1 + 1/2 = 0
    inner[1] += 1
    assert inner[0] == 0
    expanded = _series_exp(inner)
    return [int(expanded[k] * fact[k]) for k in range(n)]


def _random_point(rng: random.Random, n: int) -> Point:
    ground = standard_ground(n)
    values = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
    return Point.from_values(ground, values)


def _random_character(rng: random.Random, degree: int) -> Character:
    values = {}
    for n in range(1, degree + 1):
        for alpha in compositions_of(n):
            if len(alpha) >= 2 or alpha.parts == (1,):
                values[alpha] = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
    return Character(degree, values)


def suite_splits(max_n: int) -> tuple[int, int]:
    """splits() entries reassemble to the source and are pairwise exclusive cuts."""
    passed = failed = 0
    for n in range(max_n + 1):
        for alpha in compositions_of(n):
            for i, (beta, gamma) in enumerate(splits(alpha)):
                ok = beta.weight == i
                if beta and gamma:
                    ok = ok and (concat(beta, gamma) == alpha) != (near_concat(beta, gamma) == alpha)
                else:
                    ok = ok and concat(beta, gamma) == alpha
                passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def suite_delta_geometry(max_n: int) -> tuple[int, int]:
    """Composition-level splits match vertex-level face decompositions."""
    passed = failed = 0
    for n in range(max_n + 1):
        ground = standard_ground(n)
        for alpha in compositions_of(n):
            x = class_of(alpha, ground.labels)
            p = representative_point(alpha, ground)
            for S in subsets(ground.labels):
                left, right = delta(x, S)
                q, q_prime = face_decomposition(p, S)
                ok = left == class_of(composition_of_point(q), S) and right == class_of(
                    composition_of_point(q_prime), set(ground.labels) - set(S)
                )
                passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def suite_chi(max_n: int) -> tuple[int, int]:
    """Refinement-sum invariant equals the ordered-set-partition recount."""
    passed = failed = 0
    for n in range(max_n + 1):
        for alpha in compositions_of(n):
            ok = chi(alpha) == chi_bruteforce(alpha)
            passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def suite_normal_equivalence(max_n: int) -> tuple[int, int]:
    """Equal compositions iff equal chamber-to-vertex partitions of the orbit."""
    passed = failed = 0
    for n in range(1, max_n + 1):
        ground = standard_ground(n)
        points = [representative_point(alpha, ground) for alpha in compositions_of(n)]
        for p in points:
            for q in points:
                by_comp = composition_of_point(p) == composition_of_point(q)
                by_fan = _chamber_fingerprint(p) == _chamber_fingerprint(q)
                passed, failed = (passed + 1, failed) if by_comp == by_fan else (passed, failed + 1)
    return passed, failed


def _chamber_fingerprint(p: Point) -> frozenset:
    census = chamber_census(p)
    grouped: dict[Point, set] = {}
    for order, vertex in census.items():
        grouped.setdefault(vertex, set()).add(order)
    return frozenset(frozenset(orders) for orders in grouped.values())


def suite_base_polytope(count: int, max_n: int) -> tuple[int, int]:
    """Half-space description is valid and tight on random rational points."""
    rng = random.Random(SEED)
    passed = failed = 0
    for _ in range(count):
        p = _random_point(rng, rng.randint(1, max_n))
        ok = check_base_polytope(p)
        passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def suite_chamber_census(count: int, max_n: int) -> tuple[int, int]:
    """Each chamber holds exactly one orbit vertex."""
    rng = random.Random(SEED + 1)
    passed = failed = 0
    for _ in range(count):
        p = _random_point(rng, rng.randint(1, max_n))
        census = chamber_census(p)
        vertices = orbit_vertices(p)
        ok = set(census.values()) == vertices
        for order, vertex in census.items():
            vals = [vertex[l] for l in order]
            ok = ok and all(a >= b for a, b in zip(vals, vals[1:]))
        # grouping the n! chambers by vertex partitions them with no overlap
        total = sum(len(orders) for orders in _group_census(census).values())
        ok = ok and total == len(census)
        passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def _group_census(census) -> dict:
    grouped: dict[Point, set] = {}
    for order, vertex in census.items():
        grouped.setdefault(vertex, set()).add(order)
    return grouped


def suite_species(max_n: int) -> tuple[int, int]:
    """Structure counts match the generating-function expansion."""
    expected = egf_counts(max_n)
    passed = failed = 0
    for n in range(max_n + 1):
        ok = count_structures(n) == expected[n]
        passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def suite_characters(count: int, degree: int) -> tuple[int, int]:
    """Convolution realizes as series multiplication and lands in the group."""
    rng = random.Random(SEED + 2)
    passed = failed = 0
    for _ in range(count):
        zeta = _random_character(rng, degree)
        psi = _random_character(rng, degree)
        lhs = char_to_series(convolve(zeta, psi))
        rhs = series_mul(char_to_series(zeta), char_to_series(psi))
        ok = lhs == rhs and in_group_G(lhs)
        passed, failed = (passed + 1, failed) if ok else (passed, failed + 1)
    return passed, failed


def run_selftest(max_n: int = 5) -> dict:
    """Run every suite; sizes scale down from ``max_n`` where a suite is costly."""
    small = min(max_n, 5)
    suites = {
        "splits_reassembly": suite_splits(max_n),
        "delta_vs_geometry": suite_delta_geometry(min(max_n, 6)),
        "chi_vs_bruteforce": suite_chi(small),
        "normal_equivalence_oracle": suite_normal_equivalence(min(small, 4)),
        "base_polytope": suite_base_polytope(25, small),
        "chamber_census": suite_chamber_census(25, small),
        "species_counts": suite_species(8),
        "character_isomorphism": suite_characters(10, 5),
    }
    report = {
        "suites": {
            name: {"passed": passed, "failed": failed}
            for name, (passed, failed) in suites.items()
        }
    }
    report["passed"] = sum(p for p, _ in suites.values())
    report["failed"] = sum(f for _, f in suites.values())
    return report
