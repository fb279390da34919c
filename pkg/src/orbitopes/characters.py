"""Characters of orbit-polytope classes and their ribbon-series realization.

A character is a multiplicative rational functional; it is pinned down by
its values on the generating compositions (the composition (1) together
with all compositions of two or more parts), and its value on a one-part
composition (n) is forced to be the n-th power of its value on (1).

Convolution combines two characters through the cut expansion of
compositions and makes them a group.  The map ``char_to_series`` realizes
that group inside degree-truncated series over the ribbon basis of
noncommutative symmetric functions: coefficients c_beta are the character
values divided by |beta|!, and the image is exactly the series with
c_empty = 1 and n! c_(n) = c_(1)^n.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .compositions import Composition, compositions_of, concat, near_concat, splits
from .hopf_monoid import OrbitClassElement
from .jsonio import composition_from_json, composition_to_json, frac_from_str, frac_to_str

DEFAULT_DEGREE = 6

EMPTY = Composition()
ONE = Composition((1,))


def _is_generator(alpha: Composition) -> bool:
    return len(alpha) >= 2 or alpha.parts == (1,)


class Character:
    """Rational character stored by its values on generator compositions.

    Missing generators default to 0.  Values on one-part compositions are
    derived, never stored, so inconsistent states cannot be represented.
    """

    def __init__(self, degree: int = DEFAULT_DEGREE,
                 values: Mapping[Composition, Fraction] = ()):
        values = {k: Fraction(v) for k, v in dict(values).items()}
        for alpha in values:
            if not _is_generator(alpha):
                raise ValueError(f"{alpha} is not a generator; one-part values are derived")
            if alpha.weight > degree:
                raise ValueError(f"generator {alpha} exceeds truncation degree {degree}")
        self.degree = degree
        self.values = {k: v for k, v in values.items() if v}

    @classmethod
    def identity(cls, degree: int = DEFAULT_DEGREE) -> "Character":
        """The convolution unit: 1 on the empty class, 0 on every generator."""
        return cls(degree, {})

    @classmethod
    def basic(cls, degree: int = DEFAULT_DEGREE) -> "Character":
        """1 on points (one-part classes), 0 elsewhere."""
        return cls(degree, {ONE: Fraction(1)})

    def on_composition(self, alpha: Composition) -> Fraction:
        """Value on the class of a composition (weight up to the truncation degree)."""
        if alpha.weight > self.degree:
            raise ValueError(f"|{alpha}| exceeds truncation degree {self.degree}")
        if not alpha:
            return Fraction(1)
        if len(alpha) == 1:
            return self.values.get(ONE, Fraction(0)) ** alpha.weight
        return self.values.get(alpha, Fraction(0))

    def on_element(self, x: OrbitClassElement) -> Fraction:
        """Multiplicative value on a product of classes: product over blocks."""
        out = Fraction(1)
        for _, comp in x.blocks:
            out *= self.on_composition(comp)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __repr__(self) -> str:
        vals = {tuple(k.parts): str(v) for k, v in sorted(self.values.items(), key=lambda kv: kv[0].parts)}
        return f"Character(degree={self.degree}, values={vals})"

    def to_json(self) -> dict:
        ordered = sorted(self.values.items(), key=lambda kv: (kv[0].weight, kv[0].parts))
        return {
            "degree": self.degree,
            "values": [
                {"composition": composition_to_json(k), "value": frac_to_str(v)}
                for k, v in ordered
            ],
        }

    @classmethod
    def from_json(cls, data, degree: int | None = None) -> "Character":
        if not isinstance(data, dict) or "values" not in data:
            raise ValueError("a character must be a JSON object with a 'values' array")
        if degree is None:
            degree = data.get("degree", DEFAULT_DEGREE)
        values = {}
        for item in data["values"]:
            if not isinstance(item, dict) or "composition" not in item or "value" not in item:
                raise ValueError(f"malformed character value {item!r}")
            values[composition_from_json(item["composition"])] = frac_from_str(item["value"])
        return cls(degree, values)


def ribbon_mul(beta: Composition, gamma: Composition) -> tuple[Composition, ...]:
    """Basis product: concatenation plus near-concatenation (one term if an operand is empty)."""
    if not beta:
        return (gamma,)
    if not gamma:
        return (beta,)
    return (concat(beta, gamma), near_concat(beta, gamma))


class NSymSeries:
    """Degree-truncated rational series over the ribbon basis."""

    def __init__(self, degree: int = DEFAULT_DEGREE,
                 coeffs: Mapping[Composition, Fraction] = ()):
        coeffs = {k: Fraction(v) for k, v in dict(coeffs).items()}
        for alpha in coeffs:
            if alpha.weight > degree:
                raise ValueError(f"coefficient on {alpha} exceeds truncation degree {degree}")
        self.degree = degree
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def unit(cls, degree: int = DEFAULT_DEGREE) -> "NSymSeries":
        return cls(degree, {EMPTY: Fraction(1)})

    def coefficient(self, alpha: Composition) -> Fraction:
        return self.coeffs.get(alpha, Fraction(0))

    def homogeneous(self, d: int) -> dict[Composition, Fraction]:
        return {k: v for k, v in self.coeffs.items() if k.weight == d}

    def __add__(self, other: "NSymSeries") -> "NSymSeries":
        if self.degree != other.degree:
            raise ValueError("truncation degrees differ")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return NSymSeries(self.degree, out)

    def __sub__(self, other: "NSymSeries") -> "NSymSeries":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "NSymSeries":
        scalar = Fraction(scalar)
        return NSymSeries(self.degree, {k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "NSymSeries") -> "NSymSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NSymSeries)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "NSymSeries(0)"
        terms = sorted(self.coeffs.items(), key=lambda kv: (kv[0].weight, kv[0].parts))
        body = " + ".join(f"{v}*R{tuple(k.parts)}" for k, v in terms)
        return f"NSymSeries({body}; deg<={self.degree})"

    def to_json(self) -> dict:
        ordered = sorted(self.coeffs.items(), key=lambda kv: (kv[0].weight, kv[0].parts))
        return {
            "degree": self.degree,
            "coeffs": [
                {"composition": composition_to_json(k), "coeff": frac_to_str(v)}
                for k, v in ordered
            ],
        }

    @classmethod
    def from_json(cls, data) -> "NSymSeries":
        if not isinstance(data, dict) or "degree" not in data or "coeffs" not in data:
            raise ValueError("a series must be a JSON object with 'degree' and 'coeffs'")
        coeffs = {}
        for item in data["coeffs"]:
            if not isinstance(item, dict) or "composition" not in item or "coeff" not in item:
                raise ValueError(f"malformed series coefficient {item!r}")
            key = composition_from_json(item["composition"])
            coeffs[key] = coeffs.get(key, Fraction(0)) + frac_from_str(item["coeff"])
        return cls(data["degree"], coeffs)


def series_mul(f: NSymSeries, g: NSymSeries) -> NSymSeries:
    """Bilinear extension of the basis product, truncated to the common degree."""
    if f.degree != g.degree:
        raise ValueError("truncation degrees differ")
    out: dict[Composition, Fraction] = {}
    for beta, fb in f.coeffs.items():
        for gamma, gc in g.coeffs.items():
            if beta.weight + gamma.weight > f.degree:
                continue
            for alpha in ribbon_mul(beta, gamma):
                out[alpha] = out.get(alpha, Fraction(0)) + fb * gc
    return NSymSeries(f.degree, out)


def series_inverse(f: NSymSeries) -> NSymSeries:
    """Multiplicative inverse by degree recursion; needs a nonzero constant term."""
    c0 = f.coefficient(EMPTY)
    if c0 == 0:
        raise ValueError("non-invertible series: constant coefficient is 0")
    inv: dict[Composition, Fraction] = {EMPTY: 1 / c0}
    for d in range(1, f.degree + 1):
        # degree-d part of f*g must vanish: c0*g_d = -sum_{b>=1} f_b * g_{d-b}
        level: dict[Composition, Fraction] = {}
        for b in range(1, d + 1):
            for beta, fb in f.homogeneous(b).items():
                for gamma in compositions_of(d - b):
                    gc = inv.get(gamma)
                    if gc is None:
                        continue
                    for alpha in ribbon_mul(beta, gamma):
                        level[alpha] = level.get(alpha, Fraction(0)) + fb * gc
        for alpha in compositions_of(d):
            value = -level.get(alpha, Fraction(0)) / c0
            if value:
                inv[alpha] = value
    return NSymSeries(f.degree, inv)


def in_group_G(f: NSymSeries) -> bool:
    """Membership in the realized character group: c_empty = 1 and n! c_(n) = c_(1)^n."""
    if f.coefficient(EMPTY) != 1:
        return False
    c1 = f.coefficient(ONE)
    for n in range(2, f.degree + 1):
        if factorial(n) * f.coefficient(Composition((n,))) != c1 ** n:
            return False
    return True


def char_to_series(zeta: Character, degree: int | None = None) -> NSymSeries:
    """Realize a character as the series with c_beta = zeta(beta) / |beta|!."""
    if degree is None:
        degree = zeta.degree
    if degree > zeta.degree:
        raise ValueError(f"character truncated at {zeta.degree}, cannot expand to {degree}")
    coeffs: dict[Composition, Fraction] = {}
    for n in range(degree + 1):
        fact = factorial(n)
        for beta in compositions_of(n):
            value = zeta.on_composition(beta)
            if value:
                coeffs[beta] = value / fact
    return NSymSeries(degree, coeffs)


def series_to_char(f: NSymSeries) -> Character:
    """Pull a group series back to the character with those generator values."""
    if not in_group_G(f):
        raise ValueError("series is not in the character group image")
    values: dict[Composition, Fraction] = {}
    for n in range(1, f.degree + 1):
        fact = factorial(n)
        for beta in compositions_of(n):
            if _is_generator(beta):
                value = fact * f.coefficient(beta)
                if value:
                    values[beta] = value
    return Character(f.degree, values)


def convolve(zeta: Character, psi: Character) -> Character:
    """Convolution: split every generator, pairing zeta on the left with psi on the right."""
    degree = min(zeta.degree, psi.degree)
    values: dict[Composition, Fraction] = {}
    for n in range(1, degree + 1):
        for alpha in compositions_of(n):
            if not _is_generator(alpha):
                continue
            values[alpha] = convolve_value(zeta, psi, alpha)
    return Character(degree, values)


def convolve_value(zeta: Character, psi: Character, alpha: Composition) -> Fraction:
    """The convolution's value on one composition, straight from the cut expansion."""
    n = alpha.weight
    total = Fraction(0)
    for beta, gamma in splits(alpha):
        total += comb(n, beta.weight) * zeta.on_composition(beta) * psi.on_composition(gamma)
    return total


def invert_character(zeta: Character) -> Character:
    """Convolution inverse, built generator by generator in increasing weight."""
    values: dict[Composition, Fraction] = {}
    for n in range(1, zeta.degree + 1):
        partial = Character(zeta.degree, values)
        for alpha in compositions_of(n):
            if not _is_generator(alpha):
                continue
            # 0 = sum over cuts; the weight-n cut contributes psi(alpha) itself
            acc = Fraction(0)
            for beta, gamma in splits(alpha):
                if gamma.weight == n:
                    continue
                acc += comb(n, beta.weight) * zeta.on_composition(beta) * partial.on_composition(gamma)
            values[alpha] = -acc
    return Character(zeta.degree, values)
