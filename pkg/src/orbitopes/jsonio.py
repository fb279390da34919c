"""JSON encoding conventions used by the library and the CLI.

Rationals travel as canonical strings ("p/q" with q > 0 and gcd(p, q) = 1;
integers drop the "/1").  Compositions are arrays of positive integers.
"""

from __future__ import annotations

from fractions import Fraction

from .compositions import Composition


def frac_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def frac_from_str(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {s!r}") from exc


def composition_to_json(alpha: Composition) -> list[int]:
    return list(alpha.parts)


def composition_from_json(data) -> Composition:
    if not isinstance(data, list) or any(not isinstance(p, int) or isinstance(p, bool) for p in data):
        raise ValueError(f"a composition must be a JSON array of integers, got {data!r}")
    return Composition(data)
