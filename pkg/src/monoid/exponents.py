import enum

from ..internal_types import Exponent, ExponentPair, InvalidExponentError, Slope


@enum.unique
class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def slope_of(pair: ExponentPair) -> Slope:
    return Slope(numerator=pair.b, denominator=pair.a)


def add(left: ExponentPair, right: ExponentPair) -> ExponentPair:
    return ExponentPair(left.a + right.a, left.b + right.b)


def compare_slopes(left: Slope, right: Slope) -> Ordering:
    lhs = left.numerator * right.denominator
    rhs = right.numerator * left.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def max_of_slopes(slopes: list[Slope]) -> Slope:
    assert slopes, "max over an empty set of slopes"
    best = slopes[0]
    for slope in slopes[1:]:
        if compare_slopes(slope, best) is Ordering.GREATER:
            best = slope
    return best


def parse_exponent(text: str) -> Exponent:
    """Parse "A,B" (optionally parenthesised) into an exponent with A, B >= 0."""
    stripped = text.strip().removeprefix("(").removesuffix(")")
    parts = [part.strip() for part in stripped.split(",")]
    is_decimal = all(part.isascii() and part.isdigit() for part in parts)
    if len(parts) != 2 or not is_decimal:
        raise InvalidExponentError(f"expected 'A,B' with decimal integers, got {text!r}")
    return Exponent(int(parts[0]), int(parts[1]))


def parse_pair(text: str) -> ExponentPair:
    return parse_exponent(text).to_pair()
