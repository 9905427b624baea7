import itertools
import typing as _t

import structlog

from ..internal_types import (
    ORIGIN_GENERATOR,
    ExponentPair,
    FamilyIndexT,
    FamilyKind,
    HypothesisReport,
    LambdaFamily,
    NonFgError,
    Slope,
)
from .exponents import Ordering, compare_slopes, slope_of

logger = structlog.getLogger(__name__)

FIBONACCI_MONOTONICITY_CHECK_COUNT = 25


class NoSuchElement(NonFgError):
    pass


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that f(-1) = 1, f(0) = 0, f(1) = 1."""
    if n < -1:
        raise ValueError(f"fibonacci index must be >= -1, got {n}")
    previous, current = 1, 0
    for _ in range(n):
        previous, current = current, previous + current
    if n == -1:
        return previous
    return current


def _iterate_fibonacci_pairs() -> _t.Iterator[ExponentPair]:
    # n-th element is (f(2n-1), f(2n))
    odd, even = 1, 0
    while True:
        yield ExponentPair(odd, even)
        odd = odd + even
        even = odd + even


def iterate_family(family: LambdaFamily) -> _t.Iterator[ExponentPair]:
    match family.kind:
        case FamilyKind.FINITE:
            yield from family.elements
        case FamilyKind.VERTICAL:
            for b in itertools.count():
                yield ExponentPair(1, b)
        case FamilyKind.FIBONACCI:
            yield from _iterate_fibonacci_pairs()
        case _:
            raise NotImplementedError(f"{family.kind=}")


def enumerate_family(family: LambdaFamily, k: int) -> list[ExponentPair]:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return list(itertools.islice(iterate_family(family), k))


def elements_within(family: LambdaFamily, max_a: int, max_b: int) -> list[ExponentPair]:
    """Elements (a, b) of the family with a <= max_a and b <= max_b, in canonical order."""
    if max_a < 1 or max_b < 0:
        raise ValueError(f"bounds must satisfy A >= 1, B >= 0: ({max_a},{max_b})")

    def fits(pair: ExponentPair) -> bool:
        return pair.a <= max_a and pair.b <= max_b

    match family.kind:
        case FamilyKind.FINITE:
            return [pair for pair in family.elements if fits(pair)]
        case FamilyKind.VERTICAL:
            return [ExponentPair(1, b) for b in range(max_b + 1)]
        case FamilyKind.FIBONACCI:
            # both coordinates are nondecreasing along the enumeration, b strictly
            return list(itertools.takewhile(fits, _iterate_fibonacci_pairs()))
        case _:
            raise NotImplementedError(f"{family.kind=}")


def contains_element(family: LambdaFamily, pair: ExponentPair) -> bool:
    match family.kind:
        case FamilyKind.FINITE:
            return pair in family.elements
        case FamilyKind.VERTICAL:
            return pair.a == 1
        case FamilyKind.FIBONACCI:
            return pair in elements_within(family, pair.a, pair.b)
        case _:
            raise NotImplementedError(f"{family.kind=}")


def element_at(family: LambdaFamily, index: FamilyIndexT) -> ExponentPair | None:
    """Element at a canonical index, or None when the family has no such index."""
    if index < 0:
        return None
    match family.kind:
        case FamilyKind.FINITE:
            if index >= len(family.elements):
                return None
            return family.elements[index]
        case FamilyKind.VERTICAL:
            return ExponentPair(1, index)
        case FamilyKind.FIBONACCI:
            return next(itertools.islice(_iterate_fibonacci_pairs(), index, None))
        case _:
            raise NotImplementedError(f"{family.kind=}")


def _is_at_least_golden_ratio(slope: Slope) -> bool:
    # p/q >= (1 + sqrt(5)) / 2  <=>  2p - q >= 0 and (2p - q)^2 >= 5 q^2
    p, q = slope.numerator, slope.denominator
    return 2 * p - q >= 0 and (2 * p - q) ** 2 >= 5 * q * q


def exceed_slope_indexed(
    family: LambdaFamily, beta: Slope
) -> tuple[FamilyIndexT, ExponentPair]:
    """First element in canonical order whose slope strictly exceeds beta."""
    if family.kind is FamilyKind.FIBONACCI and _is_at_least_golden_ratio(beta):
        raise NoSuchElement(f"no fibonacci element has slope above {beta}")
    for index, pair in enumerate(iterate_family(family)):
        if compare_slopes(slope_of(pair), beta) is Ordering.GREATER:
            logger.debug("found element above slope", beta=str(beta), pair=str(pair))
            return index, pair
    raise NoSuchElement(f"no element of {family} has slope above {beta}")


def exceed_slope(family: LambdaFamily, beta: Slope) -> ExponentPair:
    return exceed_slope_indexed(family, beta)[1]


def fibonacci_slopes_increase(count: int = FIBONACCI_MONOTONICITY_CHECK_COUNT) -> bool:
    """Check that slopes of the Fibonacci family strictly increase for n = 1..count."""
    pairs = list(itertools.islice(_iterate_fibonacci_pairs(), count + 2))
    return all(
        compare_slopes(slope_of(pairs[n + 1]), slope_of(pairs[n])) is Ordering.GREATER
        for n in range(1, count + 1)
    )


def hypothesis_check(family: LambdaFamily) -> HypothesisReport:
    contains_origin = contains_element(family, ORIGIN_GENERATOR)
    match family.kind:
        case FamilyKind.FINITE:
            return HypothesisReport(
                contains_origin_generator=contains_origin,
                sup_is_attained=True,
                strict_inequality_holds=False,
                theorem_applies=False,
                reason="sup attained",
            )
        case FamilyKind.VERTICAL:
            # lambda is infinite, so the supremum condition implies the strict one
            return HypothesisReport(
                contains_origin_generator=contains_origin,
                sup_is_attained=False,
                strict_inequality_holds=True,
                theorem_applies=contains_origin,
                reason="slopes unbounded, lambda = infinity",
            )
        case FamilyKind.FIBONACCI:
            increasing = fibonacci_slopes_increase()
            return HypothesisReport(
                contains_origin_generator=contains_origin,
                sup_is_attained=False if increasing else None,
                strict_inequality_holds=True if increasing else None,
                theorem_applies=contains_origin and increasing,
                reason="slopes strictly increase toward (sqrt(5)+1)/2",
            )
        case _:
            raise NotImplementedError(f"{family.kind=}")
