"""Membership of exponent pairs in the additive monoid spanned by a finite generator set.

A monomial x^A y^B lies in the subring R[M] generated by a set M of monomials iff
(A, B) is a sum of exponents of M: monomials are linearly independent over every
coefficient ring, so no linear combination of other products can produce it.

Factorizations are ordered by their multiplicity vectors (one count per generator, in
canonical generator order), compared lexicographically. The first factorization uses the
earliest generator as little as possible, then the next one, and so on. The search walks
that order with an explicit stack, so deep targets such as x y^1200 need no recursion.
"""

import itertools
import typing as _t

import numpy as np
import numpy.typing as npt
import structlog

from ..internal_types import (
    Exponent,
    ExponentPair,
    Factorization,
    GeneratorIndexT,
    GeneratorSet,
    NonFgError,
    Slope,
)
from .exponents import Ordering, compare_slopes, max_of_slopes, slope_of

logger = structlog.getLogger(__name__)

BRUTEFORCE_MAX_X_DEGREE = 20

DepthT: _t.TypeAlias = npt.NDArray[np.int64]
TargetT: _t.TypeAlias = Exponent | ExponentPair


class BoundExceeded(NonFgError):
    pass


def max_slope(generators: GeneratorSet) -> Slope:
    return max_of_slopes([slope_of(g) for g in generators])


def min_slope(generators: GeneratorSet) -> Slope:
    return min(slope_of(g) for g in generators)


def _empty_factorization(generators: GeneratorSet) -> Factorization:
    return Factorization(generators=generators, counts=(0,) * len(generators))


def _outside_slope_range(generators: GeneratorSet, target: ExponentPair) -> bool:
    # every product of generators has slope between the extreme generator slopes
    target_slope = slope_of(target)
    return (
        compare_slopes(target_slope, max_slope(generators)) is Ordering.GREATER
        or compare_slopes(target_slope, min_slope(generators)) is Ordering.LESS
    )


def _suffix_depths(
    generators: _t.Sequence[ExponentPair], max_a: int, max_b: int
) -> DepthT:
    """depths[a, b] is the largest i such that (a, b) is a sum of generators[i:], -1 if none.

    The sums of generators[i:] grow as i shrinks, so (a, b) is a sum of generators[i:]
    iff depths[a, b] >= i. One table stands for every suffix.
    """
    depths = np.full((max_a + 1, max_b + 1), -1, dtype=np.int64)
    depths[0, 0] = len(generators)
    for position in range(len(generators) - 1, -1, -1):
        generator = generators[position]
        width = max_b + 1 - generator.b
        # rows below a are final for this generator because generator.a >= 1
        for a in range(generator.a, max_a + 1):
            reached = depths[a - generator.a, :width] >= position
            row = depths[a, generator.b :]
            row[reached & (row < position)] = position
    return depths


def _iterate_factorizations(
    generators: GeneratorSet, target: TargetT, use_slope_bound: bool
) -> _t.Iterator[Factorization]:
    if target.a == 0:
        if target.b == 0:
            yield _empty_factorization(generators)
        return
    if use_slope_bound and _outside_slope_range(
        generators, ExponentPair(target.a, target.b)
    ):
        logger.debug("target slope outside generator range", target=str(target))
        return

    # only generators inside the target box can take part
    fitting: list[tuple[GeneratorIndexT, ExponentPair]] = [
        (index, g)
        for index, g in enumerate(generators)
        if g.a <= target.a and g.b <= target.b
    ]
    if not fitting:
        return
    depths = _suffix_depths([g for _, g in fitting], target.a, target.b)
    if depths[target.a, target.b] < 0:
        return

    counts = [0] * len(generators)
    # one frame per fitting generator on the path: the rest still to cover and the
    # next multiplicity to try for that generator
    rests: list[tuple[int, int]] = [(target.a, target.b)]
    next_counts: list[int] = [0]
    while next_counts:
        position = len(next_counts) - 1
        rest_a, rest_b = rests[-1]
        if position == len(fitting):
            # depths only admits (0, 0) past the last generator
            rests.pop()
            next_counts.pop()
            factorization = Factorization(generators=generators, counts=tuple(counts))
            assert factorization.target() == Exponent(
                target.a, target.b
            ), f"unsound factorization {factorization} of {target}"
            yield factorization
            continue
        index, generator = fitting[position]
        most = rest_a // generator.a
        if generator.b:
            most = min(most, rest_b // generator.b)
        count = next_counts[-1]
        while count <= most and (
            depths[rest_a - count * generator.a, rest_b - count * generator.b]
            <= position
        ):
            count += 1
        if count > most:
            counts[index] = 0
            rests.pop()
            next_counts.pop()
            continue
        counts[index] = count
        next_counts[-1] = count + 1
        rests.append((rest_a - count * generator.a, rest_b - count * generator.b))
        next_counts.append(0)


def member(
    generators: GeneratorSet, target: TargetT, use_slope_bound: bool = True
) -> Factorization | None:
    """First factorization of target over generators, None if target is not a member.

    With use_slope_bound the search is skipped when the target slope falls outside the
    range of generator slopes, which rules membership out by the mediant inequality.
    """
    factorization = next(
        _iterate_factorizations(generators, target, use_slope_bound), None
    )
    logger.debug(
        "membership decided",
        generators=str(generators),
        target=str(target),
        factorization=str(factorization) if factorization is not None else None,
    )
    return factorization


def factorizations(
    generators: GeneratorSet, target: TargetT, limit: int
) -> list[Factorization]:
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    return list(
        itertools.islice(
            _iterate_factorizations(generators, target, use_slope_bound=True), limit
        )
    )


def member_bruteforce(generators: GeneratorSet, target: TargetT) -> bool:
    """Try every multiset of at most target.a generators."""
    if target.a > BRUTEFORCE_MAX_X_DEGREE:
        raise BoundExceeded(
            f"brute force is capped at x-degree {BRUTEFORCE_MAX_X_DEGREE}, got {target.a}"
        )
    for size in range(target.a + 1):
        for product in itertools.combinations_with_replacement(generators, size):
            if sum(g.a for g in product) == target.a and sum(
                g.b for g in product
            ) == target.b:
                return True
    return False
