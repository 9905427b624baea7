"""Membership of polynomials in monomial subalgebras of R[x,y].

A polynomial lies in the subring generated by a set of monomials iff every one of its
terms does: monomials are linearly independent over any coefficient ring, and sums of
representable terms are representable. So membership is decided term by term on the
exponent monoid.
"""

import dataclasses
import typing as _t

import structlog

from ..internal_types import (
    ORIGIN_GENERATOR,
    Exponent,
    ExponentPair,
    Factorization,
    GeneratorSet,
    LambdaFamily,
    NonFgError,
    make_generator_set,
)
from ..monoid.lambda_families import elements_within, enumerate_family
from ..monoid.membership import member
from .coefficient_rings import INTEGERS, CoefficientRing
from .sparse_poly import SparsePoly, monomial_of_pair

logger = structlog.getLogger(__name__)


class NotInSubalgebra(NonFgError):
    def __init__(self, polynomial_index: int, term: Exponent, polynomial: str):
        super().__init__(
            f"polynomial #{polynomial_index} ({polynomial}) has term "
            f"{term} outside the subalgebra"
        )
        self.polynomial_index = polynomial_index
        self.term = term
        self.polynomial = polynomial


@dataclasses.dataclass(frozen=True)
class MStarResult:
    inside: bool
    generating_monomials: frozenset[ExponentPair]
    factorizations: dict[Exponent, Factorization]
    obstructions: tuple[Exponent, ...] = ()

    def __post_init__(self):
        assert self.inside == (
            not self.obstructions
        ), f"{self.inside=} disagrees with {self.obstructions=}"


def _decide_termwise(
    poly: SparsePoly,
    generators_for: _t.Callable[[Exponent], GeneratorSet | None],
) -> MStarResult:
    factorizations: dict[Exponent, Factorization] = {}
    obstructions: list[Exponent] = []
    for exponent in sorted(poly.terms):
        if exponent.is_origin():
            # constants of R lie in every subring
            continue
        generators = generators_for(exponent) if exponent.a >= 1 else None
        factorization = (
            member(generators, exponent) if generators is not None else None
        )
        if factorization is None:
            obstructions.append(exponent)
            continue
        factorizations[exponent] = factorization
    generating = frozenset(
        g for f in factorizations.values() for g in f.used_generators()
    )
    result = MStarResult(
        inside=not obstructions,
        generating_monomials=generating if not obstructions else frozenset(),
        factorizations=factorizations,
        obstructions=tuple(obstructions),
    )
    logger.debug(
        "decided subalgebra membership",
        poly=str(poly),
        inside=result.inside,
        obstructions=[str(o) for o in result.obstructions],
    )
    return result


def in_subalgebra(poly: SparsePoly, family: LambdaFamily) -> MStarResult:
    """Decide f in R[M(Lambda)] and pick M*(f) from the first factorization of each term."""

    def truncation(exponent: Exponent) -> GeneratorSet | None:
        pairs = elements_within(family, exponent.a, exponent.b)
        return make_generator_set(pairs) if pairs else None

    return _decide_termwise(poly, truncation)


def in_generated_subring(poly: SparsePoly, generators: GeneratorSet) -> MStarResult:
    """Decide f in R[M] for the finite monomial set M given by `generators`."""
    return _decide_termwise(poly, lambda _: generators)


def extract_mstar(polys: _t.Sequence[SparsePoly], family: LambdaFamily) -> GeneratorSet:
    """Union of the chosen M*(f), or {(1,0)} when there is nothing to generate."""
    chosen: set[ExponentPair] = set()
    for index, poly in enumerate(polys):
        result = in_subalgebra(poly, family)
        if not result.inside:
            raise NotInSubalgebra(index, result.obstructions[0], str(poly))
        chosen |= result.generating_monomials
    if not chosen:
        # x is in M(Lambda), so this adds nothing beyond R[x]
        chosen.add(ORIGIN_GENERATOR)
    generators = make_generator_set(chosen)
    logger.info("extracted generating monomials", generators=str(generators))
    return generators


def contains_polynomials_in_x(poly: SparsePoly, family: LambdaFamily) -> bool:
    """R[x] is inside R[M(Lambda)]: pure-x polynomials pass via (1,0)."""
    assert all(e.b == 0 for e in poly.terms), f"{poly} is not a polynomial in x"
    return in_subalgebra(poly, family).inside


def family_monomials(
    family: LambdaFamily, k: int, ring: CoefficientRing = INTEGERS
) -> list[SparsePoly]:
    """The first k monomials of M(Lambda) in canonical order."""
    return [monomial_of_pair(pair, ring) for pair in enumerate_family(family, k)]

