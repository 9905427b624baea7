import dataclasses
import typing as _t

from ..internal_types import Exponent, ExponentPair
from .coefficient_rings import INTEGERS, CoefficientRing, CoefficientT

TermsT: _t.TypeAlias = dict[Exponent, CoefficientT]


@dataclasses.dataclass(frozen=True)
class SparsePoly:
    """Element of R[x,y] as a map from exponent to nonzero coefficient.

    Never mutate `terms`; build new polynomials with `from_terms` or the operators.
    """

    ring: CoefficientRing
    terms: TermsT = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        assert not any(
            self.ring.is_zero(c) for c in self.terms.values()
        ), f"zero coefficient stored in {self.terms}"

    @classmethod
    def from_terms(
        cls: _t.Type["SparsePoly"],
        ring: CoefficientRing,
        terms: _t.Iterable[tuple[Exponent, int]],
    ) -> "SparsePoly":
        accumulated: TermsT = {}
        for exponent, coefficient in terms:
            value = ring.normalize(coefficient)
            if exponent in accumulated:
                value = ring.add(accumulated[exponent], value)
            accumulated[exponent] = value
        return cls(
            ring=ring,
            terms={e: c for e, c in accumulated.items() if not ring.is_zero(c)},
        )

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Exponent, CoefficientT]]:
        return sorted(self.terms.items())

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_add(self, other)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_add(self, poly_neg(other))

    def __neg__(self) -> "SparsePoly":
        return poly_neg(self)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __str__(self) -> str:
        return format_poly(self)


def _check_same_ring(left: SparsePoly, right: SparsePoly) -> None:
    if left.ring != right.ring:
        raise ValueError(f"coefficient rings differ: {left.ring} and {right.ring}")


def poly_add(left: SparsePoly, right: SparsePoly) -> SparsePoly:
    _check_same_ring(left, right)
    return SparsePoly.from_terms(
        left.ring, list(left.terms.items()) + list(right.terms.items())
    )


def poly_neg(poly: SparsePoly) -> SparsePoly:
    return SparsePoly.from_terms(
        poly.ring, ((e, poly.ring.neg(c)) for e, c in poly.terms.items())
    )


def poly_scale(coefficient: int, poly: SparsePoly) -> SparsePoly:
    scalar = poly.ring.normalize(coefficient)
    return SparsePoly.from_terms(
        poly.ring, ((e, poly.ring.mul(scalar, c)) for e, c in poly.terms.items())
    )


def poly_mul(left: SparsePoly, right: SparsePoly) -> SparsePoly:
    _check_same_ring(left, right)
    ring = left.ring
    return SparsePoly.from_terms(
        ring,
        (
            (Exponent(e1.a + e2.a, e1.b + e2.b), ring.mul(c1, c2))
            for e1, c1 in left.terms.items()
            for e2, c2 in right.terms.items()
        ),
    )


def monomials_of(poly: SparsePoly) -> frozenset[Exponent]:
    return frozenset(poly.terms)


def monomial(
    a: int, b: int, coefficient: int = 1, ring: CoefficientRing = INTEGERS
) -> SparsePoly:
    return SparsePoly.from_terms(ring, [(Exponent(a, b), coefficient)])


def monomial_of_pair(pair: ExponentPair, ring: CoefficientRing = INTEGERS) -> SparsePoly:
    return monomial(pair.a, pair.b, ring.one, ring)


def format_poly(poly: SparsePoly) -> str:
    """Render in the "c*x^a*y^b + ..." text format, terms in increasing exponent order."""
    if poly.is_zero():
        return "0*x^0*y^0"
    return " + ".join(
        f"{coefficient}*x^{exponent.a}*y^{exponent.b}"
        for exponent, coefficient in poly.sorted_terms()
    )
