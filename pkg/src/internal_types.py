import dataclasses
import enum
import functools
import typing as _t
from fractions import Fraction

import structlog

logger = structlog.getLogger(__name__)


GeneratorIndexT: _t.TypeAlias = int
FamilyIndexT: _t.TypeAlias = int


class NonFgError(Exception):
    pass


class InvalidExponentError(NonFgError, ValueError):
    pass


class FamilyValidationError(NonFgError, ValueError):
    pass


class EmptyGeneratorSetError(NonFgError, ValueError):
    pass


def _check_integer(name: str, value: _t.Any) -> None:
    # bool is an int subclass, but True is not an exponent
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidExponentError(f"{name} must be an integer, got {value!r}")


@dataclasses.dataclass(frozen=True, order=True)
class Exponent:
    """Exponent vector (a, b) of an arbitrary monomial x^a y^b of R[x,y]."""

    a: int
    b: int

    def __post_init__(self):
        _check_integer("a", self.a)
        _check_integer("b", self.b)
        if self.a < 0 or self.b < 0:
            raise InvalidExponentError(f"negative exponent in ({self.a},{self.b})")

    def is_origin(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_pair(self) -> "ExponentPair":
        return ExponentPair(self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclasses.dataclass(frozen=True, order=True)
class ExponentPair:
    """A point of N x N_0: the exponent of a monomial that may belong to M(Lambda)."""

    a: int
    b: int

    def __post_init__(self):
        _check_integer("a", self.a)
        _check_integer("b", self.b)
        if self.a < 1:
            raise InvalidExponentError(f"x-exponent must be positive, got {self.a}")
        if self.b < 0:
            raise InvalidExponentError(f"y-exponent must be nonnegative, got {self.b}")

    @classmethod
    def from_exponent(cls: _t.Type["ExponentPair"], exponent: Exponent) -> "ExponentPair":
        return cls(exponent.a, exponent.b)

    def to_exponent(self) -> Exponent:
        return Exponent(self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ORIGIN_GENERATOR = ExponentPair(1, 0)


@functools.total_ordering
@dataclasses.dataclass(frozen=True, eq=False)
class Slope:
    """Exact rational b/a, kept unreduced; every comparison is a cross-multiplication."""

    numerator: int
    denominator: int

    def __post_init__(self):
        _check_integer("numerator", self.numerator)
        _check_integer("denominator", self.denominator)
        if self.numerator < 0:
            raise InvalidExponentError(f"slope numerator must be >= 0: {self.numerator}")
        if self.denominator < 1:
            raise InvalidExponentError(
                f"slope denominator must be >= 1: {self.denominator}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __lt__(self, other: "Slope") -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash(self.reduced())

    def reduced(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@enum.unique
class FamilyKind(enum.Enum):
    FINITE = "finite"
    VERTICAL = "vertical"
    FIBONACCI = "fibonacci"


@dataclasses.dataclass(frozen=True)
class LambdaFamily:
    kind: FamilyKind
    # only used by FamilyKind.FINITE, deduplicated and in input order
    elements: tuple[ExponentPair, ...] = ()

    def __post_init__(self):
        match self.kind:
            case FamilyKind.FINITE:
                if len(set(self.elements)) != len(self.elements):
                    raise FamilyValidationError(
                        "finite family elements must be distinct, use finite_family()"
                    )
                if ORIGIN_GENERATOR not in self.elements:
                    raise FamilyValidationError("family must contain (1,0)")
            case FamilyKind.VERTICAL | FamilyKind.FIBONACCI:
                if self.elements:
                    raise FamilyValidationError(
                        f"{self.kind.value} family takes no elements"
                    )

    def __str__(self) -> str:
        if self.kind is FamilyKind.FINITE:
            return f"finite[{','.join(str(e) for e in self.elements)}]"
        return self.kind.value


def finite_family(elements: _t.Iterable[ExponentPair]) -> LambdaFamily:
    deduplicated = tuple(dict.fromkeys(elements))
    return LambdaFamily(kind=FamilyKind.FINITE, elements=deduplicated)


VERTICAL = LambdaFamily(kind=FamilyKind.VERTICAL)
FIBONACCI = LambdaFamily(kind=FamilyKind.FIBONACCI)


@dataclasses.dataclass(frozen=True)
class HypothesisReport:
    contains_origin_generator: bool
    # None stands for "unknown"
    sup_is_attained: bool | None
    strict_inequality_holds: bool | None
    theorem_applies: bool
    reason: str = ""

    def __post_init__(self):
        if self.theorem_applies:
            assert (
                self.contains_origin_generator
                and self.sup_is_attained is False
                and self.strict_inequality_holds is True
            ), f"inconsistent hypothesis report: {self}"


@dataclasses.dataclass(frozen=True)
class GeneratorSet:
    """Finite set of exponent pairs in canonical order (increasing a, then b)."""

    generators: tuple[ExponentPair, ...]

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorSetError("generator set must be nonempty")
        assert list(self.generators) == sorted(
            set(self.generators)
        ), f"generators must be distinct and sorted: {self.generators}"

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> _t.Iterator[ExponentPair]:
        return iter(self.generators)

    def __contains__(self, item: object) -> bool:
        return item in self.generators

    def __getitem__(self, index: GeneratorIndexT) -> ExponentPair:
        return self.generators[index]

    def __str__(self) -> str:
        return "{" + ",".join(str(g) for g in self.generators) + "}"


def make_generator_set(pairs: _t.Iterable[ExponentPair]) -> GeneratorSet:
    return GeneratorSet(generators=tuple(sorted(set(pairs))))


@dataclasses.dataclass(frozen=True)
class Factorization:
    """A product of generators, stored as the full multiplicity vector."""

    generators: GeneratorSet
    counts: tuple[int, ...]

    def __post_init__(self):
        assert len(self.counts) == len(
            self.generators
        ), f"{len(self.counts)=} != {len(self.generators)=}"
        assert all(c >= 0 for c in self.counts), f"{self.counts=}"

    @property
    def multiplicities(self) -> dict[GeneratorIndexT, int]:
        return {index: count for index, count in enumerate(self.counts) if count}

    def factors(self) -> list[tuple[ExponentPair, int]]:
        return [(self.generators[i], c) for i, c in self.multiplicities.items()]

    def used_generators(self) -> list[ExponentPair]:
        return [generator for generator, _ in self.factors()]

    def length(self) -> int:
        return sum(self.counts)

    def target(self) -> Exponent:
        return Exponent(
            sum(c * g.a for g, c in zip(self.generators, self.counts)),
            sum(c * g.b for g, c in zip(self.generators, self.counts)),
        )

    def __str__(self) -> str:
        if not self.multiplicities:
            return "1"
        return " * ".join(
            f"{generator}^{count}" if count > 1 else str(generator)
            for generator, count in self.factors()
        )


@dataclasses.dataclass(frozen=True)
class Certificate:
    family: LambdaFamily
    generators: GeneratorSet
    beta: Slope
    witness: ExponentPair
    witness_in_family_index: FamilyIndexT
    created_from: tuple[str, ...] | None = None
