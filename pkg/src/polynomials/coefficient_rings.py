import dataclasses
import typing as _t

CoefficientT: _t.TypeAlias = int


class CoefficientRing(_t.Protocol):
    """Commutative ring with identity whose elements are represented by Python ints."""

    @property
    def zero(self) -> CoefficientT: ...

    @property
    def one(self) -> CoefficientT: ...

    def normalize(self, value: int) -> CoefficientT: ...

    def add(self, left: CoefficientT, right: CoefficientT) -> CoefficientT: ...

    def neg(self, value: CoefficientT) -> CoefficientT: ...

    def mul(self, left: CoefficientT, right: CoefficientT) -> CoefficientT: ...

    def eq(self, left: CoefficientT, right: CoefficientT) -> bool: ...

    def is_zero(self, value: CoefficientT) -> bool: ...


@dataclasses.dataclass(frozen=True)
class IntegerRing:
    zero: CoefficientT = 0
    one: CoefficientT = 1

    def normalize(self, value: int) -> CoefficientT:
        return value

    def add(self, left: CoefficientT, right: CoefficientT) -> CoefficientT:
        return left + right

    def neg(self, value: CoefficientT) -> CoefficientT:
        return -value

    def mul(self, left: CoefficientT, right: CoefficientT) -> CoefficientT:
        return left * right

    def eq(self, left: CoefficientT, right: CoefficientT) -> bool:
        return left == right

    def is_zero(self, value: CoefficientT) -> bool:
        return value == 0

    def __str__(self) -> str:
        return "ZZ"


@dataclasses.dataclass(frozen=True)
class IntegersModRing:
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def zero(self) -> CoefficientT:
        return 0

    @property
    def one(self) -> CoefficientT:
        return 1

    def normalize(self, value: int) -> CoefficientT:
        return value % self.modulus

    def add(self, left: CoefficientT, right: CoefficientT) -> CoefficientT:
        return (left + right) % self.modulus

    def neg(self, value: CoefficientT) -> CoefficientT:
        return -value % self.modulus

    def mul(self, left: CoefficientT, right: CoefficientT) -> CoefficientT:
        return left * right % self.modulus

    def eq(self, left: CoefficientT, right: CoefficientT) -> bool:
        return (left - right) % self.modulus == 0

    def is_zero(self, value: CoefficientT) -> bool:
        return value % self.modulus == 0

    def __str__(self) -> str:
        return f"ZZ/{self.modulus}"


INTEGERS = IntegerRing()


def ring_for_modulus(modulus: int | None) -> CoefficientRing:
    if modulus is None:
        return INTEGERS
    return IntegersModRing(modulus)
