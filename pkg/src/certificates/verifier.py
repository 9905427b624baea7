"""Independent check of witness certificates.

Only slope facts are needed: a product of generators has slope at most beta when every
generator has slope at most beta, so a family element of slope above beta cannot be
such a product. The optional deep check runs the grid search as a coherence test.
"""

import dataclasses
import enum

import structlog

from ..internal_types import (
    Certificate,
    FamilyKind,
    GeneratorSet,
    LambdaFamily,
    Slope,
    ExponentPair,
)
from ..monoid.lambda_families import contains_element, element_at
from ..monoid.membership import member

logger = structlog.getLogger(__name__)

DEEP_CHECK_MAX_CELLS = 4_000_000


@enum.unique
class CheckName(enum.Enum):
    WITNESS_AT_INDEX = "witness_at_index"
    GENERATORS_BELOW_BETA = "generators_below_beta"
    BETA_ATTAINED = "beta_attained"
    WITNESS_ABOVE_BETA = "witness_above_beta"
    GENERATORS_IN_FAMILY = "generators_in_family"
    DEEP_NON_MEMBERSHIP = "deep_non_membership"
    WELL_FORMED = "well_formed"


@dataclasses.dataclass(frozen=True)
class CheckResult:
    name: CheckName
    passed: bool
    reason: str = ""


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def failed(self, name: CheckName) -> bool:
        return any(check.name is name for check in self.failures())


def _slope_at_most(pair: ExponentPair, beta: Slope) -> bool:
    return pair.b * beta.denominator <= beta.numerator * pair.a


def _slope_above(pair: ExponentPair, beta: Slope) -> bool:
    return pair.b * beta.denominator > beta.numerator * pair.a


def _lookup_witness_index(
    family: LambdaFamily, index: int, witness: ExponentPair
) -> ExponentPair | None:
    # fibonacci x-exponents grow at least like 2^(n-2), so larger indices cannot match
    if family.kind is FamilyKind.FIBONACCI and index > witness.a.bit_length() + 2:
        return None
    return element_at(family, index)


def _check_witness_at_index(cert: Certificate) -> CheckResult:
    found = _lookup_witness_index(
        cert.family, cert.witness_in_family_index, cert.witness
    )
    if found != cert.witness:
        return CheckResult(
            CheckName.WITNESS_AT_INDEX,
            False,
            f"element at index {cert.witness_in_family_index} of {cert.family} is "
            f"{found}, not {cert.witness}",
        )
    return CheckResult(CheckName.WITNESS_AT_INDEX, True)


def _check_generators_below_beta(cert: Certificate) -> CheckResult:
    above = [g for g in cert.generators if not _slope_at_most(g, cert.beta)]
    if above:
        return CheckResult(
            CheckName.GENERATORS_BELOW_BETA,
            False,
            f"generators {', '.join(map(str, above))} have slope above {cert.beta}",
        )
    return CheckResult(CheckName.GENERATORS_BELOW_BETA, True)


def _check_beta_attained(cert: Certificate) -> CheckResult:
    # beta must be the maximum generator slope, not just an upper bound
    attained = any(
        g.b * cert.beta.denominator == cert.beta.numerator * g.a
        for g in cert.generators
    )
    if not attained:
        return CheckResult(
            CheckName.BETA_ATTAINED,
            False,
            f"no generator has slope {cert.beta}",
        )
    return CheckResult(CheckName.BETA_ATTAINED, True)


def _check_witness_above_beta(cert: Certificate) -> CheckResult:
    if not _slope_above(cert.witness, cert.beta):
        return CheckResult(
            CheckName.WITNESS_ABOVE_BETA,
            False,
            f"witness slope {cert.witness.b}/{cert.witness.a} does not exceed "
            f"{cert.beta}",
        )
    return CheckResult(CheckName.WITNESS_ABOVE_BETA, True)


def _check_generators_in_family(cert: Certificate) -> CheckResult:
    outside = [g for g in cert.generators if not contains_element(cert.family, g)]
    if outside:
        return CheckResult(
            CheckName.GENERATORS_IN_FAMILY,
            False,
            f"generators {', '.join(map(str, outside))} are not in {cert.family}",
        )
    return CheckResult(CheckName.GENERATORS_IN_FAMILY, True)


def _check_deep_non_membership(
    generators: GeneratorSet, witness: ExponentPair
) -> CheckResult:
    cells = (witness.a + 1) * (witness.b + 1)
    if cells > DEEP_CHECK_MAX_CELLS:
        return CheckResult(
            CheckName.DEEP_NON_MEMBERSHIP,
            True,
            f"skipped, {cells} grid cells exceed {DEEP_CHECK_MAX_CELLS}",
        )
    factorization = member(generators, witness, use_slope_bound=False)
    if factorization is not None:
        return CheckResult(
            CheckName.DEEP_NON_MEMBERSHIP,
            False,
            f"witness factors as {factorization}",
        )
    return CheckResult(CheckName.DEEP_NON_MEMBERSHIP, True)


def verify_certificate(cert: Certificate, deep: bool = False) -> VerificationReport:
    checks = [
        _check_witness_at_index(cert),
        _check_generators_below_beta(cert),
        _check_beta_attained(cert),
        _check_witness_above_beta(cert),
        _check_generators_in_family(cert),
    ]
    if deep:
        checks.append(_check_deep_non_membership(cert.generators, cert.witness))
    report = VerificationReport(checks=tuple(checks))
    logger.info(
        "certificate verified",
        passed=report.passed,
        failures=[check.name.value for check in report.failures()],
    )
    return report


def malformed_report(reason: str) -> VerificationReport:
    return VerificationReport(
        checks=(CheckResult(CheckName.WELL_FORMED, False, reason),)
    )
