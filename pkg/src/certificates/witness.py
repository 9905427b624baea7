"""Witnesses that a finite set of polynomials does not generate R[M(Lambda)] over R[x].

For a finite F inside R[M(Lambda)], every product of the chosen generating monomials
M*(F) has slope at most beta = max slope of M*(F). The family has elements of slope
strictly above beta, and the first of them in canonical order is the witness.
"""

import typing as _t

import structlog

from ..internal_types import (
    Certificate,
    GeneratorSet,
    LambdaFamily,
    NonFgError,
    make_generator_set,
)
from ..monoid.exponents import Ordering, compare_slopes, slope_of
from ..monoid.lambda_families import (
    contains_element,
    enumerate_family,
    exceed_slope_indexed,
    hypothesis_check,
)
from ..monoid.membership import max_slope
from ..polynomials.sparse_poly import SparsePoly, format_poly
from ..polynomials.subalgebra import extract_mstar

logger = structlog.getLogger(__name__)


class TheoremNotApplicable(NonFgError):
    pass


class GeneratorNotInFamily(NonFgError, ValueError):
    pass


def _ensure_theorem_applies(family: LambdaFamily) -> None:
    report = hypothesis_check(family)
    if not report.theorem_applies:
        raise TheoremNotApplicable(f"theorem not applicable: {report.reason}")


def _build_certificate(
    family: LambdaFamily,
    generators: GeneratorSet,
    created_from: tuple[str, ...] | None,
) -> Certificate:
    for generator in generators:
        if not contains_element(family, generator):
            raise GeneratorNotInFamily(f"{generator} is not an element of {family}")
    beta = max_slope(generators)
    index, witness = exceed_slope_indexed(family, beta)
    certificate = Certificate(
        family=family,
        generators=generators,
        beta=beta,
        witness=witness,
        witness_in_family_index=index,
        created_from=created_from,
    )
    assert (
        compare_slopes(slope_of(witness), beta) is Ordering.GREATER
    ), f"{witness=} does not exceed {beta=}"
    logger.info(
        "witness found",
        family=str(family),
        generators=str(generators),
        beta=str(beta),
        witness=str(witness),
        index=index,
    )
    return certificate


def construct_witness_from_generators(
    family: LambdaFamily, generators: GeneratorSet
) -> Certificate:
    _ensure_theorem_applies(family)
    return _build_certificate(family, generators, created_from=None)


def construct_witness(
    family: LambdaFamily, polys: _t.Sequence[SparsePoly]
) -> Certificate:
    _ensure_theorem_applies(family)
    generators = extract_mstar(polys, family)
    return _build_certificate(
        family, generators, created_from=tuple(format_poly(p) for p in polys)
    )


def escalation_chain(family: LambdaFamily, k: int) -> list[Certificate]:
    """One certificate against each prefix of length 1..k of the canonical enumeration.

    This is evidence by construction: every prefix fails, matching the argument that no
    finite subset generates, but it cannot range over all finite subsets at once.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _ensure_theorem_applies(family)
    prefix = enumerate_family(family, k)
    chain = []
    for length in range(1, k + 1):
        certificate = _build_certificate(
            family, make_generator_set(prefix[:length]), created_from=None
        )
        assert (
            certificate.witness_in_family_index > length - 1
        ), f"witness index {certificate.witness_in_family_index} inside prefix {length}"
        chain.append(certificate)
    return chain
