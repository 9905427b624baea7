import argparse
import dataclasses
import enum
import typing as _t
from collections.abc import Sequence
from pathlib import Path

import structlog
from rich.console import Console

from .certificates.verifier import VerificationReport
from .certificates.witness import (
    TheoremNotApplicable,
    construct_witness,
    construct_witness_from_generators,
    escalation_chain,
)
from .internal_types import Certificate, NonFgError
from .logger import setup_logging
from .monoid.exponents import parse_exponent, slope_of
from .monoid.lambda_families import enumerate_family, hypothesis_check
from .monoid.membership import factorizations, member
from .polynomials.coefficient_rings import ring_for_modulus
from .polynomials.parser import parse_poly_file
from .polynomials.sparse_poly import format_poly
from .polynomials.subalgebra import in_subalgebra
from .serialization import (
    DocumentKind,
    document_schema,
    load_certificate_document,
    load_family,
    load_generators,
    verify_certificate_document,
    write_certificate,
)
from .utils import deep_verify_by_default

logger = structlog.getLogger(__name__)

DEFAULT_ENUMERATION_COUNT = 10
DEFAULT_FACTORIZATION_LIMIT = 10


@enum.unique
class ExitCode(enum.IntEnum):
    AFFIRMATIVE = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    NOT_APPLICABLE = 3


@enum.unique
class Subcommand(enum.Enum):
    ENUMERATE = "enumerate"
    MEMBERSHIP = "membership"
    WITNESS = "witness"
    VERIFY = "verify"
    POLY = "poly"
    CHAIN = "chain"
    HYPOTHESIS = "hypothesis"
    SCHEMA = "schema"


@dataclasses.dataclass(frozen=True)
class CliConfig:
    subcommand: Subcommand
    family_path: Path | None = None
    generators_path: Path | None = None
    polys_path: Path | None = None
    certificate_path: Path | None = None
    output_path: Path | None = None
    output_dir: Path | None = None
    modulus: int | None = None
    k: int = DEFAULT_ENUMERATION_COUNT
    limit: int = DEFAULT_FACTORIZATION_LIMIT
    show_all: bool = False
    target: str | None = None
    deep: bool = False
    document_kind: DocumentKind | None = None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonfg",
        description="Monoid membership and non-finite-generation certificates "
        "for monomial subrings R[M(Lambda)] of R[x,y].",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    enumerate_parser = subparsers.add_parser(
        Subcommand.ENUMERATE.value, help="list the first k family elements"
    )
    enumerate_parser.add_argument("family", type=Path)
    enumerate_parser.add_argument(
        "-k", type=_positive_int, default=DEFAULT_ENUMERATION_COUNT
    )

    membership_parser = subparsers.add_parser(
        Subcommand.MEMBERSHIP.value, help="decide whether A,B is a sum of generators"
    )
    membership_parser.add_argument("generators", type=Path)
    membership_parser.add_argument("target", help="target exponent as 'A,B'")
    membership_parser.add_argument(
        "--all", action="store_true", dest="show_all", help="list factorizations"
    )
    membership_parser.add_argument(
        "--limit", type=_positive_int, default=DEFAULT_FACTORIZATION_LIMIT
    )

    witness_parser = subparsers.add_parser(
        Subcommand.WITNESS.value, help="construct a non-generation certificate"
    )
    witness_parser.add_argument("family", type=Path)
    source = witness_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--generators", type=Path, dest="generators")
    source.add_argument("--polys", type=Path, dest="polys")
    witness_parser.add_argument("--mod", type=int, dest="modulus")
    witness_parser.add_argument("--out", type=Path, dest="output")

    verify_parser = subparsers.add_parser(
        Subcommand.VERIFY.value, help="check a certificate file"
    )
    verify_parser.add_argument("certificate", type=Path)
    verify_parser.add_argument(
        "--deep",
        action="store_true",
        default=deep_verify_by_default(),
        help="also run the grid search on the witness",
    )

    poly_parser = subparsers.add_parser(
        Subcommand.POLY.value, help="decide membership of polynomials in R[M(Lambda)]"
    )
    poly_parser.add_argument("family", type=Path)
    poly_parser.add_argument("polys", type=Path)
    poly_parser.add_argument("--mod", type=int, dest="modulus")

    chain_parser = subparsers.add_parser(
        Subcommand.CHAIN.value, help="certificates against growing prefixes"
    )
    chain_parser.add_argument("family", type=Path)
    chain_parser.add_argument(
        "-k", type=_positive_int, default=DEFAULT_ENUMERATION_COUNT
    )
    chain_parser.add_argument("--out-dir", type=Path, dest="output_dir")

    hypothesis_parser = subparsers.add_parser(
        Subcommand.HYPOTHESIS.value, help="report whether the theorem applies"
    )
    hypothesis_parser.add_argument("family", type=Path)

    schema_parser = subparsers.add_parser(
        Subcommand.SCHEMA.value, help="print the schema of a file format"
    )
    schema_parser.add_argument(
        "document_kind", choices=[kind.value for kind in DocumentKind]
    )
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    namespace: dict[str, _t.Any] = vars(args)
    return CliConfig(
        subcommand=Subcommand(namespace["subcommand"]),
        family_path=namespace.get("family"),
        generators_path=namespace.get("generators"),
        polys_path=namespace.get("polys"),
        certificate_path=namespace.get("certificate"),
        output_path=namespace.get("output"),
        output_dir=namespace.get("output_dir"),
        modulus=namespace.get("modulus"),
        k=namespace.get("k") or DEFAULT_ENUMERATION_COUNT,
        limit=namespace.get("limit") or DEFAULT_FACTORIZATION_LIMIT,
        show_all=namespace.get("show_all", False),
        target=namespace.get("target"),
        deep=namespace.get("deep", False),
        document_kind=(
            DocumentKind(namespace["document_kind"])
            if namespace.get("document_kind")
            else None
        ),
    )


def _stdout() -> Console:
    return Console(soft_wrap=True, highlight=False, markup=False, emoji=False)


def _stderr() -> Console:
    return Console(
        stderr=True, soft_wrap=True, highlight=False, markup=False, emoji=False
    )


def _required(path: Path | None) -> Path:
    assert path is not None, "argparse guarantees the positional argument"
    return path


def cmd_enumerate(config: CliConfig, out: Console) -> ExitCode:
    family = load_family(_required(config.family_path))
    for pair in enumerate_family(family, config.k):
        out.print(f"{pair} slope={slope_of(pair)}")
    return ExitCode.AFFIRMATIVE


def cmd_membership(config: CliConfig, out: Console) -> ExitCode:
    generators = load_generators(_required(config.generators_path))
    target = parse_exponent(config.target or "")
    if config.show_all:
        found = factorizations(generators, target, config.limit)
    else:
        first = member(generators, target)
        found = [first] if first is not None else []
    if not found:
        out.print("not-a-member")
        return ExitCode.NEGATIVE
    out.print("member")
    for factorization in found:
        out.print(f"  {target} = {factorization}")
    return ExitCode.AFFIRMATIVE


def _print_certificate_summary(out: Console, certificate: Certificate) -> None:
    out.print(f"generators={certificate.generators}")
    out.print(f"beta={certificate.beta}")
    out.print(
        f"witness={certificate.witness} slope={slope_of(certificate.witness)} "
        f"index={certificate.witness_in_family_index}"
    )


def cmd_witness(config: CliConfig, out: Console) -> ExitCode:
    family = load_family(_required(config.family_path))
    if config.generators_path is not None:
        certificate = construct_witness_from_generators(
            family, load_generators(config.generators_path)
        )
    else:
        polys = parse_poly_file(
            _required(config.polys_path), ring_for_modulus(config.modulus)
        )
        certificate = construct_witness(family, polys)
    _print_certificate_summary(out, certificate)
    if config.output_path is not None:
        write_certificate(config.output_path, certificate)
    return ExitCode.AFFIRMATIVE


def _print_report(out: Console, report: VerificationReport) -> None:
    out.print("pass" if report.passed else "fail")
    for check in report.checks:
        if not check.passed or check.reason:
            out.print(f"  {check.name.value}: {check.reason}")


def cmd_verify(config: CliConfig, out: Console) -> ExitCode:
    document = load_certificate_document(_required(config.certificate_path))
    report = verify_certificate_document(document, deep=config.deep)
    _print_report(out, report)
    return ExitCode.AFFIRMATIVE if report.passed else ExitCode.NEGATIVE


def cmd_poly(config: CliConfig, out: Console) -> ExitCode:
    family = load_family(_required(config.family_path))
    polys = parse_poly_file(_required(config.polys_path), ring_for_modulus(config.modulus))
    all_inside = True
    for poly in polys:
        result = in_subalgebra(poly, family)
        out.print(format_poly(poly))
        if not result.inside:
            all_inside = False
            out.print("  not inside")
            for obstruction in result.obstructions:
                out.print(f"  obstruction {obstruction}")
            continue
        generating = ",".join(str(g) for g in sorted(result.generating_monomials))
        out.print("  inside")
        out.print(f"  M*(f) = {{{generating}}}")
        for exponent, factorization in sorted(result.factorizations.items()):
            out.print(f"  {exponent} = {factorization}")
    return ExitCode.AFFIRMATIVE if all_inside else ExitCode.NEGATIVE


def cmd_chain(config: CliConfig, out: Console) -> ExitCode:
    family = load_family(_required(config.family_path))
    chain = escalation_chain(family, config.k)
    if config.output_dir is not None:
        config.output_dir.mkdir(parents=True, exist_ok=True)
    for length, certificate in enumerate(chain, start=1):
        out.print(
            f"{length}: beta={certificate.beta} witness={certificate.witness} "
            f"index={certificate.witness_in_family_index}"
        )
        if config.output_dir is not None:
            write_certificate(
                config.output_dir / f"certificate_{length}.json", certificate
            )
    return ExitCode.AFFIRMATIVE


def cmd_hypothesis(config: CliConfig, out: Console) -> ExitCode:
    report = hypothesis_check(load_family(_required(config.family_path)))
    for field in dataclasses.fields(report):
        value = getattr(report, field.name)
        out.print(f"{field.name}={'unknown' if value is None else value}")
    return ExitCode.AFFIRMATIVE if report.theorem_applies else ExitCode.NOT_APPLICABLE


def cmd_schema(config: CliConfig, out: Console) -> ExitCode:
    assert config.document_kind is not None
    out.print(document_schema(config.document_kind))
    return ExitCode.AFFIRMATIVE


SubcommandToHandler: dict[Subcommand, _t.Callable[[CliConfig, Console], ExitCode]] = {
    Subcommand.ENUMERATE: cmd_enumerate,
    Subcommand.MEMBERSHIP: cmd_membership,
    Subcommand.WITNESS: cmd_witness,
    Subcommand.VERIFY: cmd_verify,
    Subcommand.POLY: cmd_poly,
    Subcommand.CHAIN: cmd_chain,
    Subcommand.HYPOTHESIS: cmd_hypothesis,
    Subcommand.SCHEMA: cmd_schema,
}


def main(argv: Sequence[str] | None = None) -> int:
    config = parse_config(argv)
    log = logger.bind(subcommand=config.subcommand.value)
    log.info("running command", config=config)
    try:
        return SubcommandToHandler[config.subcommand](config, _stdout())
    except TheoremNotApplicable as ex:
        _stderr().print(str(ex))
        return ExitCode.NOT_APPLICABLE
    except (NonFgError, ValueError, OSError) as ex:
        log.info("input error", error=str(ex))
        _stderr().print(f"error: {ex}")
        return ExitCode.INPUT_ERROR


def entry_point() -> None:
    setup_logging(name="nonfg")
    raise SystemExit(main())
