"""File documents: family descriptions, generator sets and certificates.

Every integer is written as a decimal string so arbitrary precision survives any reader.
Bare JSON integers are accepted on input.
"""

import dataclasses
import enum
import json
import re
import typing as _t
from pathlib import Path

import structlog
from dataclasses_avroschema import AvroModel

from .certificates.verifier import (
    VerificationReport,
    malformed_report,
    verify_certificate,
)
from .internal_types import (
    Certificate,
    ExponentPair,
    FamilyKind,
    GeneratorSet,
    LambdaFamily,
    NonFgError,
    Slope,
    finite_family,
    make_generator_set,
)

logger = structlog.getLogger(__name__)

CERTIFICATE_VERSION = "nonfg-cert/1"

DECIMAL_PATTERN = re.compile(r"^[0-9]+$")


class DocumentFormatError(NonFgError, ValueError):
    pass


class UnsupportedVersionError(DocumentFormatError):
    pass


@dataclasses.dataclass
class FamilyDocument(AvroModel):
    kind: str
    elements: list[list[str]] = dataclasses.field(default_factory=list)


@dataclasses.dataclass
class GeneratorsDocument(AvroModel):
    generators: list[list[str]]


@dataclasses.dataclass
class SlopeDocument(AvroModel):
    numerator: str
    denominator: str


@dataclasses.dataclass
class CertificateDocument(AvroModel):
    version: str
    family: FamilyDocument
    generators: list[list[str]]
    beta: SlopeDocument
    witness: list[str]
    witness_in_family_index: str
    created_from: _t.Optional[list[str]] = None


@enum.unique
class DocumentKind(enum.Enum):
    FAMILY = "family"
    GENERATORS = "generators"
    CERTIFICATE = "certificate"


DocumentKindToRecordClass: dict[DocumentKind, _t.Type[AvroModel]] = {
    DocumentKind.FAMILY: FamilyDocument,
    DocumentKind.GENERATORS: GeneratorsDocument,
    DocumentKind.CERTIFICATE: CertificateDocument,
}


def document_schema(kind: DocumentKind) -> str:
    return DocumentKindToRecordClass[kind].avro_schema()


def _stringify_integers(value: _t.Any) -> _t.Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, list):
        return [_stringify_integers(item) for item in value]
    if isinstance(value, dict):
        return {key: _stringify_integers(item) for key, item in value.items()}
    return value


def _parse_record(kind: DocumentKind, raw: _t.Any) -> AvroModel:
    if not isinstance(raw, dict):
        raise DocumentFormatError(f"{kind.value} document must be a JSON object")
    record_class = DocumentKindToRecordClass[kind]
    known = {field.name for field in dataclasses.fields(record_class)}
    unknown = set(raw) - known
    if unknown:
        raise DocumentFormatError(
            f"unknown fields in {kind.value} document: {sorted(unknown)}"
        )
    try:
        return record_class.parse_obj(_stringify_integers(raw))
    except Exception as ex:
        raise DocumentFormatError(f"malformed {kind.value} document: {ex}") from ex


def parse_document(kind: DocumentKind, text: str) -> AvroModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as ex:
        raise DocumentFormatError(f"invalid JSON in {kind.value} document: {ex}") from ex
    if kind is DocumentKind.CERTIFICATE:
        version = raw.get("version") if isinstance(raw, dict) else None
        if version != CERTIFICATE_VERSION:
            raise UnsupportedVersionError(
                f"unsupported certificate version: {version!r}"
            )
    return _parse_record(kind, raw)


def read_document(kind: DocumentKind, path: Path) -> AvroModel:
    logger.info("reading document", kind=kind.value, path=str(path))
    try:
        text = path.read_text()
    except OSError as ex:
        raise DocumentFormatError(f"cannot read {path}: {ex}") from ex
    return parse_document(kind, text)


def _omit_empty_elements(family: dict[str, _t.Any]) -> None:
    # vertical and fibonacci families are written as {"kind": ...}
    if not family.get("elements"):
        family.pop("elements", None)


def render_document(record: AvroModel) -> bytes:
    """Canonical bytes: 2-space indented JSON in field order, trailing newline."""
    payload = record.to_dict()
    if isinstance(record, FamilyDocument):
        _omit_empty_elements(payload)
    elif isinstance(record, CertificateDocument):
        _omit_empty_elements(payload["family"])
    return (json.dumps(payload, indent=2) + "\n").encode()


def _decimal(value: str, where: str) -> int:
    if not DECIMAL_PATTERN.match(value):
        raise DocumentFormatError(f"{where}: expected a decimal string, got {value!r}")
    return int(value)


def _pair(values: list[str], where: str) -> ExponentPair:
    if len(values) != 2:
        raise DocumentFormatError(f"{where}: expected [a, b], got {values!r}")
    return ExponentPair(_decimal(values[0], where), _decimal(values[1], where))


def _pair_values(pair: ExponentPair) -> list[str]:
    return [str(pair.a), str(pair.b)]


def family_from_document(document: FamilyDocument) -> LambdaFamily:
    try:
        kind = FamilyKind(document.kind)
    except ValueError as ex:
        raise DocumentFormatError(f"unknown family kind {document.kind!r}") from ex
    if kind is FamilyKind.FINITE:
        return finite_family(
            _pair(values, f"elements[{i}]") for i, values in enumerate(document.elements)
        )
    if document.elements:
        raise DocumentFormatError(f"{kind.value} family takes no elements")
    return LambdaFamily(kind=kind)


def family_to_document(family: LambdaFamily) -> FamilyDocument:
    return FamilyDocument(
        kind=family.kind.value,
        elements=[_pair_values(pair) for pair in family.elements],
    )


def _generators_from_values(values: list[list[str]]) -> GeneratorSet:
    pairs = [_pair(value, f"generators[{i}]") for i, value in enumerate(values)]
    if len(set(pairs)) != len(pairs):
        raise DocumentFormatError("generators must be distinct")
    return make_generator_set(pairs)


def generators_from_document(document: GeneratorsDocument) -> GeneratorSet:
    return _generators_from_values(document.generators)


def generators_to_document(generators: GeneratorSet) -> GeneratorsDocument:
    return GeneratorsDocument(generators=[_pair_values(g) for g in generators])


def certificate_to_document(certificate: Certificate) -> CertificateDocument:
    return CertificateDocument(
        version=CERTIFICATE_VERSION,
        family=family_to_document(certificate.family),
        generators=[_pair_values(g) for g in certificate.generators],
        beta=SlopeDocument(
            numerator=str(certificate.beta.numerator),
            denominator=str(certificate.beta.denominator),
        ),
        witness=_pair_values(certificate.witness),
        witness_in_family_index=str(certificate.witness_in_family_index),
        created_from=(
            list(certificate.created_from)
            if certificate.created_from is not None
            else None
        ),
    )


def certificate_from_document(document: CertificateDocument) -> Certificate:
    if document.version != CERTIFICATE_VERSION:
        raise UnsupportedVersionError(
            f"unsupported certificate version: {document.version!r}"
        )
    return Certificate(
        family=family_from_document(document.family),
        generators=_generators_from_values(document.generators),
        beta=Slope(
            numerator=_decimal(document.beta.numerator, "beta.numerator"),
            denominator=_decimal(document.beta.denominator, "beta.denominator"),
        ),
        witness=_pair(document.witness, "witness"),
        witness_in_family_index=_decimal(
            document.witness_in_family_index, "witness_in_family_index"
        ),
        created_from=(
            tuple(document.created_from) if document.created_from is not None else None
        ),
    )


def dump_certificate(certificate: Certificate) -> bytes:
    return render_document(certificate_to_document(certificate))


def write_certificate(path: Path, certificate: Certificate) -> None:
    path.write_bytes(dump_certificate(certificate))
    logger.info("certificate written", path=str(path))


def load_family(path: Path) -> LambdaFamily:
    document = read_document(DocumentKind.FAMILY, path)
    assert isinstance(document, FamilyDocument)
    return family_from_document(document)


def load_generators(path: Path) -> GeneratorSet:
    document = read_document(DocumentKind.GENERATORS, path)
    assert isinstance(document, GeneratorsDocument)
    return generators_from_document(document)


def load_certificate_document(path: Path) -> CertificateDocument:
    document = read_document(DocumentKind.CERTIFICATE, path)
    assert isinstance(document, CertificateDocument)
    return document


def verify_certificate_document(
    document: CertificateDocument, deep: bool = False
) -> VerificationReport:
    """Verify a decoded document; content that does not even decode fails the report."""
    try:
        certificate = certificate_from_document(document)
    except UnsupportedVersionError:
        raise
    except NonFgError as ex:
        logger.warning("certificate content is malformed", error=str(ex))
        return malformed_report(str(ex))
    return verify_certificate(certificate, deep=deep)
