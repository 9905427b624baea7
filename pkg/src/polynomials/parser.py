import re
from pathlib import Path

import structlog

from ..internal_types import Exponent, NonFgError
from .coefficient_rings import INTEGERS, CoefficientRing
from .sparse_poly import SparsePoly

logger = structlog.getLogger(__name__)

TERM_PATTERN = re.compile(
    r"^\s*(?P<c>-?[0-9]+)\s*\*\s*x\s*\^\s*(?P<a>-?[0-9]+)\s*\*\s*y\s*\^\s*(?P<b>-?[0-9]+)\s*$"
)


class PolynomialParseError(NonFgError, ValueError):
    pass


def parse_poly(text: str, ring: CoefficientRing = INTEGERS) -> SparsePoly:
    """Parse "c*x^a*y^b + c*x^a*y^b + ..."; coefficients are reduced into `ring`."""
    if not text.strip():
        raise PolynomialParseError("empty polynomial")
    terms: list[tuple[Exponent, int]] = []
    for raw_term in text.split("+"):
        match = TERM_PATTERN.match(raw_term)
        if match is None:
            raise PolynomialParseError(
                f"malformed term {raw_term.strip()!r}, expected 'c*x^a*y^b'"
            )
        a, b = int(match["a"]), int(match["b"])
        if a < 0 or b < 0:
            raise PolynomialParseError(f"negative exponent in term {raw_term.strip()!r}")
        terms.append((Exponent(a, b), int(match["c"])))
    return SparsePoly.from_terms(ring, terms)


def parse_poly_lines(text: str, ring: CoefficientRing = INTEGERS) -> list[SparsePoly]:
    """One polynomial per line; blank lines and '#' comments are skipped."""
    polys = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            polys.append(parse_poly(content, ring))
        except PolynomialParseError as ex:
            raise PolynomialParseError(f"line {line_number}: {ex}") from ex
    return polys


def parse_poly_file(path: Path, ring: CoefficientRing = INTEGERS) -> list[SparsePoly]:
    logger.info("reading polynomials", path=str(path), ring=str(ring))
    return parse_poly_lines(path.read_text(), ring)
