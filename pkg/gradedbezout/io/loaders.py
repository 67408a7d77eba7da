"""Input providers.

Inputs come either from a file or from JSON given inline on the command line.
Both are read through the ``InputProvider`` protocol and validated against the
schemas in ``gradedbezout.io.schemas``.
"""

import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, Protocol, TypeVar

from pydantic import ValidationError

from gradedbezout.core.binomial_core import NumericalPolynomial
from gradedbezout.core.kolchin import ExponentMatrix
from gradedbezout.errors import InputError
from gradedbezout.graded.system import GradedSystem
from gradedbezout.io.schemas import (
    JacobiFile,
    MatrixFile,
    PolynomialFile,
    SystemFile,
    parse_text_matrix,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")


class InputProvider(Protocol):
    """Protocol defining how raw input is obtained."""

    def load(self) -> Any:
        """Return the decoded JSON document, or the raw text for text formats.

        Raises:
            InputError: If the input cannot be read or decoded.
        """
        ...


class FileInputProvider:
    """Reads input from a file.

    Files whose first non-blank character is ``{`` or ``[`` are decoded as
    JSON; anything else is returned as text.

    Attributes:
        path: Path to the input file.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def load(self) -> Any:
        logger.info("Loading input from: %s", self.path)
        try:
            text = self.path.read_text()
        except OSError as e:
            raise InputError(f"Cannot read input file {self.path}: {e!s}") from e
        return _decode(text)


class InlineInputProvider:
    """Input given as a string on the command line."""

    def __init__(self, text: str):
        self._text = text

    def load(self) -> Any:
        return _decode(self._text)


def _decode(text: str) -> Any:
    if not text.lstrip().startswith(("{", "[")):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        logger.error("Failed to parse input JSON: %s", str(e))
        raise InputError(f"Invalid JSON input: {e!s}") from e


def provider_for(value: str) -> InputProvider:
    """Inline provider for JSON literals, file provider for anything else."""
    if value.lstrip().startswith(("{", "[")):
        return InlineInputProvider(value)
    return FileInputProvider(value)


def _validated(kind: str, build: Callable[[], T]) -> T:
    try:
        return build()
    except ValidationError as e:
        logger.error("Invalid %s input: %s", kind, str(e))
        raise InputError(f"{kind} validation failed: {e!s}") from e
    except (ValueError, TypeError) as e:
        raise InputError(f"{kind} input rejected: {e!s}") from e


def _require_mapping(kind: str, raw: Any) -> dict:
    if not isinstance(raw, dict):
        raise InputError(f"{kind} input must be a JSON object")
    return raw


def load_matrix(provider: InputProvider) -> ExponentMatrix:
    """Exponent matrix from JSON ``{"m": .., "rows": ..}`` or the text format."""
    raw = provider.load()
    if isinstance(raw, str):
        return _validated("Matrix", lambda: parse_text_matrix(raw).to_matrix())
    raw = _require_mapping("Matrix", raw)
    return _validated("Matrix", lambda: MatrixFile(**raw).to_matrix())


def load_polynomial(provider: InputProvider) -> NumericalPolynomial:
    """Numerical polynomial from ``{"standard_coeffs": [...]}``."""
    raw = _require_mapping("Polynomial", provider.load())
    return _validated("Polynomial", lambda: PolynomialFile(**raw).to_polynomial())


def load_system(provider: InputProvider) -> GradedSystem:
    """Graded system in generator or leader-matrix form."""
    raw = _require_mapping("System", provider.load())
    system = _validated("System", lambda: SystemFile(**raw).to_system())
    logger.info(
        "Loaded system",
        extra={"m": system.m, "n": system.n, "leader_form": system.is_leader_form},
    )
    return system


def load_jacobi(provider: InputProvider) -> list[list[int | None]]:
    """Square order matrix from ``{"matrix": [[..], ..]}``."""
    raw = _require_mapping("Jacobi", provider.load())
    return _validated("Jacobi", lambda: JacobiFile(**raw).matrix)
