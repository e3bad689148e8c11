"""
JSON document models for the workbench values

Every value kind has a pydantic document model. The JSON schema of a kind
is generated from its model and used with jsonschema to validate raw input
before the model is built, so structural errors are reported with their
JSON path. Rationals are carried as decimal strings ``num`` / ``den``.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Type

import jsonschema
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import SerializationError

logger = logging.getLogger(__name__)

INTEGER_PATTERN = r"^-?[0-9]+$"
DENOMINATOR_PATTERN = r"^[1-9][0-9]*$"


def _descending(parts: List[int], what: str) -> List[int]:
    if any(x < 1 for x in parts):
        raise ValueError(f"{what} parts must be positive, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{what} must be non-increasing, got {parts}")
    return parts


class RationalDoc(BaseModel):
    """An exact rational num/den"""
    model_config = ConfigDict(extra="forbid")

    num: str = Field(..., pattern=INTEGER_PATTERN, description="Numerator as a decimal string")
    den: str = Field("1", pattern=DENOMINATOR_PATTERN, description="Positive denominator")

    @property
    def value(self) -> Fraction:
        return Fraction(int(self.num), int(self.den))

    @staticmethod
    def encode(value: Fraction) -> Dict[str, str]:
        value = Fraction(value)
        return {"num": str(value.numerator), "den": str(value.denominator)}


class SymFuncTermDoc(RationalDoc):
    partition: List[int] = Field(..., description="Power-sum partition, non-increasing")

    @field_validator("partition")
    @classmethod
    def validate_partition(cls, v):
        return _descending(v, "Partition")


class SymFuncDoc(BaseModel):
    """A truncated symmetric function in the power-sum basis"""
    model_config = ConfigDict(extra="forbid")

    max_weight: int = Field(..., ge=0, description="Truncation weight")
    terms: List[SymFuncTermDoc] = Field(default_factory=list)


class CharacterValueDoc(RationalDoc):
    cycle_type: List[int] = Field(..., description="Cycle type, non-increasing")

    @field_validator("cycle_type")
    @classmethod
    def validate_cycle_type(cls, v):
        return _descending(v, "Cycle type")


class CharacterDoc(BaseModel):
    """A virtual character of S_n by its values on cycle types"""
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=0, description="Degree of the symmetric group")
    values: List[CharacterValueDoc] = Field(default_factory=list)


class TruncationDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_weight: int = Field(..., ge=0)
    hexp_min_x2: int = Field(-2, le=0)
    max_q_weight: Optional[int] = Field(None, ge=0)
    hexp_max_x2: Optional[int] = None


class HLaurentTermDoc(RationalDoc):
    hexp_x2: int = Field(..., description="Doubled hbar exponent")
    p: List[int] = Field(default_factory=list)
    q: List[int] = Field(default_factory=list)

    @field_validator("p", "q")
    @classmethod
    def validate_parts(cls, v):
        return _descending(v, "Partition")


class HLaurentDoc(BaseModel):
    """A truncated Laurent series in hbar^(1/2) over symmetric functions"""
    model_config = ConfigDict(extra="forbid")

    trunc: TruncationDoc
    terms: List[HLaurentTermDoc] = Field(default_factory=list)


class QSeriesTermDoc(RationalDoc):
    exp_x2: int = Field(..., description="Doubled hbar exponent")
    deg: int = Field(0, ge=0, description="Degree in the auxiliary variable")


class QSeriesDoc(BaseModel):
    """A Laurent series in hbar^(1/2), optionally polynomial in one auxiliary variable"""
    model_config = ConfigDict(extra="forbid")

    var: str = Field("hbar", pattern=r"^hbar$")
    half_exponents: bool = True
    prec_x2: Optional[int] = Field(None, description="Doubled precision; null when exact")
    aux: Optional[str] = None
    aux_max: Optional[int] = Field(None, ge=0)
    terms: List[QSeriesTermDoc] = Field(default_factory=list)


class TableEntryDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    g: int = Field(..., ge=0)
    n: int = Field(..., ge=0)
    character: CharacterDoc


class CharTableDoc(BaseModel):
    """A stable S-module at character level"""
    model_config = ConfigDict(extra="forbid")

    entries: List[TableEntryDoc] = Field(default_factory=list)


class GraphDoc(BaseModel):
    """A stable graph: flags, involution, vertex partition and genera"""
    model_config = ConfigDict(extra="forbid")

    flags: int = Field(..., ge=0)
    involution: List[int]
    vertex_of: List[int]
    genus: List[int]
    legs: Optional[Dict[str, int]] = Field(None, description="Leg flag -> label 1..n")


DOCUMENTS: Dict[str, Type[BaseModel]] = {
    "symfunc": SymFuncDoc,
    "character": CharacterDoc,
    "hlaurent": HLaurentDoc,
    "qseries": QSeriesDoc,
    "table": CharTableDoc,
    "graph": GraphDoc,
}


def schema_for(kind: str) -> Dict[str, Any]:
    """JSON schema of a document kind"""
    if kind not in DOCUMENTS:
        raise SerializationError(f"Unknown document kind '{kind}', expected one of {sorted(DOCUMENTS)}")
    schema = DOCUMENTS[kind].model_json_schema()
    schema["$schema"] = "http://json-schema.org/draft-07/schema#"
    return schema


def parse_document(kind: str, data: Any) -> BaseModel:
    """
    Validate raw JSON data against the schema of ``kind`` and build its model

    Args:
        kind: document kind
        data: decoded JSON

    Returns:
        The pydantic document

    Raises:
        SerializationError: with the JSON path of the first offending element
    """
    schema = schema_for(kind)
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        logger.debug(f"{len(errors)} schema violations in {kind} document")
        raise SerializationError(first.message, list(first.absolute_path))
    try:
        return DOCUMENTS[kind].model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise SerializationError(error["msg"], [part for part in error["loc"]])
