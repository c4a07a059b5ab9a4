"""Request and response models for the HTTP service.

All rational values travel as "num/den" strings; every response carries a
"schema" version field.  max_degree defaults to the server-side configured
cap (FGL_MAX_DEGREE or 8) when omitted.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1"


class CapRequest(BaseModel):
    max_degree: Optional[int] = Field(default=None, ge=1, le=12)


class AlphaRequest(CapRequest):
    i: int = Field(ge=1)
    j: int = Field(ge=1)


class ClassRequest(CapRequest):
    cls: str = Field(alias="class")

    model_config = {"populate_by_name": True}


class ChernRequest(ClassRequest):
    omega: list[int]


class StarRequest(CapRequest):
    left: str
    right: str


class GeneratorsRequest(CapRequest):
    kind: Literal["e", "z", "x", "y"] = "x"
    degree: Optional[int] = None


class HoehnRequest(CapRequest):
    p: list[str] = Field(min_length=4, max_length=4)


class KricheverCheckRequest(CapRequest):
    law: Literal["universal", "abel", "buchstaber"] = "universal"


class IdealRequest(CapRequest):
    action: Literal["report", "member", "equal", "regularity"]
    generators: list[str]
    generators2: Optional[list[str]] = None
    cls: Optional[str] = Field(default=None, alias="class")

    model_config = {"populate_by_name": True}


class VerifyRequest(CapRequest):
    suite: str = "all"


class ClassResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    cls: str = Field(alias="class")

    model_config = {"populate_by_name": True}


class ValueResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    value: str

    model_config = {"populate_by_name": True}


class GeneratorsResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    records: list[dict]

    model_config = {"populate_by_name": True}


class EliminationResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    images: dict[str, str]
    krichever: dict
    params: Optional[list[str]] = None

    model_config = {"populate_by_name": True}


class HoehnResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    p: list[str]
    images: dict[str, str]

    model_config = {"populate_by_name": True}


class KricheverCheckResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    law: str
    report: dict

    model_config = {"populate_by_name": True}


class IdealResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    action: str
    result: dict

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    max_degree: int
    suites: list[dict]
    passed: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class ErrorResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    error: str

    model_config = {"populate_by_name": True}
