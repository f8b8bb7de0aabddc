"""Request and response models for the HTTP service."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .. import SCHEMA

Tag = Literal["A", "B", "D"]


class StatsRequest(BaseModel):
    word: str
    group: Tag


class StatsResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    group: Tag
    n: int
    word: list[int]
    stats: dict[str, int]

    model_config = {"populate_by_name": True}


class SortRequest(BaseModel):
    word: str
    group: Tag
    trace: bool = False


class SortResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    group: Tag
    n: int
    word: list[int]
    factors: list[list[int]]
    sor: int
    trace: Optional[list[list[int]]] = None

    model_config = {"populate_by_name": True}


class DistRequest(BaseModel):
    group: Tag
    n: int = Field(ge=1)
    q_stat: str
    t_stat: Optional[str] = None
    compare: Optional[Literal["S", "B", "D"]] = None
    threads: int = Field(default=1, ge=1, le=64)
    max_elements: int = Field(default=2_000_000, ge=1)


class DistResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    group: Tag
    n: int
    q_stat: str
    t_stat: Optional[str]
    terms: list[list[int]]
    text: str
    compare: Optional[str] = None
    equal: Optional[bool] = None

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    suite: Literal["all", "props", "identities", "oracle"] = "all"
    max_n: Optional[dict[Tag, int]] = None
    threads: int = Field(default=1, ge=1, le=64)


class CheckRow(BaseModel):
    suite: str
    name: str
    ok: bool
    seconds: float
    detail: str


class VerifyResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    suite: str
    ok: bool
    checks: list[CheckRow]

    model_config = {"populate_by_name": True}


class BijectionRequest(BaseModel):
    word: str
    inverse: bool = False


class BijectionResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    word: list[int]
    result: list[int]

    model_config = {"populate_by_name": True}


class BcodeRequest(BaseModel):
    word: str


class BcodeResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    word: list[int]
    code: list[int]
    sor: int

    model_config = {"populate_by_name": True}


class OracleTableRequest(BaseModel):
    group: Tag
    n: int = Field(ge=1)
    generators: Literal["simple", "reflections"]


class OracleTableResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    group: Tag
    n: int
    generators: str
    csv: str

    model_config = {"populate_by_name": True}
