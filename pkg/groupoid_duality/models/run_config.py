"""
命令行运行配置。
"""

from typing import List, Literal, Optional, get_args

from pydantic import BaseModel, Field, field_validator

from groupoid_duality.algebra.field import FieldSpec
from groupoid_duality.errors import MalformedInputError

Subcommand = Literal[
    "validate",
    "components",
    "repfun",
    "characters",
    "round-trip",
    "hom-check",
    "decompose",
    "corpus",
]
SUBCOMMANDS = get_args(Subcommand)


class RunConfig(BaseModel):
    """一次运行的全部参数；相同的配置和输入总是得到相同的 JSON 报告。"""

    subcommand: Subcommand
    inputs: List[str] = Field(default_factory=list)
    hopf: Optional[str] = None
    base_point: int = Field(default=0, ge=0)
    field: str = "rational"
    depth: int = Field(default=2, ge=1)
    max_rank: int = Field(default=16, ge=1)
    seed: int = Field(default=0, ge=0)
    samples: int = Field(default=100, ge=0)
    output: Literal["text", "json"] = "text"
    guard: int = Field(default=10, ge=1)
    max_dim: int = Field(default=12, ge=1)
    max_prime: int = Field(default=5, ge=2)
    data_dir: str = "data"
    corpus_file: str = "data/corpus.json"

    @field_validator("field")
    @classmethod
    def _field_parses(cls, value: str) -> str:
        try:
            FieldSpec.parse(value)
        except MalformedInputError as e:
            raise ValueError(str(e))
        return value.strip().lower()

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)
