# ginv/models.py
# ===== Pydantic Models =====
# Report shapes written by the CLI. Rationals travel as "p/q" strings.
from enum import Enum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from ginv import SCHEMA_VERSION


class AxiomVerdict(BaseModel):
    schema_version: str = SCHEMA_VERSION
    axa_equals_a: bool
    xax_equals_x: bool
    ax_equals_xa: bool

    @computed_field
    @property
    def all_hold(self) -> bool:
        return self.axa_equals_a and self.xax_equals_x and self.ax_equals_xa


class StructureReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    has_loops: bool
    simple_symmetric: bool
    strongly_connected: bool
    pendant_set: List[int]
    nonpendant_set: List[int]
    k: int
    in_class_d: bool
    is_corona: bool
    is_star: bool
    center: Optional[int] = None
    pendant_neighbors: Dict[int, List[int]]


class InputClass(str, Enum):
    STAR = "star"
    CORONA = "corona"
    OTHER_IN_D = "other-in-D"
    NOT_IN_D = "not-in-D"


class ClosureVerdict(BaseModel):
    schema_version: str = SCHEMA_VERSION
    input_class: InputClass
    predicted_closure: bool
    actual_closure: bool
    actual_output_class: InputClass
    output_simple_symmetric: bool
    output_strongly_connected: bool
    witness_vertex: Optional[int] = None
    witness_confirmed: Optional[bool] = None

    @computed_field
    @property
    def consistent(self) -> bool:
        return self.predicted_closure == self.actual_closure


class MatchingEntry(BaseModel):
    cycles: List[List[int]]
    product: str


class MatchingsReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ok: bool = True
    n: int
    engine: str
    max_size: int
    degenerate: bool
    delta: str
    matchings: List[MatchingEntry]


class MuEntry(BaseModel):
    i: int
    j: int
    mu: str
    beta: str
    chain: List[int]
    matchings: int


class InverseReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ok: bool = True
    n: int
    method: str
    methods_run: List[str]
    methods_agree: bool
    delta: Optional[str] = None
    inverse: List[List[str]]
    mu: Optional[List[MuEntry]] = None


class FailureRecord(BaseModel):
    index: int
    check: str
    detail: str
    matrix: str


class SweepReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ok: bool = True
    family: str
    count: int
    seed: int
    passed: int
    failed: int
    check_counts: Dict[str, int]
    output_classes: Dict[str, int]
    failures: List[FailureRecord]
    wall_time_seconds: Optional[float] = None


Subcommand = Literal["analyze", "ginv", "matchings", "classify", "gen", "verify", "sweep"]
Method = Literal["graph", "block", "oracle", "all"]
Family = Literal["star", "corona", "classD", "singular"]


class RunConfig(BaseModel):
    subcommand: Subcommand
    input_path: Optional[str] = None
    inverse_path: Optional[str] = None
    output_path: Optional[str] = None
    method: Method = "all"
    format: Literal["text", "json"] = "text"
    engine: Literal["auto", "brute", "structure"] = "auto"
    show_mu: bool = False
    debug_chains: bool = False
    seed: Optional[int] = Field(default=None, ge=0, lt=2**64)
    family: Family = "classD"
    count: int = Field(default=100, ge=1)
    size: Optional[int] = Field(default=None, ge=1)
    weight: int = Field(default=5, ge=1)
    density: float = Field(default=0.5, ge=0.0, le=1.0)
    max_pendants: int = Field(default=3, ge=1)
    max_n: int = Field(default=14, ge=2)
    brute_force_limit: Optional[int] = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
    timing: bool = False

    @model_validator(mode="after")
    def _paths_present(self) -> "RunConfig":
        if self.input_path is None and self.subcommand in ("analyze", "ginv", "matchings", "classify", "verify"):
            raise ValueError(f"{self.subcommand} needs an input file")
        if self.subcommand == "verify" and self.inverse_path is None:
            raise ValueError("verify needs a second matrix file")
        return self
