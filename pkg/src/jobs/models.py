"""
Pydantic models for job specifications and reports
"""
from typing import Any, Dict, List, Literal, Optional, Union, get_args

from pydantic import BaseModel, ConfigDict, Field

Task = Literal[
    "pseudo-cok",
    "n-hereditary",
    "semi-hereditary",
    "ext",
    "tor",
    "character",
    "duality-check",
    "membership",
    "closure",
    "pd-search",
    "consistency-report",
    "split-cokernel",
    "projective",
    "presentation",
    "hom",
    "tensor",
    "yoneda",
    "unital-decomposition",
    "hereditary-report",
]

TASK_NAMES = get_args(Task)

# Entries: integers, integer strings, coordinate arrays or algebra expressions
Entry = Union[int, str, List[Union[int, str]]]
MatrixInput = Union[List[List[Entry]], Dict[str, Any]]


class RingBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["integers", "integers_mod", "prime_field", "algebra"]
    n: Optional[int] = None
    p: Optional[int] = None
    basis: Optional[List[str]] = None
    table: Optional[Dict[str, Union[str, Dict[str, int]]]] = None
    structure_constants: Optional[List[List[List[int]]]] = None
    idempotents: Optional[List[str]] = None
    label: str = ""


class ModuleSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    side: Literal["left", "right"] = "left"
    generators: int = Field(ge=0)
    relations: MatrixInput = Field(default_factory=list)


class BoundSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rows: int = Field(default=2, ge=1)
    cols: int = Field(default=2, ge=1)
    entry_bound: Optional[int] = Field(default=None, ge=1)
    mode: Literal["auto", "exhaustive", "sampled"] = "auto"
    samples: Optional[int] = Field(default=None, ge=1)


class JobSpec(BaseModel):
    """One task over one ring; a report plus its job reproduces the same output"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    ring: Union[str, RingBlock]
    task: Task
    matrix: Optional[MatrixInput] = None
    module: Optional[ModuleSpec] = None
    first: Optional[ModuleSpec] = None
    second: Optional[ModuleSpec] = None
    testset: Optional[List[ModuleSpec]] = None
    elements: Optional[MatrixInput] = None
    idempotent: Optional[Union[int, str]] = None
    n: int = Field(default=1, ge=1)
    which: Optional[Literal["i", "ii", "iii", "flat", "injective", "exactness"]] = None
    class_: Optional[Literal["I_n", "F_n"]] = Field(default=None, alias="class")
    property: Optional[
        Literal["quotients", "extensions", "finite-coproducts", "subobjects", "finite-products"]
    ] = None
    trials: Optional[int] = Field(default=None, ge=1)
    bound: BoundSpec = Field(default_factory=BoundSpec)
    seed: Optional[int] = None
    jobs: Optional[int] = Field(default=None, ge=1)
    output: Optional[str] = None


class CheckResult(BaseModel):
    check: str
    theorem: str
    paper_ref: str
    verdict: str
    data: Dict[str, Any] = Field(default_factory=dict)


class RunReport(BaseModel):
    job: Dict[str, Any]
    exit_code: int
    results: List[CheckResult] = Field(default_factory=list)


class Report(BaseModel):
    tool: str = "hereditas"
    version: str
    exit_code: int
    runs: List[RunReport] = Field(default_factory=list)
