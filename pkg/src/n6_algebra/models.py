"""Report, configuration and document models."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

Status = Literal["pass", "fail"]


class Counterexample(BaseModel):
    """A concrete failing input with both evaluated sides of the identity."""

    check: str = Field(description="Which axiom failed (antisym, fi, slot2, ...)")
    inputs: list[dict[str, Any]] = Field(
        description="Input coordinate vectors or polynomials, as JSON"
    )
    lhs: dict[str, Any] = Field(description="Evaluated left-hand side")
    rhs: dict[str, Any] = Field(description="Evaluated right-hand side")
    note: Optional[str] = Field(default=None, description="Basis indices / scalings")


class CheckResult(BaseModel):
    """Outcome of one axiom check."""

    name: str = Field(description="Check name")
    status: Status = Field(description="pass or fail")
    evaluations: int = Field(default=0, description="Number of evaluated instances")
    mode: str = Field(default="exhaustive", description="exhaustive or sampled")
    seed: Optional[int] = Field(default=None, description="Sampling seed, if sampled")
    detail: Optional[str] = Field(default=None, description="Extra verdict detail")
    counterexample: Optional[Counterexample] = Field(default=None)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class RunConfig(BaseModel):
    """Resolved configuration recorded in every report."""

    command: str = Field(description="CLI command that produced the report")
    family: Optional[dict[str, Any]] = Field(default=None, description="Family parameters")
    mode: Literal["exhaustive", "sampled"] = Field(default="exhaustive")
    seed: int = Field(description="Random seed")
    tolerance: float = Field(description="Float residual tolerance")
    samples: int = Field(default=200, description="Sample count for sampled checks")
    degree: int = Field(default=4, description="Sample polynomial degree cap")
    output: Optional[str] = Field(default=None, description="Output path")


class AxiomReport(BaseModel):
    """Axiom suite verdict for one 3-algebra."""

    family: str = Field(description="Family label")
    dim: Optional[int] = Field(default=None, description="Dimension, if finite")
    antisym: Status = Field(description="Anti-commutativity in slots 1 and 3")
    fi: Status = Field(description="Fundamental identity")
    slot2: Literal["linear", "antilinear", "fail"] = Field(
        description="Observed behaviour of the second slot"
    )
    fi_mode: str = Field(default="exhaustive", description="exhaustive or sampled")
    center_dim_real: Optional[int] = Field(
        default=None, description="Real dimension of the center"
    )
    simple: Optional[bool] = Field(default=None, description="Simplicity verdict")
    seed: Optional[int] = Field(default=None, description="Seed used for sampling")
    counterexample: Optional[Counterexample] = Field(default=None)
    config: Optional[RunConfig] = Field(default=None)

    def axioms_passed(self) -> bool:
        return self.antisym == "pass" and self.fi == "pass" and self.slot2 != "fail"


class JordanReport(BaseModel):
    """Jordan 3-superalgebra axiom verdict."""

    parity: list[int] = Field(description="Parity of each basis vector")
    symmetry: Status = Field(description="Graded symmetry axiom")
    identity: Status = Field(description="Graded fundamental identity")
    bridge: Optional[Status] = Field(
        default=None,
        description="For purely odd systems: the N=6 algebraic suite after parity reversal",
    )
    counterexample: Optional[Counterexample] = Field(default=None)

    @property
    def passed(self) -> bool:
        return (
            self.symmetry == "pass"
            and self.identity == "pass"
            and self.bridge in (None, "pass")
        )


class ConjugationReport(BaseModel):
    """Verdict of a graded conjugation check."""

    label: str = Field(description="Conjugation label")
    antilinear: bool = Field(description="Whether the map is anti-linear")
    automorphism: Status = Field(description="Bracket preserved on basis pairs")
    degree_reversal: Status = Field(description="Maps g_j into g_-j")
    square: Status = Field(description="Square equals (-1)^k on g_k")
    counterexample: Optional[Counterexample] = Field(default=None)

    @property
    def passed(self) -> bool:
        return (
            self.automorphism == "pass"
            and self.degree_reversal == "pass"
            and self.square == "pass"
        )


class TowerReport(BaseModel):
    """Verdicts for a Lie superalgebra tower of a 3-algebra."""

    family: str = Field(description="Source 3-algebra label")
    dims: tuple[int, int, int] = Field(description="Dimensions of g_-1, g_0, g_1")
    super_jacobi: Status = Field(description="Super-Jacobi identity")
    grading: Status = Field(description="Short consistent grading")
    span_property: Status = Field(description="[g_-1, g_1] = g_0")
    conjugation: Status = Field(description="sigma is a graded conjugation")
    odd_commute: Status = Field(description="[phi_x, phi_y] = 0 on Lie_1")
    roundtrip: Optional[Status] = Field(default=None, description="tel(Lie T) = T")
    counterexample: Optional[Counterexample] = Field(default=None)

    @property
    def passed(self) -> bool:
        return all(
            s == "pass"
            for s in (
                self.super_jacobi,
                self.grading,
                self.span_property,
                self.conjugation,
                self.odd_commute,
                self.roundtrip or "pass",
            )
        )


class WitnessReport(BaseModel):
    """An explicit isomorphism with its verification residual."""

    source: str = Field(description="Source 3-algebra label")
    target: str = Field(description="Target 3-algebra label")
    map: dict[str, Any] = Field(description="Coordinate matrix of the map (matrix JSON)")
    residual: float = Field(description="Max deviation over basis triples")
    branch_choices: dict[str, Any] = Field(
        default_factory=dict, description="Square-root branches and splits used"
    )
    passed: bool = Field(description="Residual within tolerance")


class FactorReport(BaseModel):
    """A matrix factorization with its residuals."""

    kind: str = Field(description="hermitian, symplectic-hermitian, symplectic-antihermitian")
    factor: dict[str, Any] = Field(description="The factor (matrix JSON)")
    signature: Optional[int] = Field(default=None, description="Recovered p")
    residual: float = Field(description="Defining-equation residual")
    symplectic_residual: Optional[float] = Field(default=None)
    passed: bool = Field(description="Residuals within tolerance")


class CorpusRow(BaseModel):
    """One instance of the checklist corpus."""

    family: str
    params: str
    dim: Optional[int] = None
    antisym: str
    fi: str
    slot2: str
    center_dim_real: Optional[int] = None
    simple: Optional[bool] = None
    roundtrip: Optional[str] = None
    passed: bool
    error: Optional[str] = None
