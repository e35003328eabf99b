"""Typer-based CLI for n6-algebra with rich output and JSON reports."""

import json
import logging
from pathlib import Path
from typing import Any, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from .corpus import corpus_records, failed_instances, run_corpus
from .env_config import get_config
from .function_families import (
    FunctionFamilyFactory,
    FunctionFamilySpec,
    check_function_family,
)
from .matrix_families import FamilyFactory, FamilySpec
from .models import AxiomReport, RunConfig
from .scalars import CArray, parse_scalar
from .superalgebra import (
    GradedConj,
    GradedLieSuper,
    build_conj_osp,
    build_conj_psl,
    build_osp_2_2n,
    build_psl,
    build_sigma_tilde_1,
    build_tau,
    check_graded_conjugation,
    structure_from_superalgebra,
)
from .three_algebra import (
    NonZeroCenterError,
    TriSystem,
    center,
    is_simple,
    run_axiom_suite,
)
from .tower import check_tower_axioms, lie_of, tel
from .witnesses import factorize, iso_a3_star, iso_a3n, iso_c3

# Initialize Typer app and Rich console
app = typer.Typer(
    name="n6-algebra",
    help="Exact construction and axiom certification of N=6 3-algebras",
    no_args_is_help=True,
    rich_markup_mode="rich",
)
console = Console()

# Global state for options
_global_options: dict[str, Any] = {}

EXIT_USAGE = 1
EXIT_FAILED = 2


@app.callback()
def main(
    mode: Optional[str] = typer.Option(
        None, "--mode", help="exhaustive or sampled fundamental identity sweep", envvar="N6_MODE"
    ),
    backend: Optional[str] = typer.Option(
        None, "--backend", help="exact or float arithmetic", envvar="N6_BACKEND"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Sampling seed", envvar="N6_SEED"),
    tol: Optional[float] = typer.Option(
        None, "--tol", help="Residual tolerance for float checks", envvar="N6_TOLERANCE"
    ),
    out: Optional[str] = typer.Option(
        None, "--out", "-o", help="Report path, '-' for stdout"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose output"),
):
    """n6-algebra - build N=6 3-algebras, certify their axioms and emit JSON reports."""
    _global_options.pop("console", None)
    try:
        config = get_config()
    except ValueError as e:
        _console().print(f"[red]✗[/red] {e}")
        raise typer.Exit(EXIT_USAGE)

    level = logging.DEBUG if verbose else getattr(logging, config["log_level"], logging.WARNING)
    logging.basicConfig(
        level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    mode = (mode or config["mode"]).lower()
    backend = (backend or config["backend"]).lower()
    if mode not in ("exhaustive", "sampled"):
        _console().print(f"[red]✗[/red] --mode must be exhaustive or sampled, got {mode!r}")
        raise typer.Exit(EXIT_USAGE)
    if backend not in ("exact", "float"):
        _console().print(f"[red]✗[/red] --backend must be exact or float, got {backend!r}")
        raise typer.Exit(EXIT_USAGE)

    _global_options.update(
        {
            # JSON owns stdout when the report goes there
            "console": Console(stderr=out == "-", no_color=not config["use_colors"]),
            "mode": mode,
            "backend": backend,
            "seed": config["seed"] if seed is None else seed,
            "tolerance": config["tolerance"] if tol is None else tol,
            "budget": config["budget"],
            "samples": config["samples"],
            "degree": config["degree"],
            "output_dir": config["output_dir"],
            "out": out,
            "use_colors": config["use_colors"],
            "verbose": verbose,
        }
    )


def _console() -> Console:
    return _global_options.get("console", console)


def _run_config(command: str, family: Optional[dict[str, Any]] = None) -> RunConfig:
    return RunConfig(
        command=command,
        family=family,
        mode=_global_options["mode"],
        seed=_global_options["seed"],
        tolerance=_global_options["tolerance"],
        samples=_global_options["samples"],
        degree=_global_options["degree"],
        output=_global_options["out"],
    )


def _emit(command: str, payload: dict[str, Any], config: RunConfig) -> None:
    """Write the report as sorted JSON to --out, stdout or the report directory."""
    document = dict(payload)
    document["config"] = config.model_dump()
    text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    out = _global_options.get("out")
    if out == "-":
        typer.echo(text, nl=False)
        return
    path = Path(out) if out else Path(_global_options["output_dir"]) / f"{command}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    _console().print(f"[cyan]ℹ[/cyan] Report written to: {path}")


def _load_matrix(path: Optional[Path], name: str) -> Optional[dict[str, Any]]:
    """Read a matrix JSON file; validates it by decoding."""
    if path is None:
        return None
    if not path.exists():
        raise FileNotFoundError(f"{name} file not found: {path}")
    try:
        with open(path, encoding="utf-8") as f:
            payload = json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"{name} file is not valid JSON: {path}") from e
    CArray.from_json(payload)
    return payload


def _require_matrix(path: Optional[Path], name: str) -> CArray:
    payload = _load_matrix(path, name)
    if payload is None:
        raise ValueError(f"this command needs --{name.lower()}-matrix")
    return CArray.from_json(payload)


def _parse_sign(text: str) -> int:
    value = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}.get(text.strip())
    if value is None:
        raise ValueError(f"sign must be + or -, got {text!r}")
    return value


def _family_name(family: str) -> str:
    """Registry key for a CLI spelling (hyphens allowed, case-insensitive)."""
    key = family.strip().replace("-", "_").lower()
    known = FamilyFactory.get_supported_families()
    known += FunctionFamilyFactory.get_supported_families()
    for name in known:
        if name.lower() == key:
            return name
    return key


def _finite_spec(
    family: str,
    m: Optional[int],
    n: Optional[int],
    p: Optional[int],
    q: Optional[int],
    two_n: Optional[int],
    sign: str,
    alpha: Optional[str],
    lam: Optional[str],
    h_matrix: Optional[Path],
    a_matrix: Optional[Path],
    b_matrix: Optional[Path],
) -> FamilySpec:
    name = _family_name(family)
    if name not in FamilyFactory.get_supported_families():
        raise ValueError(
            f"Unsupported finite-dimensional family: {family}. "
            f"Supported: {', '.join(FamilyFactory.get_supported_families())}"
        )
    return FamilySpec(
        name=name,
        m=m,
        n=n,
        p=p,
        q=q,
        two_n=two_n,
        sign=_parse_sign(sign),
        alpha=alpha,
        lam=lam,
        H=_load_matrix(h_matrix, "H"),
        A=_load_matrix(a_matrix, "A"),
        B=_load_matrix(b_matrix, "B"),
        backend=_global_options["backend"],
    )


def _print_axioms(report: AxiomReport) -> None:
    table = Table(title=f"Axiom Suite: {report.family}")
    table.add_column("Check", style="cyan")
    table.add_column("Result", style="magenta")
    table.add_row("dim", "-" if report.dim is None else str(report.dim))
    table.add_row("anti-commutativity", report.antisym)
    table.add_row(f"fundamental identity ({report.fi_mode})", report.fi)
    table.add_row("slot 2", report.slot2)
    if report.center_dim_real is not None:
        table.add_row("center (real dim)", str(report.center_dim_real))
    if report.simple is not None:
        table.add_row("simple", "yes" if report.simple else "no")
    _console().print(table)
    if report.counterexample is not None:
        _console().print(
            f"[red]✗[/red] Counterexample for {report.counterexample.check}: "
            f"{report.counterexample.note}"
        )


def _verdict(passed: bool, what: str) -> None:
    if passed:
        _console().print(f"[green]✓[/green] {what} passed")
        return
    _console().print(f"[red]✗[/red] {what} failed")
    raise typer.Exit(EXIT_FAILED)


def _usage_error(e: Exception) -> typer.Exit:
    _console().print(f"[red]✗[/red] {e}")
    return typer.Exit(EXIT_USAGE)


@app.command()
def check(
    family: str = typer.Option(
        ..., "--family", "-F", help="Family name, e.g. a3t-ph, c3-ph, w3beta"
    ),
    m: Optional[int] = typer.Option(None, "--m", help="m (rows, or P3 indeterminates)"),
    n: Optional[int] = typer.Option(None, "--n", help="n (columns or size)"),
    p: Optional[int] = typer.Option(None, "--p", help="Signature p"),
    q: Optional[int] = typer.Option(None, "--q", help="Signature q"),
    two_n: Optional[int] = typer.Option(None, "--two-n", help="Even size 2n of C3 families"),
    sign: str = typer.Option("+", "--sign", help="Overall sign, + or -"),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Weight alpha as a/b+c/di"),
    beta: Optional[str] = typer.Option(None, "--beta", help="beta for w3beta"),
    lam: Optional[str] = typer.Option(None, "--lam", help="lambda for a3-star or sw3"),
    phi: str = typer.Option("id", "--phi", help="Preset change of variables"),
    phi_matrix: Optional[Path] = typer.Option(None, "--phi-matrix", help="Matrix JSON for phi"),
    t_turns: str = typer.Option("0", "--t-turns", help="t / (pi i) for sw3"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix", help="Matrix JSON for H"),
    a_matrix: Optional[Path] = typer.Option(None, "--a-matrix", help="Matrix JSON for A / a"),
    b_matrix: Optional[Path] = typer.Option(None, "--b-matrix", help="Matrix JSON for B"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Samples for sampled checks"),
    degree: Optional[int] = typer.Option(None, "--degree", help="Sample polynomial degree"),
):
    """Run the axiom suite on one family instance."""
    if samples is not None:
        _global_options["samples"] = samples
    if degree is not None:
        _global_options["degree"] = degree
    _console().print(Panel("Axiom Suite", style="blue"))

    try:
        name = _family_name(family)
        if name in FunctionFamilyFactory.get_supported_families():
            fspec = FunctionFamilySpec(
                name=name,
                m=m,
                phi=phi,
                phi_matrix=_load_matrix(phi_matrix, "phi"),
                sign=_parse_sign(sign),
                beta=beta,
                alpha=alpha,
                lam=lam,
                a=_load_matrix(a_matrix, "A"),
                t_turns=t_turns,
            )
            report = check_function_family(
                FunctionFamilyFactory.create(fspec),
                _global_options["samples"],
                _global_options["degree"],
                _global_options["seed"],
            )
            spec_json = fspec.model_dump(exclude_none=True)
        else:
            spec = _finite_spec(
                family, m, n, p, q, two_n, sign, alpha, lam, h_matrix, a_matrix, b_matrix
            )
            report = run_axiom_suite(
                FamilyFactory.create(spec),
                _global_options["mode"],
                _global_options["samples"],
                _global_options["seed"],
                _global_options["budget"],
            )
            spec_json = spec.model_dump(exclude_none=True)
    except (ValueError, FileNotFoundError) as e:
        raise _usage_error(e)

    config = _run_config("check", spec_json)
    report.config = config
    _print_axioms(report)
    _emit("check", report.model_dump(), config)
    _verdict(report.axioms_passed(), "Axiom suite")


def _build_finite(
    command: str,
    family: str,
    m: Optional[int],
    n: Optional[int],
    p: Optional[int],
    q: Optional[int],
    two_n: Optional[int],
    sign: str,
    alpha: Optional[str],
    lam: Optional[str],
    h_matrix: Optional[Path],
) -> tuple[TriSystem, RunConfig]:
    try:
        spec = _finite_spec(family, m, n, p, q, two_n, sign, alpha, lam, h_matrix, None, None)
        system = FamilyFactory.create(spec)
    except (ValueError, FileNotFoundError) as e:
        raise _usage_error(e)
    return system, _run_config(command, spec.model_dump(exclude_none=True))


@app.command(name="center")
def center_cmd(
    family: str = typer.Option(..., "--family", "-F", help="Finite-dimensional family name"),
    m: Optional[int] = typer.Option(None, "--m"),
    n: Optional[int] = typer.Option(None, "--n"),
    p: Optional[int] = typer.Option(None, "--p"),
    q: Optional[int] = typer.Option(None, "--q"),
    two_n: Optional[int] = typer.Option(None, "--two-n"),
    sign: str = typer.Option("+", "--sign"),
    alpha: Optional[str] = typer.Option(None, "--alpha"),
    lam: Optional[str] = typer.Option(None, "--lam"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix"),
):
    """Compute a real basis of the center of a finite-dimensional family."""
    system, config = _build_finite(
        "center", family, m, n, p, q, two_n, sign, alpha, lam, h_matrix
    )
    _console().print(Panel(f"Center of {system.label}", style="blue"))
    try:
        basis = center(system)
    except ValueError as e:
        raise _usage_error(e)
    _console().print(f"[cyan]ℹ[/cyan] Real dimension of the center: {len(basis)}")
    _emit(
        "center",
        {
            "family": system.label,
            "center_dim_real": len(basis),
            "basis": [v.to_json() for v in basis],
        },
        config,
    )


@app.command()
def simple(
    family: str = typer.Option(..., "--family", "-F", help="Finite-dimensional family name"),
    m: Optional[int] = typer.Option(None, "--m"),
    n: Optional[int] = typer.Option(None, "--n"),
    p: Optional[int] = typer.Option(None, "--p"),
    q: Optional[int] = typer.Option(None, "--q"),
    two_n: Optional[int] = typer.Option(None, "--two-n"),
    sign: str = typer.Option("+", "--sign"),
    alpha: Optional[str] = typer.Option(None, "--alpha"),
    lam: Optional[str] = typer.Option(None, "--lam"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix"),
):
    """Decide simplicity of a finite-dimensional family."""
    system, config = _build_finite(
        "simple", family, m, n, p, q, two_n, sign, alpha, lam, h_matrix
    )
    _console().print(Panel(f"Simplicity of {system.label}", style="blue"))
    try:
        verdict = is_simple(system)
    except ValueError as e:
        raise _usage_error(e)
    _emit("simple", {"family": system.label, "simple": verdict}, config)
    _verdict(verdict, "Simplicity")


@app.command()
def tower(
    family: str = typer.Option(..., "--family", "-F", help="Finite-dimensional family name"),
    m: Optional[int] = typer.Option(None, "--m"),
    n: Optional[int] = typer.Option(None, "--n"),
    p: Optional[int] = typer.Option(None, "--p"),
    q: Optional[int] = typer.Option(None, "--q"),
    two_n: Optional[int] = typer.Option(None, "--two-n"),
    sign: str = typer.Option("+", "--sign"),
    alpha: Optional[str] = typer.Option(None, "--alpha"),
    lam: Optional[str] = typer.Option(None, "--lam"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix"),
):
    """Build Lie T with its conjugation and check the round trip tel(Lie T) = T."""
    system, config = _build_finite(
        "tower", family, m, n, p, q, two_n, sign, alpha, lam, h_matrix
    )
    _console().print(Panel(f"Tower of {system.label}", style="blue"))
    try:
        built = lie_of(system)
    except NonZeroCenterError as e:
        _console().print(f"[red]✗[/red] {e}")
        _emit(
            "tower",
            {
                "family": system.label,
                "error": str(e),
                "center_basis": [v.to_json() for v in e.basis],
            },
            config,
        )
        raise typer.Exit(EXIT_FAILED)
    except ValueError as e:
        raise _usage_error(e)

    report = check_tower_axioms(built)
    table = Table(title="Tower Verdicts")
    table.add_column("Check", style="cyan")
    table.add_column("Result", style="magenta")
    table.add_row("dims (g-1, g0, g1)", str(report.dims))
    for field_name in ("super_jacobi", "grading", "span_property", "conjugation", "odd_commute"):
        table.add_row(field_name.replace("_", " "), getattr(report, field_name))
    table.add_row("roundtrip", str(report.roundtrip))
    _console().print(table)
    _emit("tower", {"tower": built.to_json(), "report": report.model_dump()}, config)
    _verdict(report.passed, "Tower")


def _superalgebra(kind: str, m: Optional[int], n: Optional[int]) -> GradedLieSuper:
    if n is None:
        raise ValueError("--n is required")
    if kind == "psl":
        return build_psl(m if m is not None else n, n)
    if kind == "osp":
        return build_osp_2_2n(n)
    raise ValueError(f"Unsupported superalgebra: {kind}. Supported: psl, osp")


def _conjugation(
    g: GradedLieSuper,
    conj: str,
    m: Optional[int],
    n: int,
    p: Optional[int],
    q: Optional[int],
    sign: int,
    H: Optional[CArray],
) -> GradedConj:
    if conj == "sigma1":
        return build_sigma_tilde_1(g)
    if conj == "psl":
        return build_conj_psl(m if m is not None else n, n, p or 0, q or 0, g)
    if conj == "tau":
        if m is not None and m != n:
            raise ValueError(f"tau needs psl(n,n), got m={m}, n={n}")
        return build_tau(n, sign, g)
    if conj in ("hermitian", "antihermitian"):
        return build_conj_osp(n, conj, sign, p, H, g)  # type: ignore[arg-type]
    raise ValueError(
        f"Unsupported conjugation: {conj}. Supported: sigma1, psl, tau, hermitian, antihermitian"
    )


@app.command(name="tel")
def tel_cmd(
    superalgebra: str = typer.Option(..., "--superalgebra", "-S", help="psl or osp"),
    conj: str = typer.Option(
        ..., "--conj", help="sigma1, psl, tau (psl(n,n)), hermitian or antihermitian (osp)"
    ),
    m: Optional[int] = typer.Option(None, "--m", help="m of psl(m,n)"),
    n: Optional[int] = typer.Option(None, "--n", help="n of psl(m,n) or osp(2,2n)"),
    p: Optional[int] = typer.Option(None, "--p", help="Signature p"),
    q: Optional[int] = typer.Option(None, "--q", help="Signature q"),
    sign: str = typer.Option("+", "--sign", help="Sign of the conjugation"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix", help="Matrix JSON for H"),
):
    """Read the 3-algebra [u,v,w] = [[u,sigma(v)],w] off a graded superalgebra."""
    try:
        g = _superalgebra(superalgebra.lower(), m, n)
        sigma = _conjugation(
            g,
            conj.lower(),
            m,
            n or 0,
            p,
            q,
            _parse_sign(sign),
            None if h_matrix is None else _require_matrix(h_matrix, "H"),
        )
    except (ValueError, FileNotFoundError) as e:
        raise _usage_error(e)
    config = _run_config(
        "tel",
        {"superalgebra": superalgebra, "conj": conj, "m": m, "n": n, "p": p, "q": q, "sign": sign},
    )
    _console().print(Panel(f"tel of {g.label} under {sigma.label}", style="blue"))

    conj_report = check_graded_conjugation(g, sigma)
    payload = structure_from_superalgebra(g, sigma)
    payload["conjugation_report"] = conj_report.model_dump()
    if not conj_report.passed:
        _emit("tel", payload, config)
        _verdict(False, "Graded conjugation check")

    T = tel(g, sigma, validate=False)
    report = run_axiom_suite(
        T,
        _global_options["mode"],
        _global_options["samples"],
        _global_options["seed"],
        _global_options["budget"],
    )
    _print_axioms(report)
    d = T.dim
    payload["axioms"] = report.model_dump()
    payload["structure"] = {
        "shape": [d, d, d, d],
        "matrix": T.structure.reshape(d**3, d).to_json(),
    }
    _emit("tel", payload, config)
    _verdict(report.axioms_passed(), "Axiom suite")


@app.command()
def factor(
    kind: str = typer.Option(
        ..., "--kind", "-k", help="hermitian, symplectic-hermitian or symplectic-antihermitian"
    ),
    matrix: Path = typer.Option(..., "--matrix", help="Matrix JSON to factor"),
):
    """Factor a hermitian or symplectic matrix into its normal form."""
    _console().print(Panel(f"Factorization: {kind}", style="blue"))
    try:
        M = _require_matrix(matrix, "matrix")
        report = factorize(kind, M, _global_options["tolerance"])  # type: ignore[arg-type]
    except (ValueError, FileNotFoundError) as e:
        raise _usage_error(e)

    table = Table(title="Residuals")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="magenta")
    table.add_row("signature", str(report.signature))
    table.add_row("residual", f"{report.residual:.3g}")
    if report.symplectic_residual is not None:
        table.add_row("symplectic residual", f"{report.symplectic_residual:.3g}")
    _console().print(table)
    _emit("factor", report.model_dump(), _run_config("factor", {"kind": kind}))
    _verdict(report.passed, "Factorization")


@app.command()
def witness(
    kind: str = typer.Option(..., "--kind", "-k", help="a3-star, a3n or c3"),
    a_matrix: Optional[Path] = typer.Option(None, "--a-matrix", help="Matrix JSON for A"),
    b_matrix: Optional[Path] = typer.Option(None, "--b-matrix", help="Matrix JSON for B"),
    h_matrix: Optional[Path] = typer.Option(None, "--h-matrix", help="Matrix JSON for H"),
    lam: str = typer.Option("1", "--lam", help="lambda for a3-star"),
    alpha: str = typer.Option("1", "--alpha", help="alpha for c3"),
):
    """Construct an explicit isomorphism onto a normal form and verify it."""
    _console().print(Panel(f"Isomorphism Witness: {kind}", style="blue"))
    name = _family_name(kind)
    tol = max(_global_options["tolerance"], 1e-8)
    try:
        if name == "a3_star":
            A, B = _require_matrix(a_matrix, "A"), _require_matrix(b_matrix, "B")
            report = iso_a3_star(A, B, parse_scalar(lam, A.mode), tol)
        elif name == "a3n":
            report = iso_a3n(_require_matrix(a_matrix, "A"), tol)
        elif name == "c3":
            H = _require_matrix(h_matrix, "H")
            report = iso_c3(H, parse_scalar(alpha, H.mode), tol)
        else:
            raise ValueError(f"Unsupported witness: {kind}. Supported: a3-star, a3n, c3")
    except (ValueError, FileNotFoundError) as e:
        raise _usage_error(e)

    _console().print(f"[cyan]ℹ[/cyan] {report.source} -> {report.target}")
    _console().print(f"[cyan]ℹ[/cyan] Residual: {report.residual:.3g}")
    _emit("witness", report.model_dump(), _run_config("witness", {"kind": name}))
    _verdict(report.passed, "Witness")


@app.command()
def corpus(
    max_size: int = typer.Option(3, "--max-size", help="Largest m, n of matrix families"),
    max_two_n: int = typer.Option(6, "--max-two-n", help="Largest 2n of C3 families"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Function-family samples"),
    degree: int = typer.Option(3, "--degree", help="Function-family sample degree"),
    workers: int = typer.Option(1, "--workers", help="Processes for finite instances"),
    functions: bool = typer.Option(
        True, "--functions/--no-functions", help="Include infinite-dimensional families"
    ),
    csv: Optional[Path] = typer.Option(None, "--csv", help="Also write the table as CSV"),
):
    """Run the full checklist corpus and write one summary table."""
    _console().print(Panel("Checklist Corpus", style="blue"))
    samples = samples if samples is not None else _global_options["samples"]
    try:
        frame = run_corpus(
            max_size,
            max_two_n,
            _global_options["mode"],
            samples,
            degree,
            _global_options["seed"],
            _global_options["budget"],
            functions,
            workers,
        )
    except ValueError as e:
        raise _usage_error(e)

    counts = frame.groupby("family")["passed"].agg(["count", "sum"])
    table = Table(title="Corpus Summary")
    table.add_column("Family", style="cyan")
    table.add_column("Instances", style="magenta")
    table.add_column("Passed", style="green")
    for family_name, row in counts.iterrows():
        table.add_row(str(family_name), str(int(row["count"])), str(int(row["sum"])))
    _console().print(table)

    failed = failed_instances(frame)
    for name in failed:
        _console().print(f"[red]✗[/red] {name}")
    config = _run_config(
        "corpus", {"max_size": max_size, "max_two_n": max_two_n, "degree": degree}
    )
    _emit(
        "corpus",
        {"instances": corpus_records(frame), "total": len(frame), "failed": failed},
        config,
    )
    if csv is not None:
        frame.to_csv(csv, index=False)
    _verdict(not failed, f"Corpus ({len(frame)} instances)")


if __name__ == "__main__":
    app()
