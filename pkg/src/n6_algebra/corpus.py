"""Checklist corpus: every family instance at desk sizes, one summary row each."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Any, Literal, Optional, Union

import pandas as pd

from .function_families import (
    FunctionFamilyFactory,
    FunctionFamilySpec,
    check_function_family,
)
from .matrix_families import FamilyFactory, FamilySpec
from .models import AxiomReport, CorpusRow
from .scalars import CArray
from .three_algebra import BudgetExceededError, run_axiom_suite
from .tower import roundtrip_check

logger = logging.getLogger(__name__)

ROTATION = [[0, 1], [-1, 0]]

Spec = Union[FamilySpec, FunctionFamilySpec]


def finite_specs(max_size: int = 3, max_two_n: int = 6) -> list[FamilySpec]:
    """Finite-dimensional instances: A^3(m,n;t)_ph, A^3(m,n;st)_ph, A^3(n)+-, C^3."""
    specs: list[FamilySpec] = []
    for m in range(1, max_size + 1):
        for n in range(1, max_size + 1):
            if m * n < 2:
                continue
            specs += [
                FamilySpec(name="a3t_ph", m=m, n=n, p=p, q=q)
                for p in range(n + 1)
                for q in range(m + 1)
            ]
    specs += [
        FamilySpec(name="a3st_ph", m=m, n=n)
        for m in range(2, max_size + 1, 2)
        for n in range(2, max_size + 1, 2)
    ]
    for n in range(2, max_size + 1):
        specs += [FamilySpec(name="a3n_plus", n=n), FamilySpec(name="a3n_minus", n=n)]
    for two_n in range(2, max_two_n + 1, 2):
        specs += [
            FamilySpec(name="c3_ph", two_n=two_n, p=p, sign=sign)
            for p in range(two_n // 2 + 1)
            for sign in (1, -1)
        ]
        specs += [
            FamilySpec(name="c3_H_alpha", two_n=two_n, alpha=alpha) for alpha in ("i", "-i")
        ]
    return specs


def function_specs() -> list[FunctionFamilySpec]:
    """Polynomial instances of the infinite-dimensional families."""
    rotation = CArray.exact(ROTATION).to_json()
    specs = [FunctionFamilySpec(name="p3", m=m) for m in (2, 3)]
    for t_turns in ("0", "1"):
        specs.append(FunctionFamilySpec(name="sw3", lam="1", t_turns=t_turns))
        specs.append(FunctionFamilySpec(name="sw3", a=rotation, lam="i", t_turns=t_turns))
    specs += [
        FunctionFamilySpec(name="w3", sign=1),
        FunctionFamilySpec(name="w3", sign=-1),
        FunctionFamilySpec(name="w3beta"),
        FunctionFamilySpec(name="s3", sign=1),
    ]
    return specs


def _params(spec: Spec) -> str:
    payload = spec.model_dump(exclude_none=True, exclude={"name", "backend"})
    if isinstance(spec, FunctionFamilySpec) and spec.a is not None:
        payload["a"] = "rotation"
    return json.dumps(payload, sort_keys=True)


def _finite_report(
    spec: FamilySpec, mode: Literal["exhaustive", "sampled"], samples: int, seed: int, budget: int
) -> AxiomReport:
    system = FamilyFactory.create(spec)
    try:
        return run_axiom_suite(system, mode, samples, seed, budget)
    except BudgetExceededError:
        logger.warning(f"{system.label}: exhaustive sweep over budget, sampling instead")
        return run_axiom_suite(system, "sampled", samples, seed, budget)


def run_finite(
    spec: FamilySpec,
    mode: Literal["exhaustive", "sampled"] = "exhaustive",
    samples: int = 200,
    seed: int = 0,
    budget: int = 1_000_000,
) -> CorpusRow:
    report = _finite_report(spec, mode, samples, seed, budget)
    roundtrip: Optional[str] = None
    if report.center_dim_real == 0:
        roundtrip = roundtrip_check(FamilyFactory.create(spec)).status
    return CorpusRow(
        family=spec.name,
        params=_params(spec),
        dim=report.dim,
        antisym=report.antisym,
        fi=report.fi,
        slot2=report.slot2,
        center_dim_real=report.center_dim_real,
        simple=report.simple,
        roundtrip=roundtrip,
        passed=report.axioms_passed() and report.simple is True and roundtrip == "pass",
    )


def _safe_finite(
    spec: FamilySpec,
    mode: Literal["exhaustive", "sampled"],
    samples: int,
    seed: int,
    budget: int,
) -> CorpusRow:
    try:
        return run_finite(spec, mode, samples, seed, budget)
    except Exception as e:
        return _error_row(spec, e)


def _error_row(spec: Spec, error: Exception) -> CorpusRow:
    logger.exception(f"{spec.name} {_params(spec)} raised")
    return CorpusRow(
        family=spec.name,
        params=_params(spec),
        antisym="fail",
        fi="fail",
        slot2="fail",
        passed=False,
        error=f"{type(error).__name__}: {error}",
    )


def run_function(
    spec: FunctionFamilySpec, samples: int = 200, degree: int = 4, seed: int = 0
) -> CorpusRow:
    report = check_function_family(FunctionFamilyFactory.create(spec), samples, degree, seed)
    return CorpusRow(
        family=spec.name,
        params=_params(spec),
        antisym=report.antisym,
        fi=report.fi,
        slot2=report.slot2,
        passed=report.axioms_passed(),
    )


def _safe_function(
    spec: FunctionFamilySpec, samples: int, degree: int, seed: int
) -> CorpusRow:
    try:
        return run_function(spec, samples, degree, seed)
    except Exception as e:
        return _error_row(spec, e)


def run_corpus(
    max_size: int = 3,
    max_two_n: int = 6,
    mode: Literal["exhaustive", "sampled"] = "exhaustive",
    samples: int = 200,
    degree: int = 3,
    seed: int = 0,
    budget: int = 1_000_000,
    include_functions: bool = True,
    workers: int = 1,
) -> pd.DataFrame:
    """Run every instance and return the summary table sorted by family and params.

    With ``workers > 1`` the finite instances run in a process pool; rows are
    collected in enumeration order either way.
    """
    specs = finite_specs(max_size, max_two_n)
    task = partial(_safe_finite, mode=mode, samples=samples, seed=seed, budget=budget)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            finite_rows = list(pool.map(task, specs))
    else:
        finite_rows = [task(spec) for spec in specs]
    rows: list[dict[str, Any]] = [row.model_dump() for row in finite_rows]
    if include_functions:
        for fspec in function_specs():
            rows.append(_safe_function(fspec, samples, degree, seed).model_dump())
    frame = pd.DataFrame(rows, columns=list(CorpusRow.model_fields)).astype(
        {"dim": "Int64", "center_dim_real": "Int64"}
    )
    frame = frame.sort_values(["family", "params"], kind="stable").reset_index(drop=True)
    failed = frame.loc[~frame["passed"]]
    logger.info(f"corpus: {len(frame)} instances, {len(failed)} failed")
    return frame


def failed_instances(frame: pd.DataFrame) -> list[str]:
    failed = frame.loc[~frame["passed"].astype(bool)]
    return [f"{row.family} {row.params}" for row in failed.itertuples()]


def corpus_records(frame: pd.DataFrame) -> list[dict[str, Any]]:
    """JSON-ready rows with missing values as null."""
    return [
        {str(k): _plain(v) for k, v in row.items()}
        for row in frame.to_dict(orient="records")
    ]


def _plain(value: Any) -> Any:
    if pd.isna(value):
        return None
    # numpy scalars
    return value.item() if hasattr(value, "item") else value


def write_corpus(
    frame: pd.DataFrame, path: Path, csv_path: Optional[Path] = None
) -> None:
    """Write the summary as sorted JSON records, and optionally as CSV."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(corpus_records(frame), sort_keys=True, indent=2))
        f.write("\n")
    if csv_path is not None:
        frame.to_csv(csv_path, index=False)
