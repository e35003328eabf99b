"""Passage between physical 3-algebras and graded Lie superalgebras.

``tel`` reads a 3-algebra off a short graded Lie superalgebra with an
anti-linear graded conjugation: [u, v, w] = [[u, sigma(v)], w] on g_-1.
``lie_of`` goes back: Lie T = T + <L_{x,y}> + <phi_x> with the conjugation
z -> -phi_z, phi_z -> z, L_{x,y} -> -L_{y,x}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional

from .exact import ComplexSpan
from .models import CheckResult, Counterexample, TowerReport
from .scalars import CArray, ConjMap
from .superalgebra import (
    GradedConj,
    GradedLieSuper,
    check_graded_conjugation,
    check_short_grading,
    check_span_property,
    check_super_jacobi,
)
from .three_algebra import NonZeroCenterError, TriSystem, center, compare_brackets

logger = logging.getLogger(__name__)


@dataclass
class Tower:
    """Lie T with its conjugation and the embedding of T as g_-1."""

    lie: GradedLieSuper
    sigma: GradedConj
    origin: TriSystem
    lie0_generators: list[tuple[int, int]] = field(default_factory=list)

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.lie.dims

    def embedding(self) -> dict[str, list[int]]:
        """Basis indices of T (as g_-1), of the L operators and of the phi_x."""
        return {
            "minus_one": self.lie.component(-1),
            "zero": self.lie.component(0),
            "plus_one": self.lie.component(1),
        }

    def to_json(self) -> dict[str, Any]:
        return {
            "origin": self.origin.label,
            "dims": list(self.dims),
            "superalgebra": self.lie.to_json(),
            "sigma": {
                "label": self.sigma.label,
                "antilinear": self.sigma.map.antilinear,
                "matrix": self.sigma.map.mat.to_json(),
            },
            "embedding": self.embedding(),
            "lie0_generators": [list(pair) for pair in self.lie0_generators],
        }


def _embedding_matrix(g: GradedLieSuper) -> CArray:
    """D x d matrix sending T coordinates to g coordinates."""
    low = g.component(-1)
    rows = [
        CArray.unit(len(low), low.index(a)) if a in low else CArray.zeros(len(low))
        for a in range(g.dim)
    ]
    return CArray.stack(rows)


def tel(g: GradedLieSuper, sigma: GradedConj, validate: bool = True) -> TriSystem:
    """Physical 3-algebra [u, v, w] = [[u, sigma(v)], w] on g_-1."""
    if not sigma.map.antilinear:
        raise ValueError(f"tel needs an anti-linear conjugation, got linear {sigma.label}")
    if validate:
        grading = check_short_grading(g)
        if not grading.passed:
            raise ValueError(f"{g.label} has no short consistent grading: {grading.detail}")
        report = check_graded_conjugation(g, sigma)
        if not report.passed:
            raise ValueError(f"{sigma.label} is not a graded conjugation of {g.label}")
    E = _embedding_matrix(g)
    P = E.T

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        inner = g.bracket(E @ a, sigma.map.apply(E @ b))
        return P @ g.bracket(inner, E @ c)

    d = len(g.component(-1))
    return TriSystem(d, "antilinear", bracket, f"tel({g.label},{sigma.label})", g.structure.mode)


def _pack(
    d: int,
    d0: int,
    e: Optional[CArray] = None,
    b: Optional[CArray] = None,
    f: Optional[CArray] = None,
) -> CArray:
    parts = [
        (e if e is not None else CArray.zeros(d)).reshape(1, -1),
        (b if b is not None else CArray.zeros(d0)).reshape(1, -1),
        (f if f is not None else CArray.zeros(d)).reshape(1, -1),
    ]
    return CArray.block([parts]).reshape(-1)


def lie_of(T: TriSystem) -> Tower:
    """Lie T for an exact physical 3-algebra T with zero center.

    Basis order: e_k (T, degree -1), the chosen L_{e_i,e_j} (degree 0),
    f_k = phi_{e_k} (degree 1), with phi_x = sum conj(x_k) f_k.
    """
    if T.mode != "exact":
        raise ValueError(f"lie_of needs an exact 3-algebra, got {T.mode} for {T.label}")
    basis = center(T)
    if basis:
        raise NonZeroCenterError(
            f"{T.label} has a center of real dimension {len(basis)}", basis
        )
    if T.slot2 != "antilinear":
        raise ValueError(f"lie_of needs a physical 3-algebra, {T.label} is {T.slot2} in slot 2")
    d = T.dim
    tensor = T.structure

    def op(i: int, j: int) -> CArray:
        return tensor[i, j].T

    span = ComplexSpan(d * d)
    generators: list[tuple[int, int]] = []
    for i, j in product(range(d), repeat=2):
        if span.add(op(i, j)):
            generators.append((i, j))
    d0 = span.rank
    ops = [op(i, j) for i, j in generators]
    logger.info(f"{T.label}: Lie_0 has dimension {d0} from {d * d} operators")

    def l_coords(M: CArray, what: str) -> CArray:
        coords = span.coordinates(M)
        if coords is None:
            raise ValueError(f"{what} leaves the span of the L operators of {T.label}")
        return coords

    flipped = [l_coords(-op(j, i), f"L_(e{j},e{i})") for i, j in generators]

    D = 2 * d + d0
    zero = CArray.zeros(D)
    table: dict[tuple[int, int], CArray] = {}
    for a, b in product(range(d), repeat=2):
        value = _pack(d, d0, b=-l_coords(op(a, b), f"L_(e{a},e{b})"))
        table[(d + d0 + b, a)] = value
        table[(a, d + d0 + b)] = value
    for r, M in enumerate(ops):
        for a in range(d):
            moved = _pack(d, d0, e=M[:, a])
            table[(d + r, a)] = moved
            table[(a, d + r)] = -moved
            image = _pack(d, d0, f=-tensor[generators[r][1], generators[r][0], a].conj())
            table[(d + r, d + d0 + a)] = image
            table[(d + d0 + a, d + r)] = -image
        for s, N in enumerate(ops):
            comm = l_coords(M @ N - N @ M, "[L, L]")
            table[(d + r, d + s)] = _pack(d, d0, b=comm)
    rows = [CArray.stack([table.get((x, y), zero) for y in range(D)]) for x in range(D)]
    structure = CArray.stack(rows)
    parity = [1] * d + [0] * d0 + [1] * d
    degree = [-1] * d + [0] * d0 + [1] * d
    lie = GradedLieSuper(f"Lie {T.label}", parity, degree, structure)

    columns = [_pack(d, d0, f=-CArray.unit(d, k)) for k in range(d)]
    columns += [_pack(d, d0, b=coords) for coords in flipped]
    columns += [_pack(d, d0, e=CArray.unit(d, k)) for k in range(d)]
    sigma = GradedConj(ConjMap(CArray.stack(columns, axis=1), True), "tower", "sigma")
    return Tower(lie, sigma, T, generators)


def roundtrip_check(T: TriSystem) -> CheckResult:
    """tel(Lie T) against T on all basis triples."""
    tower = lie_of(T)
    result = compare_brackets(T, tel(tower.lie, tower.sigma, validate=False))
    return result.model_copy(update={"name": "roundtrip"})


def check_odd_commute(tower: Tower) -> CheckResult:
    """[f_a, [f_b, e_c]] + [f_b, [f_a, e_c]] = 0, i.e. [phi_x, phi_y] acts as zero."""
    g = tower.lie
    low, high = g.component(-1), g.component(1)
    c = g.structure
    for a, b in product(high, repeat=2):
        for e in low:
            first = c[b, e].tensordot(c[a], axes=([0], [0]))
            second = c[a, e].tensordot(c[b], axes=([0], [0]))
            total = first + second
            if not total.is_zero():
                return CheckResult(
                    name="odd_commute",
                    status="fail",
                    detail=f"basis ({a}, {b}, {e})",
                    counterexample=Counterexample(
                        check="odd_commute",
                        inputs=[g.basis(v).reshape(1, -1).to_json() for v in (a, b, e)],
                        lhs=first.reshape(1, -1).to_json(),
                        rhs=(-second).reshape(1, -1).to_json(),
                    ),
                )
    return CheckResult(
        name="odd_commute", status="pass", evaluations=len(high) ** 2 * len(low)
    )


def check_tower_axioms(tower: Tower, with_roundtrip: bool = True) -> TowerReport:
    g = tower.lie
    jacobi = check_super_jacobi(g)
    grading = check_short_grading(g)
    span = check_span_property(g)
    conj = check_graded_conjugation(g, tower.sigma)
    odd = check_odd_commute(tower)
    roundtrip = None
    if with_roundtrip:
        roundtrip = compare_brackets(tower.origin, tel(g, tower.sigma, validate=False))
    counterexample = next(
        (
            r.counterexample
            for r in (jacobi, odd, roundtrip)
            if r is not None and r.counterexample is not None
        ),
        conj.counterexample,
    )
    report = TowerReport(
        family=tower.origin.label,
        dims=tower.dims,
        super_jacobi=jacobi.status,
        grading=grading.status,
        span_property=span.status,
        conjugation="pass" if conj.passed else "fail",
        odd_commute=odd.status,
        roundtrip=roundtrip.status if roundtrip is not None else None,
        counterexample=counterexample,
    )
    logger.info(f"tower of {tower.origin.label}: dims {tower.dims}, passed={report.passed}")
    return report
