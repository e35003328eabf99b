"""Infinite-dimensional 3-algebra families on polynomial algebras.

Each family is modelled on its polynomial subspace; every bracket is built from
differentiation, multiplication and linear substitution, so it maps polynomials
to polynomials and the axioms can be verified exactly on samples.
"""

from __future__ import annotations

import cmath
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field

from .exact import ExactSpan
from .models import AxiomReport, CheckResult, Counterexample
from .polynomials import LinearChange, PairPoly, Poly, monomials
from .scalars import I_UNIT, Backend, CArray, GaussRat, conj, parse_scalar, to_complex
from .three_algebra import Slot2

logger = logging.getLogger(__name__)

Element = Union[Poly, PairPoly]


def p3_roster(m: int) -> list[str]:
    """p1..pk, q1..qk, then t when m = 2k + 1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    k = m // 2
    roster = [f"p{i}" for i in range(1, k + 1)] + [f"q{i}" for i in range(1, k + 1)]
    return roster + (["t"] if m % 2 else [])


def poisson(f: Poly, g: Poly, m: int) -> Poly:
    """{f, g} = (2-E)(f) g_t - f_t (2-E)(g) + sum_i (f_{p_i} g_{q_i} - f_{q_i} g_{p_i}).

    E = sum_i (p_i d/dp_i + q_i d/dq_i); the t terms are absent for even m.
    """
    roster = tuple(p3_roster(m))
    if f.roster != roster or g.roster != roster:
        raise ValueError(f"poisson bracket for m={m} needs the roster {list(roster)}")
    k = m // 2
    result = Poly.zero(roster, f.mode)
    for i in range(k):
        result = result + f.diff(i) * g.diff(k + i) - f.diff(k + i) * g.diff(i)
    if m % 2:
        def two_minus_e(e: tuple[int, ...]) -> int:
            return 2 - sum(e[: 2 * k])

        result = (
            result
            + f.weighted(two_minus_e) * g.diff("t")
            - f.diff("t") * g.weighted(two_minus_e)
        )
    return result


def det3(rows: list[list[Poly]]) -> Poly:
    """Determinant of a 3x3 matrix of polynomials by cofactor expansion."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _omega(m: int, mode: Backend) -> CArray:
    """Coefficient matrix of sum_i (p_i dq_i - q_i dp_i), zero on t."""
    k = m // 2
    rows = [[0] * m for _ in range(m)]
    for i in range(k):
        rows[i][k + i] = 1
        rows[k + i][i] = -1
    return CArray.from_scalars(rows, mode)


def _is_identity(M: CArray, tol: float) -> bool:
    return M.equals(CArray.identity(M.shape[0], M.mode), tol)


def _is_unit_real(value: complex, tol: float) -> bool:
    return abs(value.imag) <= tol and abs(abs(value.real) - 1) <= tol


def validate_change(
    phi: LinearChange, family: str, m: Optional[int] = None, tol: float = 0.0
) -> CheckResult:
    """Family-specific conditions on a linear change of variables.

    p3: phi^2 = 1 and phi multiplies the contact/symplectic 1-form by -1.
    w3, w3beta: conj(phi) phi = 1.   s3: conj(phi) phi = 1 and det phi = +-1.
    w3_alg, s3_alg: det phi = 1 and phi^2 = 1.
    """
    M = phi.mat
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return CheckResult(name="validate_change", status="fail", detail="not square")
    size = M.shape[0]
    problems = []
    if family in ("p3", "p3_alg"):
        if m is None or size != m:
            problems.append(f"P3 needs an {m}x{m} change of variables, got {size}x{size}")
        else:
            omega = _omega(m, M.mode)
            if not (M.T @ omega @ M).equals(-omega, tol):
                problems.append("phi does not multiply the 1-form by -1")
            if m % 2:
                t_row = M[m - 1]
                if not t_row.equals(-CArray.unit(m, m - 1, M.mode), tol):
                    problems.append("phi must send t to -t")
            if not _is_identity(phi.squared(), tol):
                problems.append("phi^2 != 1")
    elif family in ("w3", "w3beta", "s3"):
        expected = 3 if family == "s3" else 2
        if size != expected:
            problems.append(f"{family} needs a {expected}x{expected} change of variables")
        elif not _is_identity(phi.conj_squared(), tol):
            problems.append("conj(phi) phi != 1")
        elif family == "s3" and not _is_unit_real(to_complex(phi.det()), tol):
            problems.append("det phi must be +1 or -1")
    elif family in ("w3_alg", "s3_alg"):
        expected = 3 if family == "s3_alg" else 2
        if size != expected:
            problems.append(f"{family} needs a {expected}x{expected} change of variables")
        else:
            if abs(to_complex(phi.det()) - 1) > tol:
                problems.append("det phi != 1")
            if not _is_identity(phi.squared(), tol):
                problems.append("phi^2 != 1")
    else:
        raise ValueError(f"Unsupported family for validate_change: {family}")
    return CheckResult(
        name="validate_change",
        status="fail" if problems else "pass",
        detail="; ".join(problems) or None,
    )


def _require_valid(phi: LinearChange, family: str, m: Optional[int] = None) -> None:
    verdict = validate_change(phi, family, m, 0.0 if phi.mat.is_exact else 1e-9)
    if not verdict.passed:
        raise ValueError(f"invalid change of variables for {family}: {verdict.detail}")


class FunctionFamily(ABC):
    """A 3-algebra on a polynomial space."""

    label: str
    slot2: Slot2
    mode: Backend = "exact"

    @property
    def tol(self) -> float:
        return 0.0 if self.mode == "exact" else 1e-9

    @abstractmethod
    def raw_bracket(self, f: Any, g: Any, h: Any) -> Any:
        """The bracket before normalization."""
        pass

    @abstractmethod
    def basis(self, degree: int) -> list[Any]:
        """Monomial elements of degree <= ``degree``."""
        pass

    @abstractmethod
    def random_element(self, rng: np.random.Generator, degree: int) -> Any:
        """A sample element with small Gaussian-rational coefficients."""
        pass

    def normalize(self, f: Any) -> Any:
        return f

    def bracket(self, f: Any, g: Any, h: Any) -> Any:
        return self.normalize(self.raw_bracket(f, g, h))

    def __call__(self, f: Any, g: Any, h: Any) -> Any:
        return self.bracket(f, g, h)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"


class PolyFamily(FunctionFamily):
    """Families on a single multivariate polynomial algebra."""

    roster: tuple[str, ...]

    def basis(self, degree: int) -> list[Poly]:
        return [
            Poly.monomial(self.roster, e, self.mode)
            for e in monomials(len(self.roster), degree)
        ]

    def random_element(self, rng: np.random.Generator, degree: int) -> Poly:
        return Poly.random(self.roster, degree, rng, self.mode)


class P3Family(PolyFamily):
    """P^3(m, phi): eq. {f,s}h + {f,h}s + f{s,h} + D(f) s h - f s D(h), s = sigma(g).

    Physical (default): sigma(g) = -sign * conj(g)(phi(vars)).
    Algebraic: sigma(g) = -g(phi(vars)).
    """

    def __init__(
        self, m: int, phi: LinearChange, sign: int = 1, physical: bool = True
    ) -> None:
        self.m = m
        self.roster = tuple(p3_roster(m))
        self.phi = phi
        self.sign = sign
        self.physical = physical
        self.mode = phi.mat.mode
        _require_valid(phi, "p3", m)
        self.slot2 = "antilinear" if physical else "linear"
        tag = f"_bar{'+' if sign == 1 else '-'}" if physical else ""
        self.label = f"P3({m},phi){tag}"

    def sigma(self, g: Poly) -> Poly:
        if self.physical:
            return -self.phi(g.conj()).scale(self.sign)
        return -self.phi(g)

    def derivation(self, f: Poly) -> Poly:
        if self.m % 2 == 0:
            return Poly.zero(self.roster, self.mode)
        return f.diff("t").scale(2)

    def raw_bracket(self, f: Poly, g: Poly, h: Poly) -> Poly:
        s = self.sigma(g)
        pb = lambda x, y: poisson(x, y, self.m)  # noqa: E731
        result = pb(f, s) * h + pb(f, h) * s + f * pb(s, h)
        if self.m % 2:
            result = result + self.derivation(f) * s * h - f * s * self.derivation(h)
        return result


class W3Family(PolyFamily):
    """W^3(phi): det of rows (f, G, h), D_1 of them, D_2 of them.

    Physical: G = conj(phi(g)); algebraic: G = phi(g).
    """

    def __init__(self, phi: LinearChange, sign: int = 1, physical: bool = True) -> None:
        self.roster = ("x1", "x2")
        self.phi = phi
        self.sign = sign
        self.physical = physical
        self.mode = phi.mat.mode
        _require_valid(phi, "w3" if physical else "w3_alg")
        self.slot2 = "antilinear" if physical else "linear"
        tag = f"_bar{'+' if sign == 1 else '-'}" if physical else ""
        self.label = f"W3(phi){tag}"

    def twist(self, g: Poly) -> Poly:
        image = self.phi(g)
        return image.conj() if self.physical else image

    def top_row(self, f: Poly, G: Poly, h: Poly) -> list[Poly]:
        return [f, G, h]

    def raw_bracket(self, f: Poly, g: Poly, h: Poly) -> Poly:
        G = self.twist(g)
        cols = (f, G, h)
        rows = [
            self.top_row(f, G, h),
            [c.diff(0) for c in cols],
            [c.diff(1) for c in cols],
        ]
        return det3(rows).scale(self.sign)


def validate_beta(beta: Any) -> None:
    """|beta| = 1 and beta not real."""
    value = to_complex(beta)
    g = GaussRat.coerce(beta)
    unit = g.abs2() == 1 if g is not None else abs(abs(value) - 1) <= 1e-12
    if not unit or value.imag == 0:
        raise ValueError(
            f"beta must satisfy |beta| = 1 and beta not real (so beta != +-1), got {beta}"
        )


class W3BetaFamily(W3Family):
    """W^3_beta(phi): top row ((2-E) f, (2 beta - E) G, (2-E) h), G = conj(phi(g)).

    The E parts cancel in the determinant. The bracket is scaled by 1 + conj(beta),
    which makes the middle weight 2(1 + beta) the conjugate of the outer weight
    2(1 + conj(beta)), the phase fixed by the graded conjugation of SKO(2,3;beta).
    """

    def __init__(self, beta: Any, phi: LinearChange, sign: int = 1) -> None:
        validate_beta(beta)
        self.beta = beta
        self.roster = ("x1", "x2")
        self.phi = phi
        self.sign = sign
        self.physical = True
        self.mode = phi.mat.mode
        _require_valid(phi, "w3beta")
        self.slot2 = "antilinear"
        self.label = f"W3_beta({beta}){'+' if sign == 1 else '-'}"
        self.phase = 1 + conj(beta)

    def top_row(self, f: Poly, G: Poly, h: Poly) -> list[Poly]:
        two_beta = self.beta * 2
        return [
            f.weighted(lambda e: 2 - sum(e)).scale(self.phase),
            G.weighted(lambda e: two_beta - sum(e)).scale(self.phase),
            h.weighted(lambda e: 2 - sum(e)).scale(self.phase),
        ]


class S3Family(PolyFamily):
    """S^3(phi): alpha det(D_i f, D_i G, D_i h) on the quotient by constants.

    Physical: G = conj(phi(g)), det phi = 1 with alpha = +-1 or det phi = -1 with
    alpha = +-i. Algebraic: G = phi(g), det phi = 1, phi^2 = 1.
    """

    def __init__(self, phi: LinearChange, alpha: Any = 1, physical: bool = True) -> None:
        self.roster = ("x1", "x2", "x3")
        self.phi = phi
        self.physical = physical
        self.mode = phi.mat.mode
        _require_valid(phi, "s3" if physical else "s3_alg")
        self.alpha = alpha
        det = to_complex(phi.det())
        a = to_complex(alpha)
        allowed = (1, -1) if abs(det - 1) <= 1e-12 else (1j, -1j)
        if not any(abs(a - v) <= 1e-12 for v in allowed):
            raise ValueError(
                f"alpha must be one of {allowed} when det phi = {det.real:+g}, got {alpha}"
            )
        self.slot2 = "antilinear" if physical else "linear"
        self.label = f"S3(phi;{alpha})" + ("_bar" if physical else "")

    def basis(self, degree: int) -> list[Poly]:
        return [f for f in super().basis(degree) if f.degree() > 0]

    def random_element(self, rng: np.random.Generator, degree: int) -> Poly:
        return super().random_element(rng, degree).drop_constant()

    def normalize(self, f: Poly) -> Poly:
        return f.drop_constant()

    def raw_bracket(self, f: Poly, g: Poly, h: Poly) -> Poly:
        image = self.phi(g)
        G = image.conj() if self.physical else image
        rows = [[c.diff(i) for c in (f, G, h)] for i in range(3)]
        return det3(rows).scale(self.alpha)


class SW3Family(FunctionFamily):
    """SW^3(a; phi_t) on two copies of the one-variable polynomial algebra.

    t = k pi i is given by ``t_turns`` = k. Integral k keeps the exact backend
    (exp(2t) = 1, exp(-t) = (-1)^k); other values switch to floats.
    """

    def __init__(
        self,
        a: CArray,
        lam: Any = 1,
        t_turns: Union[int, Fraction] = 0,
        physical: bool = True,
    ) -> None:
        if a.shape != (2, 2):
            raise ValueError(f"a must be 2x2, got {a.shape}")
        self.physical = physical
        self.t_turns = Fraction(t_turns)
        exact_t = self.t_turns.denominator == 1
        self.mode: Backend = "exact" if a.is_exact and exact_t else "float"
        self.a = a.with_mode(self.mode)
        tol = self.tol or 1e-12
        if abs(to_complex(self.a.det()) - 1) > tol:
            raise ValueError("a must have determinant 1")
        square = self.a.conj() @ self.a if physical else self.a @ self.a
        eye = CArray.identity(2, self.mode)
        if square.equals(eye, tol):
            epsilon = 1
        elif square.equals(-eye, tol):
            epsilon = -1
        else:
            what = "conj(a) a" if physical else "a^2"
            raise ValueError(f"{what} must be +I or -I")
        if physical:
            allowed = (1, -1) if epsilon == 1 else (1j, -1j)
            if not any(abs(to_complex(lam) - v) <= 1e-12 for v in allowed):
                raise ValueError(
                    f"lambda must be one of {allowed} when conj(a) a = {epsilon:+d} I, got {lam}"
                )
            if exact_t:
                k = self.t_turns.numerator
                self.weight: Any = GaussRat.coerce(lam) or to_complex(lam)
                self.weight = self.weight * (-1) ** (k % 2)
                self.stretch: Any = 1
            else:
                t = 1j * cmath.pi * float(self.t_turns)
                self.weight = to_complex(lam) * cmath.exp(-t)
                self.stretch = cmath.exp(2 * t)
            if self.mode == "float":
                self.weight = to_complex(self.weight)
        else:
            self.weight = 1
            self.stretch = epsilon
        self.slot2 = "antilinear" if physical else "linear"
        self.label = f"SW3(a;t={self.t_turns}pi i)" if physical else "SW3(a)"

    def coeff(self, i: int, j: int) -> Any:
        value = self.a[i - 1, j - 1]
        return conj(value) if self.physical else value

    def twist(self, g: Poly) -> Poly:
        stretch = CArray.from_scalars([[self.stretch]], self.mode)
        source = g.conj() if self.physical else g
        return source.substitute(stretch)

    def _pure(self, i: int, f: Poly, j: int, g: Poly, k: int, h: Poly) -> PairPoly:
        """[f<i>, g<j>, h<k>] on components."""
        if i == 2 and k == 1:
            return -self._pure(1, h, j, g, 2, f)
        G = self.twist(g)
        if i == k:
            c = self.coeff(i, 3 - i) if j == i else self.coeff(j, j)
            value = (f * h.diff(0) - f.diff(0) * h) * G
            return PairPoly.embed(i, value.scale(c * (-1) ** i * self.weight))
        dG = G.diff(0)
        first = ((f * dG - f.diff(0) * G) * h).scale(self.coeff(j, 1) * self.weight)
        second = (f * (h * dG - h.diff(0) * G)).scale(self.coeff(j, 2) * self.weight)
        return PairPoly(first, second)

    def raw_bracket(self, f: PairPoly, g: PairPoly, h: PairPoly) -> PairPoly:
        result = PairPoly.zero("x", self.mode)
        for i, j, k in product((1, 2), repeat=3):
            fi, gj, hk = f.component(i), g.component(j), h.component(k)
            if fi.is_zero() or gj.is_zero() or hk.is_zero():
                continue
            result = result + self._pure(i, fi, j, gj, k, hk)
        return result

    def basis(self, degree: int) -> list[PairPoly]:
        out = []
        for index in (1, 2):
            for e in monomials(1, degree):
                out.append(PairPoly.embed(index, Poly.monomial(["x"], e, self.mode)))
        return out

    def random_element(self, rng: np.random.Generator, degree: int) -> PairPoly:
        return PairPoly(
            Poly.random(["x"], degree, rng, self.mode),
            Poly.random(["x"], degree, rng, self.mode),
        )


class PhysicalizedFamily(FunctionFamily):
    """[f, g, h] = base[f, sign * conj(g), h] for an algebraic base family."""

    def __init__(self, base: FunctionFamily, sign: int = 1) -> None:
        if base.slot2 != "linear":
            raise ValueError(f"{base.label} is already physical")
        self.base = base
        self.sign = sign
        self.mode = base.mode
        self.slot2 = "antilinear"
        self.label = f"{base.label}_ph,{'+' if sign == 1 else '-'}C0"

    def raw_bracket(self, f: Any, g: Any, h: Any) -> Any:
        return self.base.raw_bracket(f, g.conj().scale(self.sign), h)

    def normalize(self, f: Any) -> Any:
        return self.base.normalize(f)

    def basis(self, degree: int) -> list[Any]:
        return self.base.basis(degree)

    def random_element(self, rng: np.random.Generator, degree: int) -> Any:
        return self.base.random_element(rng, degree)


def _counterexample(check: str, inputs: list[Any], lhs: Any, rhs: Any, note: str) -> Counterexample:
    return Counterexample(
        check=check,
        inputs=[v.to_json() for v in inputs],
        lhs=lhs.to_json(),
        rhs=rhs.to_json(),
        note=note,
    )


def check_function_family(
    family: FunctionFamily, samples: int = 200, degree: int = 4, seed: int = 0
) -> AxiomReport:
    """Anti-commutativity, fundamental identity and slot 2 behaviour on seeded samples."""
    rng = np.random.default_rng(seed)
    tol = family.tol
    statuses = {"antisym": "pass", "fi": "pass", "slot2": "pass"}
    counterexample: Optional[Counterexample] = None
    lam = GaussRat(1, 2) if family.mode == "exact" else complex(1, 2)
    for index in range(samples):
        a, b, x, y, z = (family.random_element(rng, degree) for _ in range(5))
        note = f"sample {index}, seed {seed}"
        if statuses["antisym"] == "pass":
            lhs, rhs = family(a, b, x), -family(x, b, a)
            if not lhs.equals(rhs, tol):
                statuses["antisym"] = "fail"
                counterexample = counterexample or _counterexample(
                    "antisym", [a, b, x], lhs, rhs, note
                )
        if statuses["fi"] == "pass":
            lhs = family(a, b, family(x, y, z))
            rhs = (
                family(family(a, b, x), y, z)
                - family(x, family(b, a, y), z)
                + family(x, y, family(a, b, z))
            )
            if not lhs.equals(rhs, tol):
                statuses["fi"] = "fail"
                counterexample = counterexample or _counterexample(
                    "fi", [a, b, x, y, z], lhs, rhs, note
                )
        if statuses["slot2"] == "pass":
            factor = conj(lam) if family.slot2 == "antilinear" else lam
            lhs, rhs = family(a, b.scale(lam), x), family(a, b, x).scale(factor)
            if not lhs.equals(rhs, tol):
                statuses["slot2"] = "fail"
                counterexample = counterexample or _counterexample(
                    "slot2", [a, b, x], lhs, rhs, note
                )
    logger.info(f"{family.label}: {statuses} over {samples} samples (degree <= {degree})")
    return AxiomReport(
        family=family.label,
        antisym=statuses["antisym"],
        fi=statuses["fi"],
        slot2=family.slot2 if statuses["slot2"] == "pass" else "fail",
        fi_mode="sampled",
        seed=seed,
        counterexample=counterexample,
    )


def check_identification(
    first: FunctionFamily,
    second: FunctionFamily,
    samples: int = 50,
    degree: int = 3,
    seed: int = 0,
) -> CheckResult:
    """Equality of two brackets on seeded sample triples."""
    rng = np.random.default_rng(seed)
    tol = max(first.tol, second.tol)
    for index in range(samples):
        f, g, h = (first.random_element(rng, degree) for _ in range(3))
        lhs, rhs = first(f, g, h), second(f, g, h)
        if not lhs.equals(rhs, tol):
            return CheckResult(
                name="identification",
                status="fail",
                evaluations=index + 1,
                mode="sampled",
                seed=seed,
                detail=f"{first.label} vs {second.label}",
                counterexample=_counterexample(
                    "identification", [f, g, h], lhs, rhs, f"sample {index}"
                ),
            )
    return CheckResult(
        name="identification",
        status="pass",
        evaluations=samples,
        mode="sampled",
        seed=seed,
        detail=f"{first.label} = {second.label}",
    )


def _coefficients(element: Any) -> dict[tuple[Any, ...], Any]:
    if isinstance(element, PairPoly):
        out = {(1, *e): c for e, c in element.first.terms.items()}
        out.update({(2, *e): c for e, c in element.second.terms.items()})
        return out
    return dict(element.terms)


def central_dimension(family: FunctionFamily, degree: int, outer_degree: int) -> int:
    """Real dimension of {g of degree <= degree : [a, g, c] = 0 for all outer monomials a, c}."""
    if family.mode != "exact":
        raise ValueError(f"central polynomial search needs the exact backend, got {family.mode}")
    unknowns = family.basis(degree)
    outers = family.basis(outer_degree)
    twisted = [g.scale(I_UNIT) for g in unknowns]
    span = ExactSpan(2 * len(unknowns), track=False)
    for a, c in product(outers, repeat=2):
        columns = [_coefficients(family(a, g, c)) for g in unknowns]
        columns += [_coefficients(family(a, g, c)) for g in twisted]
        keys = sorted(set().union(*columns))
        for key in keys:
            values = [col.get(key, GaussRat(0)) for col in columns]
            for part in (lambda v: v.real, lambda v: v.imag):
                row = [part(v) for v in values]
                if any(row):
                    span.add(row)
            if span.is_full:
                return 0
    return 2 * len(unknowns) - span.rank


def no_central_poly(family: FunctionFamily, degree: int = 2, outer_degree: int = 3) -> bool:
    """True iff zero is the only central polynomial of degree <= ``degree``."""
    if degree < 1 or outer_degree < 1:
        raise ValueError("degree caps must be >= 1")
    kernel = central_dimension(family, degree, outer_degree)
    logger.info(f"{family.label}: central kernel of real dimension {kernel} (D={degree})")
    return kernel == 0


PHI_PRESETS: dict[str, dict[str, list[list[Any]]]] = {
    "id": {
        "w3": [[1, 0], [0, 1]],
        "s3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    },
    "swap": {
        "w3": [[0, 1], [1, 0]],
        "s3": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    },
    "neg": {
        "w3": [[-1, 0], [0, -1]],
        "s3": [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
    },
    "diag-i": {
        "w3": [[I_UNIT, 0], [0, -I_UNIT]],
        "s3": [[I_UNIT, 0, 0], [0, -I_UNIT, 0], [0, 0, 1]],
    },
    "flip": {
        "s3": [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
    },
}


def p3_swap(m: int, mode: Backend = "exact") -> LinearChange:
    """p_i <-> q_i, and t -> -t for odd m."""
    k = m // 2
    rows = [[0] * m for _ in range(m)]
    for i in range(k):
        rows[i][k + i] = 1
        rows[k + i][i] = 1
    if m % 2:
        rows[m - 1][m - 1] = -1
    return LinearChange.from_rows(rows, mode)


def resolve_phi(name: str, family: str, m: Optional[int] = None) -> LinearChange:
    """Named change of variables for a family ("id", "swap", "neg", "diag-i", "flip")."""
    if family.startswith("p3"):
        if name != "swap":
            raise ValueError("P3 families support only the 'swap' preset or a matrix file")
        return p3_swap(m or 2)
    key = "s3" if family.startswith("s3") else "w3"
    rows = PHI_PRESETS.get(name, {}).get(key)
    if rows is None:
        raise ValueError(f"Unsupported phi preset '{name}' for {family}")
    return LinearChange.from_rows(rows, "exact")


class FunctionFamilySpec(BaseModel):
    """Parameters of an infinite-dimensional family."""

    name: Literal[
        "p3", "p3_alg", "sw3", "sw3_alg", "w3", "w3_alg", "w3beta", "s3", "s3_alg"
    ] = Field(description="Family name")
    m: Optional[int] = Field(default=None, description="Number of P3 indeterminates")
    phi: str = Field(default="id", description="Preset name of the change of variables")
    phi_matrix: Optional[dict[str, Any]] = Field(
        default=None, description="Matrix JSON overriding the preset"
    )
    sign: Literal[1, -1] = Field(default=1, description="Overall sign")
    beta: Optional[str] = Field(default=None, description="beta for W3_beta")
    alpha: Optional[str] = Field(default=None, description="alpha for S3")
    lam: Optional[str] = Field(default=None, description="lambda for SW3")
    a: Optional[dict[str, Any]] = Field(default=None, description="Matrix JSON for SW3")
    t_turns: str = Field(default="0", description="t / (pi i) for SW3")


def _phi(spec: FunctionFamilySpec) -> LinearChange:
    if spec.phi_matrix is not None:
        return LinearChange(CArray.from_json(spec.phi_matrix))
    default = "swap" if spec.name.startswith("p3") and spec.phi == "id" else spec.phi
    return resolve_phi(default, spec.name, spec.m)


def _sw3(spec: FunctionFamilySpec, physical: bool) -> SW3Family:
    a = CArray.from_json(spec.a) if spec.a is not None else CArray.identity(2)
    lam = parse_scalar(spec.lam) if spec.lam is not None else GaussRat(spec.sign)
    return SW3Family(a, lam, Fraction(spec.t_turns), physical)


class FunctionFamilyFactory:
    """Factory for infinite-dimensional families."""

    FAMILY_REGISTRY: dict[str, Callable[[FunctionFamilySpec], FunctionFamily]] = {
        "p3": lambda s: P3Family(s.m or 2, _phi(s), s.sign),
        "p3_alg": lambda s: P3Family(s.m or 2, _phi(s), physical=False),
        "w3": lambda s: W3Family(_phi(s), s.sign),
        "w3_alg": lambda s: W3Family(_phi(s), physical=False),
        "w3beta": lambda s: W3BetaFamily(
            parse_scalar(s.beta or "3/5+4/5i"), _phi(s), s.sign
        ),
        "s3": lambda s: S3Family(_phi(s), parse_scalar(s.alpha or str(s.sign))),
        "s3_alg": lambda s: S3Family(_phi(s), parse_scalar(s.alpha or "1"), physical=False),
        "sw3": lambda s: _sw3(s, True),
        "sw3_alg": lambda s: _sw3(s, False),
    }

    @staticmethod
    def create(spec: FunctionFamilySpec) -> FunctionFamily:
        builder = FunctionFamilyFactory.FAMILY_REGISTRY.get(spec.name)
        if builder is None:
            raise ValueError(f"Unsupported family: {spec.name}")
        return builder(spec)

    @staticmethod
    def get_supported_families() -> list[str]:
        return list(FunctionFamilyFactory.FAMILY_REGISTRY.keys())
