"""Sparse multivariate polynomials with Gaussian-rational or complex coefficients.

A polynomial maps exponent tuples (one entry per roster variable) to nonzero
coefficients. Like ``CArray`` a polynomial lives on one backend: exact
(``GaussRat``) or float (``complex``); mixing the two raises ``TypeError``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterator, Mapping, Optional, Sequence, Union

import numpy as np

from .scalars import (
    Backend,
    CArray,
    GaussRat,
    conj,
    exact,
    scalar_from_json,
    scalar_to_json,
    to_complex,
)

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """Exponents of total degree <= ``degree``, ordered by degree then lexicographically."""
    found = [e for e in product(range(degree + 1), repeat=nvars) if sum(e) <= degree]
    return sorted(found, key=lambda e: (sum(e), tuple(-k for k in e)))


class Poly:
    """Immutable sparse polynomial over a fixed variable roster."""

    __slots__ = ("_mode", "_terms", "roster")

    def __init__(
        self,
        roster: Sequence[str],
        terms: Optional[Mapping[Sequence[int], Any]] = None,
        mode: Backend = "exact",
    ) -> None:
        self.roster = tuple(roster)
        convert: Callable[[Any], Any] = exact if mode == "exact" else to_complex
        clean: dict[Exponent, Any] = {}
        for key, value in (terms or {}).items():
            e = tuple(int(k) for k in key)
            if len(e) != len(self.roster) or any(k < 0 for k in e):
                raise ValueError(
                    f"exponent {e} does not fit the roster {list(self.roster)}"
                )
            c = convert(value)
            if c != 0:
                clean[e] = c
        self._terms = clean
        self._mode: Backend = mode

    @classmethod
    def _raw(cls, roster: tuple[str, ...], terms: dict[Exponent, Any], mode: Backend) -> Poly:
        obj = object.__new__(cls)
        obj.roster = roster
        obj._terms = {e: c for e, c in terms.items() if c != 0}
        obj._mode = mode
        return obj

    @classmethod
    def zero(cls, roster: Sequence[str], mode: Backend = "exact") -> Poly:
        return cls(roster, None, mode)

    @classmethod
    def const(cls, roster: Sequence[str], value: Any, mode: Backend = "exact") -> Poly:
        return cls(roster, {(0,) * len(roster): value}, mode)

    @classmethod
    def var(cls, roster: Sequence[str], name: str, mode: Backend = "exact") -> Poly:
        if name not in roster:
            raise ValueError(f"unknown variable '{name}', roster is {list(roster)}")
        e = [0] * len(roster)
        e[list(roster).index(name)] = 1
        return cls(roster, {tuple(e): 1}, mode)

    @classmethod
    def monomial(cls, roster: Sequence[str], e: Sequence[int], mode: Backend = "exact") -> Poly:
        return cls(roster, {tuple(e): 1}, mode)

    @classmethod
    def random(
        cls,
        roster: Sequence[str],
        degree: int,
        rng: np.random.Generator,
        mode: Backend = "exact",
        max_terms: int = 3,
    ) -> Poly:
        """A few monomials of degree <= ``degree`` with small Gaussian-rational coefficients."""
        pool = monomials(len(roster), degree)
        count = int(rng.integers(1, max_terms + 1))
        picks = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
        terms = {}
        for k in sorted(int(v) for v in picks):
            re_part = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
            im_part = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
            terms[pool[k]] = GaussRat(re_part, im_part)
        return cls(roster, terms, mode)

    @property
    def mode(self) -> Backend:
        return self._mode

    @property
    def nvars(self) -> int:
        return len(self.roster)

    @property
    def terms(self) -> dict[Exponent, Any]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Any]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient(self, e: Sequence[int]) -> Any:
        return self._terms.get(tuple(e), GaussRat(0) if self.is_exact else 0j)

    @property
    def is_exact(self) -> bool:
        return self._mode == "exact"

    def _index(self, var: Union[int, str]) -> int:
        if isinstance(var, str):
            if var not in self.roster:
                raise ValueError(f"unknown variable '{var}', roster is {list(self.roster)}")
            return self.roster.index(var)
        return var

    def _check(self, other: Poly) -> None:
        if self.roster != other.roster:
            raise ValueError(f"roster mismatch: {list(self.roster)} vs {list(other.roster)}")
        if self._mode != other._mode:
            raise TypeError("cannot mix exact and float polynomials")

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly._raw(self.roster, out, self._mode)

    def __neg__(self) -> Poly:
        return Poly._raw(self.roster, {e: -c for e, c in self._terms.items()}, self._mode)

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Any) -> Poly:
        c0 = exact(factor) if self.is_exact else to_complex(factor)
        return Poly._raw(self.roster, {e: c0 * c for e, c in self._terms.items()}, self._mode)

    def __mul__(self, other: Any) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Any] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out[e] + ca * cb if e in out else ca * cb
        return Poly._raw(self.roster, out, self._mode)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        result = Poly.const(self.roster, 1, self._mode)
        for _ in range(exponent):
            result = result * self
        return result

    def diff(self, var: Union[int, str]) -> Poly:
        """Partial derivative in one roster variable."""
        i = self._index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                lowered = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[lowered] = c * e[i]
        return Poly._raw(self.roster, out, self._mode)

    def weighted(self, weight: Callable[[Exponent], Any]) -> Poly:
        """Multiply every term by ``weight(exponent)``; used for (s - E)-type operators."""
        convert = exact if self.is_exact else to_complex
        return Poly._raw(
            self.roster,
            {e: c * convert(weight(e)) for e, c in self._terms.items()},
            self._mode,
        )

    def conj(self) -> Poly:
        """Conjugate every coefficient."""
        return Poly._raw(self.roster, {e: conj(c) for e, c in self._terms.items()}, self._mode)

    def substitute(self, matrix: CArray) -> Poly:
        """f(M x): every variable x_i becomes sum_j M_ij x_j."""
        n = self.nvars
        if matrix.shape != (n, n):
            raise ValueError(f"substitution matrix must be {n}x{n}, got {matrix.shape}")
        if matrix.mode != self._mode:
            raise TypeError("cannot mix exact and float polynomials")
        linear = []
        for i in range(n):
            row = {}
            for j in range(n):
                e = [0] * n
                e[j] = 1
                row[tuple(e)] = matrix[i, j]
            linear.append(Poly(self.roster, row, self._mode))
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            if (i, k) not in powers:
                powers[(i, k)] = linear[i] if k == 1 else power(i, k - 1) * linear[i]
            return powers[(i, k)]

        result = Poly.zero(self.roster, self._mode)
        for e, c in self._terms.items():
            term = Poly.const(self.roster, c, self._mode)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def constant_term(self) -> Any:
        return self.coefficient((0,) * self.nvars)

    def drop_constant(self) -> Poly:
        out = dict(self._terms)
        out.pop((0,) * self.nvars, None)
        return Poly._raw(self.roster, out, self._mode)

    def to_float(self) -> Poly:
        return Poly(self.roster, {e: complex(c) for e, c in self._terms.items()}, "float")

    def max_deviation(self, other: Poly) -> float:
        self._check(other)
        diff = self - other
        return max((abs(complex(c)) for c in diff._terms.values()), default=0.0)

    def equals(self, other: Poly, tol: float = 0.0) -> bool:
        if self.is_exact and other.is_exact:
            self._check(other)
            return self._terms == other._terms
        return self.max_deviation(other) <= tol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Poly({self}, vars={list(self.roster)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.roster, e)
                if k
            ]
            coeff = str(c) if self.is_exact else f"{complex(c):g}"
            if factors and coeff in ("1", "(1+0j)"):
                parts.append("*".join(factors))
            else:
                parts.append("*".join([f"({coeff})", *factors]) if factors else f"({coeff})")
        return " + ".join(parts)

    def to_json(self) -> dict[str, Any]:
        return {
            "vars": list(self.roster),
            "terms": [{"e": list(e), "c": scalar_to_json(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> Poly:
        try:
            roster = payload["vars"]
            entries = payload["terms"]
        except KeyError as e:
            raise ValueError(f"polynomial JSON is missing field {e}") from e
        terms = {tuple(t["e"]): scalar_from_json(t["c"]) for t in entries}
        mode: Backend = "exact" if all(len(t["c"]) == 4 for t in entries) else "float"
        return cls(roster, terms, mode)


@dataclass(frozen=True)
class LinearChange:
    """Linear change of variables f -> f(M x) on a fixed roster."""

    mat: CArray

    @classmethod
    def identity(cls, n: int, mode: Backend = "exact") -> LinearChange:
        return cls(CArray.identity(n, mode))

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Any]], mode: Optional[Backend] = None
    ) -> LinearChange:
        return cls(CArray.from_scalars(rows, mode))

    @property
    def size(self) -> int:
        return self.mat.shape[0]

    def apply(self, f: Poly) -> Poly:
        return f.substitute(self.mat)

    def __call__(self, f: Poly) -> Poly:
        return self.apply(f)

    def then(self, other: LinearChange) -> LinearChange:
        """The change ``f -> other(self(f))``."""
        return LinearChange(self.mat @ other.mat)

    def conj(self) -> LinearChange:
        return LinearChange(self.mat.conj())

    def squared(self) -> CArray:
        return self.mat @ self.mat

    def conj_squared(self) -> CArray:
        """Matrix of f -> conj(phi(conj(phi(f)))), i.e. M conj(M)."""
        return self.mat @ self.mat.conj()

    def det(self) -> Any:
        return self.mat.det()

    def is_real(self) -> bool:
        return self.mat.imag_part().is_zero()


@dataclass(frozen=True)
class PairPoly:
    """Element f<1> + g<2> of two copies of the one-variable polynomial algebra."""

    first: Poly
    second: Poly

    def __post_init__(self) -> None:
        if self.first.roster != self.second.roster or self.first.nvars != 1:
            raise ValueError("PairPoly components must share a one-variable roster")
        if self.first.mode != self.second.mode:
            raise TypeError("cannot mix exact and float components")

    @classmethod
    def zero(cls, var: str = "x", mode: Backend = "exact") -> PairPoly:
        return cls(Poly.zero([var], mode), Poly.zero([var], mode))

    @classmethod
    def embed(cls, index: int, f: Poly) -> PairPoly:
        """f<index> for index 1 or 2."""
        zero = Poly.zero(f.roster, f.mode)
        if index == 1:
            return cls(f, zero)
        if index == 2:
            return cls(zero, f)
        raise ValueError(f"component index must be 1 or 2, got {index}")

    @property
    def mode(self) -> Backend:
        return self.first.mode

    def component(self, index: int) -> Poly:
        return self.first if index == 1 else self.second

    def __add__(self, other: PairPoly) -> PairPoly:
        return PairPoly(self.first + other.first, self.second + other.second)

    def __sub__(self, other: PairPoly) -> PairPoly:
        return PairPoly(self.first - other.first, self.second - other.second)

    def __neg__(self) -> PairPoly:
        return PairPoly(-self.first, -self.second)

    def scale(self, factor: Any) -> PairPoly:
        return PairPoly(self.first.scale(factor), self.second.scale(factor))

    def conj(self) -> PairPoly:
        return PairPoly(self.first.conj(), self.second.conj())

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def equals(self, other: PairPoly, tol: float = 0.0) -> bool:
        return self.first.equals(other.first, tol) and self.second.equals(other.second, tol)

    def max_deviation(self, other: PairPoly) -> float:
        return max(self.first.max_deviation(other.first), self.second.max_deviation(other.second))

    def to_json(self) -> dict[str, Any]:
        return {"components": [self.first.to_json(), self.second.to_json()]}

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> PairPoly:
        first, second = payload["components"]
        return cls(Poly.from_json(first), Poly.from_json(second))
