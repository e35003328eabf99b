"""Finite-dimensional 3-algebra families built from matrices.

Matrix-valued families use row-major coordinates: an m x n matrix ``a`` is the
coordinate vector ``a.reshape(-1)`` of length mn. The C^3 families act on row
vectors of length 2n.
"""

from __future__ import annotations

import logging
from typing import Any, Callable, Literal, Optional

from pydantic import BaseModel, Field

from .scalars import (
    I_UNIT,
    Backend,
    CArray,
    ConjMap,
    GaussRat,
    is_antihermitian,
    is_hermitian,
    is_symplectic,
    make_H,
    make_J,
    make_S,
    parse_scalar,
    to_complex,
)
from .three_algebra import TriSystem, compare_brackets, physicalize

logger = logging.getLogger(__name__)

FamilyName = Literal[
    "a3t",
    "a3t_ph",
    "a3st",
    "a3st_ph",
    "a3n_plus",
    "a3n_minus",
    "c3",
    "c3_ph",
    "c3_H_alpha",
    "a3_star",
    "a3n_psi",
]


class FamilySpec(BaseModel):
    """Parameters of a finite-dimensional family, mirroring the CLI flags."""

    name: FamilyName = Field(description="Family name")
    m: Optional[int] = Field(default=None, description="Row count of matrix families")
    n: Optional[int] = Field(default=None, description="Column count / size")
    p: Optional[int] = Field(default=None, description="Signature parameter p")
    q: Optional[int] = Field(default=None, description="Signature parameter q")
    two_n: Optional[int] = Field(default=None, description="Even size 2n of C^3 families")
    sign: Literal[1, -1] = Field(default=1, description="Overall sign choice")
    alpha: Optional[str] = Field(default=None, description="Weight alpha as a/b+c/di")
    lam: Optional[str] = Field(default=None, description="Unit scalar lambda")
    H: Optional[dict[str, Any]] = Field(default=None, description="Matrix JSON for H")
    A: Optional[dict[str, Any]] = Field(default=None, description="Matrix JSON for A")
    B: Optional[dict[str, Any]] = Field(default=None, description="Matrix JSON for B")
    backend: Backend = Field(default="exact", description="exact or float arithmetic")

    def require(self, *fields: str) -> list[Any]:
        values = []
        for name in fields:
            value = getattr(self, name)
            if value is None:
                raise ValueError(f"family {self.name} needs parameter '{name}'")
            values.append(value)
        return values


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def _check_even(**values: int) -> None:
    for name, value in values.items():
        if value < 2 or value % 2:
            raise ValueError(f"{name} must be even and positive, got {value}")


def build_a3t(m: int, n: int, mode: Backend = "exact") -> TriSystem:
    """A^3(m,n;t): [a,b,c] = a b^t c - c b^t a on m x n matrices (algebraic)."""
    _check_positive(m=m, n=n)

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        a, b, c = (v.reshape(m, n) for v in (a, b, c))
        return (a @ b.T @ c - c @ b.T @ a).reshape(-1)

    return TriSystem(m * n, "linear", bracket, f"A3({m},{n};t)", mode)


def conj_pq(m: int, n: int, p: int, q: int, mode: Backend = "exact") -> ConjMap:
    """C_{p,q}(u) = S^m_q conj(u) S^n_p on m x n matrices."""
    if not 0 <= q <= m or not 0 <= p <= n:
        raise ValueError(
            f"C_(p,q) on {m}x{n} matrices needs 0 <= q <= m and 0 <= p <= n, "
            f"got p={p}, q={q}"
        )
    return ConjMap(make_S(m, q, mode).kron(make_S(n, p, mode)), antilinear=True)


def build_a3t_ph(m: int, n: int, p: int, q: int, mode: Backend = "exact") -> TriSystem:
    """A^3(m,n;t)_{ph,C_{p,q}} = [a, C_{p,q}(b), c] of A^3(m,n;t)."""
    return physicalize(
        build_a3t(m, n, mode), conj_pq(m, n, p, q, mode), f"A3({m},{n};t)_ph,C({p},{q})"
    )


def build_a3n(n: int, sign: int = 1, mode: Backend = "exact") -> TriSystem:
    """A^3(n)+-: [a,b,c] = +-i (a conj(b) c - c conj(b) a) on n x n matrices."""
    _check_positive(n=n)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        a, b, c = (v.reshape(n, n) for v in (a, b, c))
        bb = b.conj()
        value = (a @ bb @ c - c @ bb @ a).times_i()
        return (value if sign == 1 else -value).reshape(-1)

    return TriSystem(n * n, "antilinear", bracket, f"A3({n}){'+' if sign == 1 else '-'}", mode)


def super_transpose(b: CArray) -> CArray:
    """b^st = J_{2k} b^t J_{2h}^{-1} for a 2h x 2k matrix b."""
    rows, cols = b.shape
    return make_J(cols, b.mode) @ b.T @ -make_J(rows, b.mode)


def build_a3st(m: int, n: int, mode: Backend = "exact") -> TriSystem:
    """A^3(m,n;st): [a,b,c] = a b^st c - c b^st a for even m, n."""
    _check_even(m=m, n=n)
    J_n, J_m_inv = make_J(n, mode), -make_J(m, mode)

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        a, b, c = (v.reshape(m, n) for v in (a, b, c))
        bst = J_n @ b.T @ J_m_inv
        return (a @ bst @ c - c @ bst @ a).reshape(-1)

    return TriSystem(m * n, "linear", bracket, f"A3({m},{n};st)", mode)


def build_a3st_ph(m: int, n: int, mode: Backend = "exact") -> TriSystem:
    """A^3(m,n;st)_{ph,C_0}, with C_0 entrywise conjugation."""
    return physicalize(
        build_a3st(m, n, mode),
        ConjMap(CArray.identity(m * n, mode), antilinear=True),
        f"A3({m},{n};st)_ph,C0",
    )


def build_a3_star(A: CArray, B: CArray, lam: Any, tol: float = 0.0) -> TriSystem:
    """[a,b,c] = a b* c - c b* a with b* = A conj(b)^t B^{-1}.

    A is n x n, B is m x m, and A = lam conj(A)^t, B = lam conj(B)^t, |lam| = 1.
    """
    n, m = A.shape[0], B.shape[0]
    if A.shape != (n, n) or B.shape != (m, m):
        raise ValueError(f"A and B must be square, got {A.shape} and {B.shape}")
    if abs(abs(to_complex(lam)) - 1) > max(tol, 1e-12):
        raise ValueError(f"lambda must satisfy |lambda| = 1, got {lam}")
    for name, M in (("A", A), ("B", B)):
        if not M.equals(M.adjoint().scale(lam), tol):
            raise ValueError(f"{name} must satisfy {name} = lambda conj({name})^t")
    B_inv = B.inverse()

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        a, b, c = (v.reshape(m, n) for v in (a, b, c))
        bstar = A @ b.adjoint() @ B_inv
        return (a @ bstar @ c - c @ bstar @ a).reshape(-1)

    return TriSystem(m * n, "antilinear", bracket, f"A3({m},{n};*)", A.mode, tol or None)


def build_a3n_psi(A: CArray, tol: float = 0.0) -> TriSystem:
    """[a,b,c]_A = i (a A conj(b) conj(A) c - c A conj(b) conj(A) a), A invertible."""
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"A must be square, got {A.shape}")
    A.inverse()  # raises on singular A
    A_bar = A.conj()

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        a, b, c = (v.reshape(n, n) for v in (a, b, c))
        mid = A @ b.conj() @ A_bar
        return (a @ mid @ c - c @ mid @ a).times_i().reshape(-1)

    return TriSystem(n * n, "antilinear", bracket, f"A3({n})_psi", A.mode, tol or None)


def psi(v: CArray) -> CArray:
    """psi(X Y) = (Y -X) for a row vector of length 2n."""
    half = v.shape[0] // 2
    if v.ndim != 1 or 2 * half != v.shape[0]:
        raise ValueError(f"psi needs a vector of even length, got shape {v.shape}")
    return CArray.block([[v[half:].reshape(1, -1), (-v[:half]).reshape(1, -1)]]).reshape(-1)


def _dot(x: CArray, y: CArray) -> Any:
    return x.tensordot(y, axes=1)[()]


def build_c3(two_n: int, mode: Backend = "exact") -> TriSystem:
    """C^3(2n): [a,b,c] = -(a.b) c + (c.b) a - (c.psi(a)) psi(b) (algebraic)."""
    _check_even(two_n=two_n)

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        return (
            c.scale(-_dot(a, b))
            + a.scale(_dot(c, b))
            - psi(b).scale(_dot(c, psi(a)))
        )

    return TriSystem(two_n, "linear", bracket, f"C3({two_n})", mode)


def validate_c3_parameters(H: CArray, alpha: Any, tol: float = 0.0) -> None:
    """Reject H, alpha outside the two admissible (hermiticity, alpha-ray) pairs."""
    size = H.shape[0]
    if H.shape != (size, size):
        raise ValueError(f"H must be square, got shape {H.shape}")
    if not is_symplectic(H, tol):
        raise ValueError("H must be symplectic (H^t J H = J)")
    value = to_complex(alpha)
    if value == 0:
        raise ValueError("alpha must be nonzero")
    if is_hermitian(H, tol):
        if abs(value.imag) > tol:
            raise ValueError(f"alpha must be real when H is hermitian, got {alpha}")
    elif is_antihermitian(H, tol):
        if abs(value.real) > tol:
            raise ValueError(f"alpha must be imaginary when H is anti-hermitian, got {alpha}")
    else:
        raise ValueError("H must be hermitian or anti-hermitian")


def build_c3_H_alpha(two_n: int, H: CArray, alpha: Any, tol: float = 0.0) -> TriSystem:
    """C^3(2n,H;alpha) with the weight alpha on all three terms:

    [a,b,c] = alpha (-(a H conj(b)) c + (c H conj(b)) a - (c J a^t) psi(H conj(b)))
    """
    _check_even(two_n=two_n)
    if H.shape != (two_n, two_n):
        raise ValueError(f"H must be {two_n}x{two_n}, got {H.shape}")
    validate_c3_parameters(H, alpha, tol)

    def bracket(a: CArray, b: CArray, c: CArray) -> CArray:
        hb = H @ b.conj()
        value = c.scale(-_dot(a, hb)) + a.scale(_dot(c, hb)) - psi(hb).scale(_dot(c, psi(a)))
        return value.scale(alpha)

    return TriSystem(two_n, "antilinear", bracket, f"C3({two_n},H;{alpha})", H.mode, tol or None)


def build_c3_ph_cp(two_n: int, p: int, sign: int = 1, mode: Backend = "exact") -> TriSystem:
    """C^3(2n, H^{2n}_p; +-1)."""
    _check_even(two_n=two_n)
    if not 0 <= p <= two_n // 2:
        raise ValueError(f"p must satisfy 0 <= p <= {two_n // 2}, got {p}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return build_c3_H_alpha(two_n, make_H(two_n, p, mode), sign).relabel(
        f"C3({two_n},H_{p};{sign:+d})"
    )


def build_c3_is(two_n: int, sign: int = 1, mode: Backend = "exact") -> TriSystem:
    """C^3(2n, i S^{2n}_n; +-i)."""
    _check_even(two_n=two_n)
    H = make_S(two_n, two_n // 2, mode).times_i()
    alpha = I_UNIT if sign == 1 else -I_UNIT
    return build_c3_H_alpha(two_n, H, alpha).relabel(
        f"C3({two_n},iS;{'+' if sign == 1 else '-'}i)"
    )


def build_c3_physicalized(two_n: int, p: int, mode: Backend = "exact") -> TriSystem:
    """C^3(2n)_{ph,C_{n-p}} with C_{n-p}(u) = conj(u) H^{2n}_p."""
    H = make_H(two_n, p, mode)
    return physicalize(
        build_c3(two_n, mode), ConjMap(H.T, antilinear=True), f"C3({two_n})_ph,C_{two_n // 2 - p}"
    )


def _matrix(payload: Optional[dict[str, Any]], name: str) -> CArray:
    if payload is None:
        raise ValueError(f"this family needs the matrix '{name}'")
    return CArray.from_json(payload)


def _scalar(text: Optional[str], default: Any, backend: Backend) -> Any:
    return default if text is None else parse_scalar(text, backend)


def _build_c3_H_alpha_spec(spec: FamilySpec) -> TriSystem:
    (two_n,) = spec.require("two_n")
    alpha = _scalar(spec.alpha, GaussRat(spec.sign), spec.backend)
    if spec.H is not None:
        H = CArray.from_json(spec.H)
    elif to_complex(alpha).imag != 0:
        H = make_S(two_n, two_n // 2, spec.backend).times_i()
    else:
        H = make_H(two_n, two_n // 2 if spec.p is None else spec.p, spec.backend)
    tol = 0.0 if H.is_exact else 1e-9
    return build_c3_H_alpha(two_n, H, alpha, tol)


def _build_a3_star_spec(spec: FamilySpec) -> TriSystem:
    A, B = _matrix(spec.A, "A"), _matrix(spec.B, "B")
    lam = _scalar(spec.lam, GaussRat(1), A.mode)
    return build_a3_star(A, B, lam, 0.0 if A.is_exact else 1e-9)


class FamilyFactory:
    """Factory for finite-dimensional families."""

    FAMILY_REGISTRY: dict[str, Callable[[FamilySpec], TriSystem]] = {
        "a3t": lambda s: build_a3t(*s.require("m", "n"), mode=s.backend),
        "a3t_ph": lambda s: build_a3t_ph(*s.require("m", "n", "p", "q"), mode=s.backend),
        "a3st": lambda s: build_a3st(*s.require("m", "n"), mode=s.backend),
        "a3st_ph": lambda s: build_a3st_ph(*s.require("m", "n"), mode=s.backend),
        "a3n_plus": lambda s: build_a3n(*s.require("n"), sign=1, mode=s.backend),
        "a3n_minus": lambda s: build_a3n(*s.require("n"), sign=-1, mode=s.backend),
        "c3": lambda s: build_c3(*s.require("two_n"), mode=s.backend),
        "c3_ph": lambda s: build_c3_ph_cp(*s.require("two_n", "p"), sign=s.sign, mode=s.backend),
        "c3_H_alpha": _build_c3_H_alpha_spec,
        "a3_star": _build_a3_star_spec,
        "a3n_psi": lambda s: build_a3n_psi(_matrix(s.A, "A")),
    }

    @staticmethod
    def create(spec: FamilySpec) -> TriSystem:
        """Build the 3-algebra described by ``spec``."""
        builder = FamilyFactory.FAMILY_REGISTRY.get(spec.name)
        if builder is None:
            raise ValueError(f"Unsupported family: {spec.name}")
        system = builder(spec)
        logger.info(f"built {system.label} (dim {system.dim}, {system.slot2})")
        return system

    @staticmethod
    def get_supported_families() -> list[str]:
        return list(FamilyFactory.FAMILY_REGISTRY.keys())


def c3_sign_convention_holds(two_n: int) -> bool:
    """C^3(2n)_{ph,C_0} equals C^3(2n, I; 1) on basis triples."""
    first = build_c3_physicalized(two_n, two_n // 2)
    second = build_c3_H_alpha(two_n, CArray.identity(two_n), GaussRat(1))
    return compare_brackets(first, second).passed

