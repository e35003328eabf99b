"""Constructive factorizations and explicit isomorphisms between 3-algebras.

Factorizations run on the float backend through ``scipy.linalg.eigh``.
Isomorphisms are linear maps ``F`` on coordinates, certified by comparing
F([a, b, c]) with [Fa, Fb, Fc] on all basis triples (slot 2 also scaled by i).
"""

from __future__ import annotations

import cmath
import logging
from itertools import product
from typing import Any, Literal

import numpy as np
import scipy.linalg

from .matrix_families import (
    build_a3_star,
    build_a3n,
    build_a3n_psi,
    build_a3t_ph,
    build_c3_H_alpha,
    build_c3_is,
    build_c3_ph_cp,
)
from .models import FactorReport, WitnessReport
from .scalars import (
    I_UNIT,
    CArray,
    is_antihermitian,
    is_hermitian,
    is_symplectic,
    make_H,
    make_J,
    make_S,
    to_complex,
)
from .three_algebra import TriSystem

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
CLUSTER_TOL = 1e-8

FactorKind = Literal["hermitian", "symplectic-hermitian", "symplectic-antihermitian"]


def _square(M: CArray, what: str) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{what} needs a square matrix, got shape {M.shape}")
    return M.shape[0]


def _eigh(M: np.ndarray, what: str) -> tuple[np.ndarray, np.ndarray]:
    w, Q = scipy.linalg.eigh(M)
    if np.min(np.abs(w)) <= CLUSTER_TOL:
        raise ValueError(f"{what} is singular")
    return w, Q


def _relative(residual: float, M: np.ndarray, power: int = 1) -> float:
    """Residual scaled by the entry size of the matrices it was computed from."""
    return residual / max(1.0, float(np.max(np.abs(M)))) ** power


def hermitian_congruence(A: CArray, tol: float = DEFAULT_TOL) -> tuple[CArray, int]:
    """h, p with A = h S_p conj(h)^t; p is the number of positive eigenvalues."""
    _square(A, "hermitian_congruence")
    Af = A.to_float()
    if not is_hermitian(Af, tol):
        raise ValueError("hermitian_congruence needs a hermitian matrix")
    w, Q = _eigh(Af.to_complex(), "matrix")
    order = np.argsort(-w, kind="stable")
    h = Q[:, order] * np.sqrt(np.abs(w[order]))
    p = int(np.sum(w > 0))
    return CArray.from_float(h), p


def _tau(v: np.ndarray, J: np.ndarray) -> np.ndarray:
    return -J @ v.conj()


def _tau_pairs(E: np.ndarray, J: np.ndarray) -> list[np.ndarray]:
    """Orthonormal u_1..u_r with {u_k, tau(u_k)} an orthonormal basis of span(E).

    span(E) must be tau-invariant; tau^2 = -1 there.
    """
    chosen: list[np.ndarray] = []
    frame: list[np.ndarray] = []
    for col in E.T:
        v = col.copy()
        for _ in range(2):
            for w in frame:
                v = v - w * np.vdot(w, v)
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            u = v / norm
            chosen.append(u)
            frame += [u, _tau(u, J)]
        if len(frame) >= E.shape[1]:
            break
    if len(frame) != E.shape[1]:
        raise ValueError("eigenspace of a unit eigenvalue has no symplectic frame")
    return chosen


def _assemble(firsts: list[np.ndarray], scale: np.ndarray, J: np.ndarray) -> np.ndarray:
    U1 = np.column_stack(firsts)
    U2 = np.column_stack([_tau(u, J) for u in firsts])
    return np.hstack([U1 * scale, U2 / scale])


def _require_symplectic_input(H: CArray, tol: float) -> tuple[np.ndarray, int]:
    size = _square(H, "symplectic factorization")
    if size % 2:
        raise ValueError(f"symplectic factorization needs an even size, got {size}")
    Hf = H.to_float()
    if not is_symplectic(Hf, tol):
        raise ValueError("H must be symplectic (H^t J H = J)")
    return Hf.to_complex(), size // 2


def symplectic_hermitian_factor(H: CArray, tol: float = DEFAULT_TOL) -> tuple[CArray, int]:
    """Symplectic V and p with H = V H^{2n}_p conj(V)^t.

    Eigenvectors of H pair as (v, tau v) with tau v = -J conj(v) and
    eigenvalues (lambda, 1/lambda); eigenspaces of +-1 get a tau-adapted
    orthonormal frame.
    """
    M, n = _require_symplectic_input(H, tol)
    if not is_hermitian(H.to_float(), tol):
        raise ValueError("H must be hermitian")
    J = make_J(2 * n).to_complex()
    w, Q = _eigh(M, "H")
    values: list[float] = []
    firsts: list[np.ndarray] = []
    for k in np.flatnonzero(np.abs(w) > 1 + CLUSTER_TOL):
        values.append(float(w[k]))
        firsts.append(Q[:, k])
    for unit in (1.0, -1.0):
        cluster = np.flatnonzero(np.abs(w - unit) <= CLUSTER_TOL)
        if len(cluster):
            for u in _tau_pairs(Q[:, cluster], J):
                values.append(unit)
                firsts.append(u)
    if len(firsts) != n:
        raise ValueError(f"eigenvalue pairing failed: {len(firsts)} of {n} pairs found")
    order = sorted(range(n), key=lambda k: -values[k])
    delta = np.array([values[k] for k in order])
    V = _assemble([firsts[k] for k in order], np.sqrt(np.abs(delta)), J)
    p = int(np.sum(delta > 0))
    logger.info(f"symplectic hermitian factor: 2n={2 * n}, p={p}")
    return CArray.from_float(V), p


def symplectic_antihermitian_factor(H: CArray, tol: float = DEFAULT_TOL) -> CArray:
    """Symplectic V with H = i V S^{2n}_n conj(V)^t.

    K = -iH is hermitian and pairs eigenvalues (lambda, -1/lambda) through tau,
    so the positive eigenvectors and their tau images form the frame.
    """
    M, n = _require_symplectic_input(H, tol)
    if not is_antihermitian(H.to_float(), tol):
        raise ValueError("H must be anti-hermitian")
    J = make_J(2 * n).to_complex()
    w, Q = _eigh(-1j * M, "H")
    positive = np.flatnonzero(w > 0)
    if len(positive) != n:
        raise ValueError(f"expected {n} positive eigenvalues of -iH, got {len(positive)}")
    V = _assemble([Q[:, k] for k in positive], np.sqrt(w[positive]), J)
    return CArray.from_float(V)


def factorize(kind: FactorKind, M: CArray, tol: float = DEFAULT_TOL) -> FactorReport:
    """Run one factorization and measure its defining-equation residuals."""
    target = M.to_complex()
    symplectic_residual = None
    if kind == "hermitian":
        h, p = hermitian_congruence(M, tol)
        F = h.to_complex()
        middle = make_S(M.shape[0], p).to_complex()
    elif kind == "symplectic-hermitian":
        V, p = symplectic_hermitian_factor(M, tol)
        F = V.to_complex()
        middle = make_H(M.shape[0], p).to_complex()
    elif kind == "symplectic-antihermitian":
        V = symplectic_antihermitian_factor(M, tol)
        F, p = V.to_complex(), None
        middle = 1j * make_S(M.shape[0], M.shape[0] // 2).to_complex()
    else:
        raise ValueError(f"Unsupported factorization: {kind}")
    residual = _relative(float(np.max(np.abs(F @ middle @ F.conj().T - target))), F, 2)
    if kind != "hermitian":
        J = make_J(M.shape[0]).to_complex()
        symplectic_residual = _relative(float(np.max(np.abs(F.T @ J @ F - J))), F, 2)
    passed = residual <= tol and (symplectic_residual is None or symplectic_residual <= tol)
    return FactorReport(
        kind=kind,
        factor=CArray.from_float(F).to_json(),
        signature=p,
        residual=residual,
        symplectic_residual=symplectic_residual,
        passed=passed,
    )


def _floated(T: TriSystem) -> TriSystem:
    return TriSystem.from_structure(
        T.structure.to_float(), T.structure_i.to_float(), T.slot2, T.label, DEFAULT_TOL
    )


def intertwining_residual(source: TriSystem, target: TriSystem, F: CArray) -> float:
    """max |F[a,b,c] - [Fa,Fb,Fc]| over basis triples, slot 2 also scaled by i."""
    if F.shape != (target.dim, source.dim):
        raise ValueError(f"map of shape {F.shape} does not fit {source.label} -> {target.label}")
    if not (F.is_exact and source.mode == "exact" and target.mode == "exact"):
        source, target, F = _floated(source), _floated(target), F.to_float()
    worst = 0.0
    for i, j, k in product(range(source.dim), repeat=3):
        for scale in (1, I_UNIT):
            a, b, c = source.basis(i), source.basis(j).scale(scale), source.basis(k)
            lhs = F @ source(a, b, c)
            rhs = target(F @ a, F @ b, F @ c)
            worst = max(worst, lhs.max_deviation(rhs))
    return worst


def _witness(
    source: TriSystem,
    target: TriSystem,
    F: CArray,
    tol: float,
    branch_choices: dict[str, Any],
) -> WitnessReport:
    residual = intertwining_residual(source, target, F)
    report = WitnessReport(
        source=source.label,
        target=target.label,
        map=F.to_json(),
        residual=residual,
        branch_choices=branch_choices,
        passed=residual <= tol,
    )
    logger.info(f"witness {source.label} -> {target.label}: residual {residual:.3g}")
    return report


def iso_a3_star(A: CArray, B: CArray, lam: Any, tol: float = 1e-8) -> WitnessReport:
    """A^3(m,n;*) with (A, B, lam) -> A^3(m,n;t)_{ph,C_{p,q}} via f(u) = k u h^-1.

    mu = lam^(-1/2) (principal branch) makes mu A and mu B hermitian; p and q
    count their positive eigenvalues.
    """
    source = build_a3_star(A, B, lam, 0.0 if A.is_exact and B.is_exact else tol)
    n, m = A.shape[0], B.shape[0]
    mu = cmath.sqrt(1 / to_complex(lam))
    g_a, p = hermitian_congruence(A.to_float().scale(mu), tol)
    g_b, q = hermitian_congruence(B.to_float().scale(mu), tol)
    F = g_b.inverse().kron(g_a.T)
    target = build_a3t_ph(m, n, p, q)
    return _witness(
        source,
        target,
        F,
        tol,
        {"mu": [mu.real, mu.imag], "branch": "principal", "p": p, "q": q},
    )


def iso_a3n(A: CArray, tol: float = 1e-8) -> WitnessReport:
    """[.,.,.]_A -> A^3(n)+ via f(u) = u A, i.e. A = hk with h = A, k = I."""
    n = _square(A, "iso_a3n")
    source = build_a3n_psi(A, 0.0 if A.is_exact else tol)
    target = build_a3n(n, 1, A.mode)
    F = CArray.identity(n, A.mode).kron(A.T)
    return _witness(source, target, F, tol, {"h": "A", "k": "I"})


def iso_c3(H: CArray, alpha: Any, tol: float = 1e-8) -> WitnessReport:
    """C^3(2n, H; alpha) -> C^3(2n, H_p; +-1) or C^3(2n, iS; +-i) via f(u) = s u V.

    H = V H0 conj(V)^t with V symplectic and s = sqrt|alpha|.
    """
    two_n = _square(H, "iso_c3")
    source = build_c3_H_alpha(two_n, H, alpha, 0.0 if H.is_exact else tol)
    value = to_complex(alpha)
    s = float(np.sqrt(abs(value)))
    if is_hermitian(H.to_float(), tol):
        V, p = symplectic_hermitian_factor(H, tol)
        sign = 1 if value.real > 0 else -1
        target = build_c3_ph_cp(two_n, p, sign)
        branches: dict[str, Any] = {"variant": "hermitian", "p": p, "sign": sign}
    else:
        V = symplectic_antihermitian_factor(H, tol)
        sign = 1 if value.imag > 0 else -1
        target = build_c3_is(two_n, sign)
        branches = {"variant": "antihermitian", "sign": sign}
    branches["s"] = s
    return _witness(source, target, V.T.scale(s), tol, branches)
