"""Finite-dimensional Lie superalgebras with a short consistent grading.

Elements are coordinate vectors over a homogeneous basis. The structure
tensor ``c`` of shape (dim, dim, dim) gives [e_i, e_j] = sum_k c[i, j, k] e_k.
Matrix superalgebras keep their basis matrices (``MatrixRealization``) so that
conjugations can be written as matrix maps and turned into coordinate maps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Literal, Optional, Sequence, Union

import numpy as np

from .exact import ComplexSpan
from .models import CheckResult, ConjugationReport, Counterexample
from .scalars import (
    I_UNIT,
    CArray,
    ConjMap,
    is_antihermitian,
    is_hermitian,
    is_symplectic,
    make_H,
    make_S,
    scalar_to_json,
)

logger = logging.getLogger(__name__)

MatrixMap = Callable[[CArray], CArray]


def supercommutator(X: CArray, Y: CArray, px: int, py: int) -> CArray:
    """[X, Y] = XY - (-1)^(px py) YX for homogeneous matrices."""
    if px and py:
        return X @ Y + Y @ X
    return X @ Y - Y @ X


def _unit_matrix(size: int, i: int, j: int) -> CArray:
    grid = np.zeros((size, size), dtype=np.int64)
    grid[i, j] = 1
    return CArray.exact(grid)


class MatrixRealization:
    """Basis matrices of a matrix superalgebra, optionally modulo a central matrix."""

    def __init__(
        self, matrices: Sequence[CArray], split: int, quotient: Optional[CArray] = None
    ) -> None:
        self.matrices = list(matrices)
        self.split = split
        self.quotient = quotient
        self.size = self.matrices[0].shape[0]
        self._span = ComplexSpan(self.size * self.size)
        for M in self.matrices + ([quotient] if quotient is not None else []):
            if not self._span.add(M):
                raise ValueError("basis matrices are linearly dependent")

    def coordinates(self, M: CArray) -> CArray:
        coords = self._span.coordinates(M)
        if coords is None:
            raise ValueError("matrix lies outside the superalgebra")
        return coords[: len(self.matrices)]

    def element(self, x: CArray) -> CArray:
        """Matrix representative of the coordinate vector ``x``."""
        out = CArray.zeros((self.size, self.size))
        for k, M in enumerate(self.matrices):
            c = x[k]
            if c:
                out = out + M.scale(c)
        return out

    def blocks(self, X: CArray) -> tuple[CArray, CArray, CArray, CArray]:
        s = self.split
        return X[:s, :s], X[:s, s:], X[s:, :s], X[s:, s:]


class GradedLieSuper:
    """Lie superalgebra g = g_-1 + g_0 + g_1 given by structure constants."""

    def __init__(
        self,
        label: str,
        parity: Sequence[int],
        degree: Sequence[int],
        structure: CArray,
        realization: Optional[MatrixRealization] = None,
    ) -> None:
        d = len(parity)
        if len(degree) != d or structure.shape != (d, d, d):
            raise ValueError(
                f"structure of shape {structure.shape} does not match {d} basis vectors"
            )
        self.label = label
        self.parity = [int(p) for p in parity]
        self.degree = [int(k) for k in degree]
        self.structure = structure
        self.realization = realization

    @classmethod
    def from_matrices(
        cls,
        label: str,
        matrices: Sequence[CArray],
        parity: Sequence[int],
        degree: Sequence[int],
        split: int,
        quotient: Optional[CArray] = None,
    ) -> GradedLieSuper:
        realization = MatrixRealization(matrices, split, quotient)
        rows = []
        for i, X in enumerate(matrices):
            row = [
                realization.coordinates(supercommutator(X, Y, parity[i], parity[j]))
                for j, Y in enumerate(matrices)
            ]
            rows.append(CArray.stack(row))
        logger.info(f"{label}: structure constants over {len(matrices)} basis matrices")
        return cls(label, parity, degree, CArray.stack(rows), realization)

    @property
    def dim(self) -> int:
        return len(self.parity)

    def __repr__(self) -> str:
        return f"GradedLieSuper({self.label!r}, dims={self.dims})"

    def basis(self, index: int) -> CArray:
        return CArray.unit(self.dim, index)

    def component(self, k: int) -> list[int]:
        return [i for i, d in enumerate(self.degree) if d == k]

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.component(-1)), len(self.component(0)), len(self.component(1))

    def bracket(self, x: CArray, y: CArray) -> CArray:
        partial = x.tensordot(self.structure, axes=([0], [0]))
        return y.tensordot(partial, axes=([0], [0]))

    def ad(self, j: int) -> CArray:
        """Matrix of x -> [e_j, x]."""
        return self.structure[j].T

    def super_signs(self) -> np.ndarray:
        """(-1)^(p_i p_j) as an integer matrix."""
        p = np.array(self.parity, dtype=np.int64)
        return np.where(np.outer(p, p) == 1, -1, 1)

    def to_json(self) -> dict[str, Any]:
        re_arr, im_arr, _ = self.structure.numerators
        entries = []
        for hit in np.argwhere((re_arr != 0) | (im_arr != 0)):
            i, j, k = (int(v) for v in hit)
            entries.append([i, j, k, scalar_to_json(self.structure[i, j, k])])
        return {
            "label": self.label,
            "dim": self.dim,
            "parity": self.parity,
            "degree": self.degree,
            "structure": entries,
        }


def build_psl(m: int, n: int) -> GradedLieSuper:
    """sl(m,n) for m != n and psl(n,n) = sl(n,n)/CI, graded by the block shape.

    Basis order: lower-left units (degree -1, row-major over the n x m block),
    the even part, then upper-right units (degree 1, row-major over m x n).
    """
    if m < 1 or n < 1 or m + n < 2:
        raise ValueError(f"psl(m,n) needs m, n >= 1 and m + n >= 2, got ({m},{n})")
    size = m + n
    low = [_unit_matrix(size, m + i, j) for i in range(n) for j in range(m)]
    high = [_unit_matrix(size, i, m + j) for i in range(m) for j in range(n)]
    diagonal = []
    for k in range(size - 1):
        first, second = _unit_matrix(size, k, k), _unit_matrix(size, k + 1, k + 1)
        if k == m - 1:
            if m != n:
                diagonal.append(first + second)
        else:
            diagonal.append(first - second)
    off = [_unit_matrix(size, i, j) for i, j in product(range(m), repeat=2) if i != j]
    off += [
        _unit_matrix(size, m + i, m + j) for i, j in product(range(n), repeat=2) if i != j
    ]
    even = diagonal + off
    matrices = low + even + high
    parity = [1] * len(low) + [0] * len(even) + [1] * len(high)
    degree = [-1] * len(low) + [0] * len(even) + [1] * len(high)
    quotient = CArray.identity(size) if m == n else None
    label = f"psl({m},{n})" if m == n else f"sl({m},{n})"
    return GradedLieSuper.from_matrices(label, matrices, parity, degree, m, quotient)


def build_osp_2_2n(n: int) -> GradedLieSuper:
    """osp(2,2n) in block form with g_-1 = {beta, gamma in row 2}, g_1 = {row 1}.

    The odd coordinates of g_-1 and g_1 are the vectors (beta, gamma) in C^{2n}.
    """
    if n < 1:
        raise ValueError(f"osp(2,2n) needs n >= 1, got {n}")
    two_n = 2 * n
    size = 2 + two_n
    J = np.block(
        [
            [np.zeros((n, n), dtype=np.int64), np.eye(n, dtype=np.int64)],
            [-np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64)],
        ]
    )

    def odd(v: np.ndarray, row: int) -> CArray:
        grid = np.zeros((size, size), dtype=np.int64)
        grid[row, 2:] = v
        grid[2:, 1 - row] = J @ v
        return CArray.exact(grid)

    units = [np.eye(two_n, dtype=np.int64)[k] for k in range(two_n)]
    low = [odd(v, 1) for v in units]
    high = [odd(v, 0) for v in units]
    even = [CArray.diag([1, -1] + [0] * two_n)]
    symmetric = [np.outer(units[i], units[i]) for i in range(two_n)]
    symmetric += [
        np.outer(units[i], units[j]) + np.outer(units[j], units[i])
        for i in range(two_n)
        for j in range(i + 1, two_n)
    ]
    for S in symmetric:
        grid = np.zeros((size, size), dtype=np.int64)
        grid[2:, 2:] = -J @ S
        even.append(CArray.exact(grid))
    matrices = low + even + high
    parity = [1] * two_n + [0] * len(even) + [1] * two_n
    degree = [-1] * two_n + [0] * len(even) + [1] * two_n
    return GradedLieSuper.from_matrices(f"osp(2,{two_n})", matrices, parity, degree, 2)


def _vec_json(v: CArray) -> dict[str, Any]:
    return v.reshape(1, -1).to_json()


def check_super_jacobi(g: GradedLieSuper) -> CheckResult:
    """Super-anticommutativity and super-Jacobi on all basis pairs and triples.

    Jacobi is checked as [x,[y,z]] = [[x,y],z] + (-1)^(|x||y|) [y,[x,z]].
    """
    c = g.structure
    signs = g.super_signs()
    antisym = c + c.transpose(1, 0, 2).multiply_int(signs[:, :, None])
    hit = antisym.first_nonzero()
    if hit is not None:
        i, j, _ = hit
        return CheckResult(
            name="super_jacobi",
            status="fail",
            evaluations=g.dim**2,
            detail="super-anticommutativity",
            counterexample=Counterexample(
                check="super_antisym",
                inputs=[_vec_json(g.basis(i)), _vec_json(g.basis(j))],
                lhs=_vec_json(c[i, j]),
                rhs=_vec_json(-c[j, i].scale(int(signs[i, j]))),
                note=f"basis ({i}, {j})",
            ),
        )
    for i in range(g.dim):
        nested = c.tensordot(c[i], axes=([2], [0]))
        left = c[i].tensordot(c, axes=([1], [0]))
        right = c.tensordot(c[i], axes=([1], [1])).transpose(0, 2, 1)
        residual = nested - left - right.multiply_int(signs[i][:, None, None])
        hit = residual.first_nonzero()
        if hit is not None:
            j, k, _ = hit
            return CheckResult(
                name="super_jacobi",
                status="fail",
                evaluations=(i + 1) * g.dim**2,
                detail="super-Jacobi",
                counterexample=Counterexample(
                    check="super_jacobi",
                    inputs=[_vec_json(g.basis(v)) for v in (i, j, k)],
                    lhs=_vec_json(nested[j, k]),
                    rhs=_vec_json(left[j, k] + right[j, k].scale(int(signs[i, j]))),
                    note=f"basis ({i}, {j}, {k})",
                ),
            )
    logger.info(f"{g.label}: super-Jacobi holds on {g.dim ** 3} basis triples")
    return CheckResult(name="super_jacobi", status="pass", evaluations=g.dim**3)


def check_short_grading(g: GradedLieSuper) -> CheckResult:
    """Degrees in {-1, 0, 1}, parity = degree mod 2, [g_i, g_j] in g_(i+j)."""
    for i, (p, d) in enumerate(zip(g.parity, g.degree)):
        if d not in (-1, 0, 1) or p != d % 2:
            return CheckResult(
                name="short_grading",
                status="fail",
                detail=f"basis vector {i} has parity {p} and degree {d}",
            )
    re_arr, im_arr, _ = g.structure.numerators
    for i, j, k in np.argwhere((re_arr != 0) | (im_arr != 0)):
        if g.degree[k] != g.degree[i] + g.degree[j]:
            return CheckResult(
                name="short_grading",
                status="fail",
                detail=f"[e_{i}, e_{j}] has a component along e_{k} of degree {g.degree[k]}",
            )
    return CheckResult(name="short_grading", status="pass", evaluations=g.dim**2)


def check_span_property(g: GradedLieSuper) -> CheckResult:
    """[g_-1, g_1] = g_0, by complex rank."""
    span = ComplexSpan(g.dim, track=False)
    for i, j in product(g.component(-1), g.component(1)):
        span.add(g.structure[i, j])
    target = len(g.component(0))
    return CheckResult(
        name="span_property",
        status="pass" if span.rank == target else "fail",
        evaluations=len(g.component(-1)) * len(g.component(1)),
        detail=f"rank {span.rank} of dim g_0 = {target}",
    )


def is_simple_super(g: GradedLieSuper) -> bool:
    """No proper ideal is generated by a basis vector and the bracket is nonzero."""
    if g.structure.is_zero():
        return False
    ops = [g.ad(j) for j in range(g.dim)]
    for index in range(g.dim):
        span = ComplexSpan(g.dim, track=False)
        span.add(g.basis(index))
        queue = [g.basis(index)]
        while queue and not span.is_full:
            w = queue.pop()
            for op in ops:
                u = op @ w
                if span.add(u):
                    queue.append(u)
        if not span.is_full:
            logger.info(f"{g.label}: e_{index} generates an ideal of dimension {span.rank}")
            return False
    return True


@dataclass(frozen=True)
class GradedConj:
    """A (linear or anti-linear) map on the coordinates of a graded superalgebra."""

    map: ConjMap
    kind: str
    label: str


def conjugation_from_matrices(
    g: GradedLieSuper, fn: MatrixMap, kind: str, label: str, antilinear: bool = True
) -> GradedConj:
    """Coordinate map of a matrix map; ``fn`` conjugates its input itself when anti-linear."""
    if g.realization is None:
        raise ValueError(f"{g.label} has no matrix realization")
    columns = [g.realization.coordinates(fn(M)) for M in g.realization.matrices]
    return GradedConj(ConjMap(CArray.stack(columns, axis=1), antilinear), kind, label)


def sigma_tilde_1(X: CArray, split: int) -> CArray:
    """((a, b), (c, d)) -> ((-conj(a)^t, conj(c)^t), (-conj(b)^t, -conj(d)^t))."""
    s = split
    a, b, c, d = X[:s, :s], X[:s, s:], X[s:, :s], X[s:, s:]
    return CArray.block([[-a.adjoint(), c.adjoint()], [-b.adjoint(), -d.adjoint()]])


def ad_diag(X: CArray, A: CArray, B: CArray) -> CArray:
    """Ad diag(A, B) (X) = D X D^-1."""
    zero_ab = CArray.zeros((A.shape[0], B.shape[1]))
    zero_ba = CArray.zeros((B.shape[0], A.shape[1]))
    D = CArray.block([[A, zero_ab], [zero_ba, B]])
    return D @ X @ D.inverse()


def build_sigma_tilde_1(g: GradedLieSuper) -> GradedConj:
    if g.realization is None:
        raise ValueError(f"{g.label} has no matrix realization")
    split = g.realization.split
    return conjugation_from_matrices(
        g, lambda X: sigma_tilde_1(X, split), "sigma_tilde_1", "sigma~1"
    )


def build_conj_psl(
    m: int, n: int, p: int, q: int, g: Optional[GradedLieSuper] = None
) -> GradedConj:
    """Ad diag(S^m_p, S^n_q) o sigma~1 on psl(m,n)."""
    if not (0 <= p <= m and 0 <= q <= n):
        raise ValueError(f"build_conj_psl needs 0 <= p <= m and 0 <= q <= n, got p={p}, q={q}")
    g = g or build_psl(m, n)
    A, B = make_S(m, p), make_S(n, q)
    return conjugation_from_matrices(
        g,
        lambda X: ad_diag(sigma_tilde_1(X, m), A, B),
        "ad_sigma_tilde_1",
        f"Ad diag(S{m}_{p},S{n}_{q}) o sigma~1",
    )


def build_tau(n: int, sign: int, g: Optional[GradedLieSuper] = None) -> GradedConj:
    """tau_+-((a, b), (c, d)) = ((conj d, +-i conj c), (-+i conj b, conj a)) on psl(n,n)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    g = g or build_psl(n, n)
    factor = I_UNIT * sign

    def tau(X: CArray) -> CArray:
        a, b, c, d = X[:n, :n], X[:n, n:], X[n:, :n], X[n:, n:]
        return CArray.block(
            [[d.conj(), c.conj().scale(factor)], [b.conj().scale(-factor), a.conj()]]
        )

    return conjugation_from_matrices(g, tau, "tau", f"tau{'+' if sign == 1 else '-'}")


def build_conj_osp(
    n: int,
    variant: Literal["hermitian", "antihermitian"] = "hermitian",
    sign: int = 1,
    p: Optional[int] = None,
    H: Optional[CArray] = None,
    g: Optional[GradedLieSuper] = None,
) -> GradedConj:
    """Ad diag(+-A, H) o sigma~1 on osp(2,2n).

    hermitian: A = I_2, H = H^{2n}_p (default p = n);
    antihermitian: A = diag(i, -i), H = i S^{2n}_n.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    two_n = 2 * n
    if variant == "hermitian":
        A = CArray.identity(2)
        H = H if H is not None else make_H(two_n, n if p is None else p)
        if not is_hermitian(H):
            raise ValueError("H must be hermitian for the hermitian variant")
    elif variant == "antihermitian":
        A = CArray.diag([I_UNIT, -I_UNIT])
        H = H if H is not None else make_S(two_n, n).times_i()
        if not is_antihermitian(H):
            raise ValueError("H must be anti-hermitian for the antihermitian variant")
    else:
        raise ValueError(f"Unsupported osp conjugation variant: {variant}")
    if H.shape != (two_n, two_n) or not is_symplectic(H):
        raise ValueError(f"H must be a symplectic {two_n}x{two_n} matrix")
    g = g or build_osp_2_2n(n)
    signed = A.scale(sign)
    return conjugation_from_matrices(
        g,
        lambda X: ad_diag(sigma_tilde_1(X, 2), signed, H),
        f"osp_{variant}",
        f"Ad diag({'+' if sign == 1 else '-'}A,H) o sigma~1 ({variant})",
    )


def check_graded_conjugation(
    g: GradedLieSuper, conj: Union[GradedConj, ConjMap], label: Optional[str] = None
) -> ConjugationReport:
    """Automorphism on basis pairs, degree reversal and sigma^2 = (-1)^k on g_k."""
    sigma = conj.map if isinstance(conj, GradedConj) else conj
    name = label or (conj.label if isinstance(conj, GradedConj) else "sigma")
    S = sigma.mat
    if S.shape != (g.dim, g.dim):
        raise ValueError(f"conjugation of shape {S.shape} does not act on {g.label}")
    c = g.structure
    image = (c.conj() if sigma.antilinear else c).tensordot(S.T, axes=1)
    moved = S.tensordot(c, axes=([0], [0]))
    bracketed = S.tensordot(moved, axes=([0], [1])).transpose(1, 0, 2)
    residual = image - bracketed
    counterexample = None
    hit = residual.first_nonzero()
    automorphism = "pass" if hit is None else "fail"
    if hit is not None:
        i, j, _ = hit
        counterexample = Counterexample(
            check="automorphism",
            inputs=[_vec_json(g.basis(i)), _vec_json(g.basis(j))],
            lhs=_vec_json(image[i, j]),
            rhs=_vec_json(bracketed[i, j]),
            note=f"basis ({i}, {j})",
        )

    re_arr, im_arr, _ = S.numerators
    reversal = all(
        g.degree[a] == -g.degree[i] for a, i in np.argwhere((re_arr != 0) | (im_arr != 0))
    )
    expected = CArray.diag([(-1) ** abs(k) for k in g.degree])
    square = sigma.squared()
    square_ok = not square.antilinear and square.mat.equals(expected)
    report = ConjugationReport(
        label=name,
        antilinear=sigma.antilinear,
        automorphism=automorphism,
        degree_reversal="pass" if reversal else "fail",
        square="pass" if square_ok else "fail",
        counterexample=counterexample,
    )
    logger.info(f"{g.label} / {name}: passed={report.passed}")
    return report


def structure_from_superalgebra(g: GradedLieSuper, conj: GradedConj) -> dict[str, Any]:
    """JSON document with the structure tensor and the conjugation matrix."""
    return {
        "superalgebra": g.to_json(),
        "conjugation": {
            "label": conj.label,
            "kind": conj.kind,
            "antilinear": conj.map.antilinear,
            "matrix": conj.map.mat.to_json(),
        },
    }
