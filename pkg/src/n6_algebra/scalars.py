"""Scalars, dense complex arrays and the constant matrices S, J and H.

Two backends share one array type:

* ``exact``: Gaussian rationals. An array stores integer numerators for the real
  and imaginary parts (numpy object arrays of Python ints) over one positive
  common denominator, normalized so the gcd of everything is 1.
* ``float``: complex128 numpy arrays, used where eigenvalues are required.

Mixing an exact array with a float array raises ``TypeError``.
"""

from __future__ import annotations

import logging
import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import chain
from typing import Any, Literal, Optional, Sequence, Union

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)

Backend = Literal["exact", "float"]
Rational = Union[int, Fraction]

# Products of int64 entries are only used below this bound.
_INT64_SAFE = 2**62


class GaussRat:
    """Exact complex number (a + b i) / d with integers a, b and d > 0."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        if not isinstance(re, (numbers.Integral, Fraction)) or not isinstance(
            im, (numbers.Integral, Fraction)
        ):
            raise TypeError(
                f"GaussRat needs int or Fraction parts, got {type(re).__name__} "
                f"and {type(im).__name__}"
            )
        re_f = Fraction(re if isinstance(re, Fraction) else int(re))
        im_f = Fraction(im if isinstance(im, Fraction) else int(im))
        d = re_f.denominator * im_f.denominator
        d //= math.gcd(re_f.denominator, im_f.denominator)
        self._a = re_f.numerator * (d // re_f.denominator)
        self._b = im_f.numerator * (d // im_f.denominator)
        self._d = d

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> GaussRat:
        if d == 0:
            raise ZeroDivisionError("GaussRat denominator is zero")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def coerce(cls, value: Any) -> Optional[GaussRat]:
        """Return ``value`` as a GaussRat, or None for non-exact values."""
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, numbers.Integral):
            return cls._make(int(value), 0, 1)
        if isinstance(value, Fraction):
            return cls._make(value.numerator, 0, value.denominator)
        return None

    @property
    def parts(self) -> tuple[int, int, int]:
        return self._a, self._b, self._d

    @property
    def real(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._b, self._d)

    def conjugate(self) -> GaussRat:
        return GaussRat._make(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def inverse(self) -> GaussRat:
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat._make(self._d * self._a, -self._d * self._b, n)

    def sqrt(self) -> Optional[GaussRat]:
        """Principal square root (real part > 0, or = 0 with imag >= 0).

        Returns None when the root is not a Gaussian rational.
        """
        r = _fraction_sqrt(self.abs2())
        if r is None:
            return None
        x, y = self.real, self.imag
        u = _fraction_sqrt((r + x) / 2)
        if u is None:
            return None
        if u != 0:
            return GaussRat(u, y / (2 * u))
        v = _fraction_sqrt((r - x) / 2)
        if v is None:
            return None
        return GaussRat(0, v)

    def __add__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        return GaussRat._make(a * o._d + o._a * d, b * o._d + o._b * d, d * o._d)

    __radd__ = __add__

    def __neg__(self) -> GaussRat:
        return GaussRat._make(-self._a, -self._b, self._d)

    def __sub__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._a, self._b
        return GaussRat._make(a * o._a - b * o._b, a * o._b + b * o._a, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> GaussRat:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> GaussRat:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussRat._make(1, 0, 1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        o = GaussRat.coerce(other)
        if o is None:
            return NotImplemented
        return (self._a, self._b, self._d) == (o._a, o._b, o._d)

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self) -> str:
        return f"GaussRat({self})"

    def __str__(self) -> str:
        re_part, im_part = self.real, self.imag
        if im_part == 0:
            return str(re_part)
        if im_part == 1:
            im_text = "i"
        elif im_part == -1:
            im_text = "-i"
        else:
            im_text = f"{im_part}i"
        if re_part == 0:
            return im_text
        sign = "" if im_text.startswith("-") else "+"
        return f"{re_part}{sign}{im_text}"

    def to_json(self) -> list[int]:
        re_part, im_part = self.real, self.imag
        return [
            re_part.numerator,
            re_part.denominator,
            im_part.numerator,
            im_part.denominator,
        ]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> GaussRat:
        if len(data) != 4:
            raise ValueError(f"exact scalar needs 4 integers, got {list(data)}")
        return cls(Fraction(data[0], data[1]), Fraction(data[2], data[3]))

    @classmethod
    def parse(cls, text: str) -> GaussRat:
        """Parse ``a/b+c/di`` style text, e.g. ``3/5+4/5i``, ``-i`` or ``2``."""
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty scalar")
        tokens = re.findall(r"[+-]?[^+-]+|[+-]$", cleaned)
        if "".join(tokens) != cleaned:
            raise ValueError(f"cannot parse scalar '{text}'")
        re_part, im_part = Fraction(0), Fraction(0)
        try:
            for token in tokens:
                if token.endswith(("i", "j")):
                    coef = token[:-1]
                    if coef in ("", "+"):
                        im_part += 1
                    elif coef == "-":
                        im_part -= 1
                    else:
                        im_part += Fraction(coef)
                else:
                    re_part += Fraction(token)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"cannot parse scalar '{text}': {e}") from e
        return cls(re_part, im_part)


Scalar = Union[GaussRat, complex]

ZERO = GaussRat(0)
ONE = GaussRat(1)
I_UNIT = GaussRat(0, 1)


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def exact(value: Any) -> GaussRat:
    """Coerce an int, Fraction or GaussRat to GaussRat."""
    g = GaussRat.coerce(value)
    if g is None:
        raise TypeError(f"expected an exact scalar, got {type(value).__name__}")
    return g


def to_complex(value: Any) -> complex:
    return complex(value)


def conj(value: Any) -> Any:
    g = GaussRat.coerce(value)
    if g is not None:
        return g.conjugate()
    return complex(value).conjugate()


def parse_scalar(text: str, mode: Backend = "exact") -> Scalar:
    """Parse a command-line scalar: ``a/b+c/di`` exact, decimals for float."""
    if mode == "float":
        try:
            return complex(text.replace(" ", "").replace("i", "j"))
        except ValueError:
            return complex(GaussRat.parse(text))
    return GaussRat.parse(text)


def scalar_to_json(value: Scalar) -> list[Any]:
    g = GaussRat.coerce(value)
    if g is not None:
        return g.to_json()
    c = complex(value)
    return [c.real, c.imag]


def scalar_from_json(data: Sequence[Any]) -> Scalar:
    if len(data) == 4:
        return GaussRat.from_json([int(v) for v in data])
    if len(data) == 2:
        return complex(float(data[0]), float(data[1]))
    raise ValueError(f"scalar JSON must have 2 or 4 entries, got {list(data)}")


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(abs(int(v)) for v in arr.flat)


def _int_tensordot(x: np.ndarray, y: np.ndarray, axes: Any) -> np.ndarray:
    """Integer tensordot, run in int64 whenever no overflow is possible."""
    if isinstance(axes, int):
        contracted = int(np.prod(x.shape[x.ndim - axes :])) if axes else 1
    else:
        contracted = int(np.prod([x.shape[k] for k in axes[0]]))
    bound = _max_abs(x) * _max_abs(y) * max(contracted, 1)
    if bound < _INT64_SAFE // 2:
        result = np.tensordot(x.astype(np.int64), y.astype(np.int64), axes)
        return np.asarray(result).astype(object)
    return np.asarray(np.tensordot(x, y, axes), dtype=object)


def _as_int_array(values: Any) -> np.ndarray:
    arr = np.array(values, dtype=object)
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


class CArray:
    """Dense complex n-dimensional array over one of the two backends."""

    __slots__ = ("_den", "_im", "_mode", "_re", "_val")

    def __init__(self) -> None:
        raise TypeError("use CArray.exact, CArray.from_float or CArray.from_scalars")

    @classmethod
    def _new_exact(cls, re_arr: np.ndarray, im_arr: np.ndarray, den: int) -> CArray:
        if den == 0:
            raise ZeroDivisionError("CArray denominator is zero")
        if den < 0:
            re_arr, im_arr, den = -re_arr, -im_arr, -den
        re_arr = np.asarray(re_arr, dtype=object)
        im_arr = np.asarray(im_arr, dtype=object)
        if den != 1:
            g = den
            for v in chain(re_arr.flat, im_arr.flat):
                g = math.gcd(g, int(v))
                if g == 1:
                    break
            if g > 1:
                re_arr, im_arr, den = re_arr // g, im_arr // g, den // g
        # 0-d object arithmetic decays to plain ints
        re_arr = np.asarray(re_arr, dtype=object)
        im_arr = np.asarray(im_arr, dtype=object)
        obj = object.__new__(cls)
        obj._mode = "exact"
        obj._re, obj._im, obj._den = re_arr, im_arr, den
        obj._val = None
        return obj

    @classmethod
    def exact(cls, re_part: Any, im_part: Any = None, den: int = 1) -> CArray:
        """Exact array with integer numerators over a common denominator."""
        re_arr = _as_int_array(re_part)
        im_arr = (
            np.zeros(re_arr.shape, dtype=object)
            if im_part is None
            else _as_int_array(im_part)
        )
        if re_arr.shape != im_arr.shape:
            raise ValueError(
                f"real/imag shapes differ: {re_arr.shape} vs {im_arr.shape}"
            )
        return cls._new_exact(re_arr, im_arr, int(den))

    @classmethod
    def from_float(cls, values: Any) -> CArray:
        obj = object.__new__(cls)
        obj._mode = "float"
        obj._val = np.array(values, dtype=np.complex128)
        obj._re = obj._im = None
        obj._den = 1
        return obj

    @classmethod
    def from_scalars(cls, values: Any, mode: Optional[Backend] = None) -> CArray:
        """Build from nested lists of GaussRat/int/Fraction/complex entries."""
        arr = np.array(values, dtype=object)
        flat = list(arr.flat)
        if mode is None:
            mode = "exact" if all(GaussRat.coerce(v) is not None for v in flat) else "float"
        if mode == "float":
            return cls.from_float(
                np.array([complex(v) for v in flat], dtype=np.complex128).reshape(
                    arr.shape
                )
            )
        exact_vals = [exact(v) for v in flat]
        den = reduce(_lcm, (g.parts[2] for g in exact_vals), 1)
        re_arr = np.array(
            [g.parts[0] * (den // g.parts[2]) for g in exact_vals], dtype=object
        ).reshape(arr.shape)
        im_arr = np.array(
            [g.parts[1] * (den // g.parts[2]) for g in exact_vals], dtype=object
        ).reshape(arr.shape)
        return cls._new_exact(re_arr, im_arr, den)

    @classmethod
    def zeros(cls, shape: Any, mode: Backend = "exact") -> CArray:
        if mode == "float":
            return cls.from_float(np.zeros(shape, dtype=np.complex128))
        z = np.zeros(shape, dtype=np.int64).astype(object)
        return cls._new_exact(z, z.copy(), 1)

    @classmethod
    def identity(cls, n: int, mode: Backend = "exact") -> CArray:
        if mode == "float":
            return cls.from_float(np.eye(n, dtype=np.complex128))
        return cls.exact(np.eye(n, dtype=np.int64))

    @classmethod
    def diag(cls, values: Sequence[Any], mode: Optional[Backend] = None) -> CArray:
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_scalars(rows, mode)

    @classmethod
    def unit(cls, n: int, index: int, mode: Backend = "exact") -> CArray:
        """Standard basis vector e_index of length n."""
        if mode == "float":
            v = np.zeros(n, dtype=np.complex128)
            v[index] = 1
            return cls.from_float(v)
        v = np.zeros(n, dtype=np.int64)
        v[index] = 1
        return cls.exact(v)

    @classmethod
    def stack(cls, arrays: Sequence[CArray], axis: int = 0) -> CArray:
        if not arrays:
            raise ValueError("cannot stack an empty sequence")
        mode = _common_mode(*arrays)
        if mode == "float":
            return cls.from_float(np.stack([a._val for a in arrays], axis=axis))
        den = reduce(_lcm, (a._den for a in arrays), 1)
        re_arr = np.stack([a._re * (den // a._den) for a in arrays], axis=axis)
        im_arr = np.stack([a._im * (den // a._den) for a in arrays], axis=axis)
        return cls._new_exact(re_arr, im_arr, den)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[CArray]]) -> CArray:
        """2-D block matrix, like ``numpy.block``."""
        flat = [b for row in blocks for b in row]
        mode = _common_mode(*flat)
        if mode == "float":
            return cls.from_float(np.block([[b._val for b in row] for row in blocks]))
        den = reduce(_lcm, (b._den for b in flat), 1)
        re_arr = np.block([[b._re * (den // b._den) for b in row] for row in blocks])
        im_arr = np.block([[b._im * (den // b._den) for b in row] for row in blocks])
        return cls._new_exact(
            np.asarray(re_arr, dtype=object), np.asarray(im_arr, dtype=object), den
        )

    @property
    def mode(self) -> Backend:
        return self._mode  # type: ignore[no-any-return]

    @property
    def is_exact(self) -> bool:
        return self._mode == "exact"

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self._re.shape if self.is_exact else self._val.shape)

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def numerators(self) -> tuple[np.ndarray, np.ndarray, int]:
        """Exact backend internals: (real numerators, imag numerators, den)."""
        if not self.is_exact:
            raise TypeError("float arrays have no integer numerators")
        return self._re, self._im, self._den

    def to_complex(self) -> np.ndarray:
        if not self.is_exact:
            return np.array(self._val, copy=True)
        re_f = np.array([float(Fraction(int(v), self._den)) for v in self._re.flat])
        im_f = np.array([float(Fraction(int(v), self._den)) for v in self._im.flat])
        return (re_f + 1j * im_f).reshape(self.shape)

    def to_float(self) -> CArray:
        return CArray.from_float(self.to_complex())

    def with_mode(self, mode: Backend) -> CArray:
        if mode == self.mode:
            return self
        if mode == "float":
            return self.to_float()
        raise TypeError("a float array cannot be promoted to the exact backend")

    def __getitem__(self, index: Any) -> Any:
        if not self.is_exact:
            sub = self._val[index]
            if np.ndim(sub) == 0:
                return complex(sub)
            return CArray.from_float(sub)
        sub_re, sub_im = self._re[index], self._im[index]
        if np.ndim(sub_re) == 0:
            return GaussRat._make(int(sub_re), int(sub_im), self._den)
        return CArray._new_exact(
            np.array(sub_re, dtype=object), np.array(sub_im, dtype=object), self._den
        )

    def tolist(self) -> list[Any]:
        def build(prefix: tuple[int, ...]) -> Any:
            depth = len(prefix)
            if depth == self.ndim:
                return self[prefix]
            return [build((*prefix, k)) for k in range(self.shape[depth])]

        return build(())  # type: ignore[no-any-return]

    def _binary(self, other: CArray, sign: int) -> CArray:
        if not isinstance(other, CArray):
            return NotImplemented
        mode = _common_mode(self, other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        if mode == "float":
            return CArray.from_float(self._val + sign * other._val)
        den = _lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        return CArray._new_exact(
            self._re * fa + sign * other._re * fb,
            self._im * fa + sign * other._im * fb,
            den,
        )

    def __add__(self, other: CArray) -> CArray:
        return self._binary(other, 1)

    def __sub__(self, other: CArray) -> CArray:
        return self._binary(other, -1)

    def __neg__(self) -> CArray:
        if not self.is_exact:
            return CArray.from_float(-self._val)
        return CArray._new_exact(-self._re, -self._im, self._den)

    def scale(self, factor: Any) -> CArray:
        """Multiply every entry by a scalar."""
        g = GaussRat.coerce(factor)
        if not self.is_exact:
            return CArray.from_float(self._val * complex(factor))
        if g is None:
            raise TypeError(
                "cannot scale an exact array by a float scalar; convert with to_float()"
            )
        a, b, d = g.parts
        return CArray._new_exact(
            a * self._re - b * self._im, a * self._im + b * self._re, self._den * d
        )

    def __mul__(self, factor: Any) -> CArray:
        if isinstance(factor, CArray):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def multiply_int(self, factors: np.ndarray) -> CArray:
        """Entrywise product with a broadcastable integer array (e.g. signs)."""
        if not self.is_exact:
            return CArray.from_float(self._val * factors)
        f = np.asarray(factors).astype(object)
        return CArray._new_exact(
            np.broadcast_to(self._re * f, self.shape).copy(),
            np.broadcast_to(self._im * f, self.shape).copy(),
            self._den,
        )

    def times_i(self) -> CArray:
        if not self.is_exact:
            return CArray.from_float(1j * self._val)
        return CArray._new_exact(-self._im, self._re.copy(), self._den)

    def conj(self) -> CArray:
        if not self.is_exact:
            return CArray.from_float(np.conj(self._val))
        return CArray._new_exact(self._re.copy(), -self._im, self._den)

    def real_part(self) -> CArray:
        if not self.is_exact:
            return CArray.from_float(self._val.real.astype(np.complex128))
        return CArray._new_exact(self._re.copy(), np.zeros_like(self._im), self._den)

    def imag_part(self) -> CArray:
        if not self.is_exact:
            return CArray.from_float(self._val.imag.astype(np.complex128))
        return CArray._new_exact(self._im.copy(), np.zeros_like(self._re), self._den)

    def transpose(self, *axes: int) -> CArray:
        order = axes or None
        if not self.is_exact:
            return CArray.from_float(np.transpose(self._val, order))
        return CArray._new_exact(
            np.transpose(self._re, order), np.transpose(self._im, order), self._den
        )

    @property
    def T(self) -> CArray:
        return self.transpose()

    def adjoint(self) -> CArray:
        """Conjugate transpose of a matrix."""
        return self.conj().T

    def reshape(self, *shape: Any) -> CArray:
        if not self.is_exact:
            return CArray.from_float(self._val.reshape(*shape))
        return CArray._new_exact(
            self._re.reshape(*shape), self._im.reshape(*shape), self._den
        )

    def tensordot(self, other: CArray, axes: Any = 2) -> CArray:
        mode = _common_mode(self, other)
        if mode == "float":
            return CArray.from_float(np.tensordot(self._val, other._val, axes))
        rr = _int_tensordot(self._re, other._re, axes)
        ii = _int_tensordot(self._im, other._im, axes)
        ri = _int_tensordot(self._re, other._im, axes)
        ir = _int_tensordot(self._im, other._re, axes)
        return CArray._new_exact(rr - ii, ri + ir, self._den * other._den)

    def __matmul__(self, other: CArray) -> CArray:
        if not isinstance(other, CArray):
            return NotImplemented
        if self.shape[-1] != other.shape[0]:
            raise ValueError(f"cannot multiply shapes {self.shape} and {other.shape}")
        return self.tensordot(other, axes=1)

    def kron(self, other: CArray) -> CArray:
        mode = _common_mode(self, other)
        if mode == "float":
            return CArray.from_float(np.kron(self._val, other._val))
        return CArray._new_exact(
            np.kron(self._re, other._re) - np.kron(self._im, other._im),
            np.kron(self._re, other._im) + np.kron(self._im, other._re),
            self._den * other._den,
        )

    def _square_rows(self) -> list[list[GaussRat]]:
        if self.ndim != 2 or self.shape[0] != self.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {self.shape}")
        return [[self[i, j] for j in range(self.shape[1])] for i in range(self.shape[0])]

    def inverse(self) -> CArray:
        """Matrix inverse; raises ValueError on singular input."""
        if not self.is_exact:
            try:
                return CArray.from_float(scipy.linalg.inv(self._val))
            except (np.linalg.LinAlgError, ValueError) as e:
                raise ValueError(f"matrix is singular: {e}") from e
        rows = self._square_rows()
        n = len(rows)
        aug = [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = aug[col][col].inverse()
            aug[col] = [v * inv_p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return CArray.from_scalars([row[n:] for row in aug], "exact")

    def det(self) -> Scalar:
        if not self.is_exact:
            return complex(np.linalg.det(self._val))
        rows = self._square_rows()
        n = len(rows)
        result = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col]), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                result = -result
            p = rows[col][col]
            result = result * p
            inv_p = p.inverse()
            for r in range(col + 1, n):
                if rows[r][col]:
                    f = rows[r][col] * inv_p
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return result

    def is_zero(self, tol: float = 0.0) -> bool:
        if not self.is_exact:
            return bool(self._val.size == 0 or np.max(np.abs(self._val)) <= tol)
        return not (np.any(self._re != 0) or np.any(self._im != 0))

    def first_nonzero(self, tol: float = 0.0) -> Optional[tuple[int, ...]]:
        if not self.is_exact:
            hits = np.argwhere(np.abs(self._val) > tol)
        else:
            hits = np.argwhere((self._re != 0) | (self._im != 0))
        if len(hits) == 0:
            return None
        return tuple(int(k) for k in hits[0])

    def equals(self, other: CArray, tol: float = 0.0) -> bool:
        if self.shape != other.shape:
            return False
        if self.is_exact and other.is_exact:
            return (
                self._den == other._den
                and bool(np.all(self._re == other._re))
                and bool(np.all(self._im == other._im))
            )
        return self.max_deviation(other) <= tol

    def max_deviation(self, other: CArray) -> float:
        if self.is_exact and other.is_exact:
            diff = self - other
            if diff.is_zero():
                return 0.0
            return float(np.max(np.abs(diff.to_complex())))
        return float(np.max(np.abs(self.to_complex() - other.to_complex()), initial=0.0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CArray):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def realify(self) -> list[Fraction]:
        """Exact vector -> real coordinates (real parts, then imaginary parts)."""
        if not self.is_exact or self.ndim != 1:
            raise ValueError("realify needs an exact 1-D array")
        return [Fraction(int(v), self._den) for v in chain(self._re.flat, self._im.flat)]

    @classmethod
    def from_realified(cls, values: Sequence[Fraction]) -> CArray:
        n = len(values) // 2
        entries = [GaussRat(Fraction(values[k]), Fraction(values[n + k])) for k in range(n)]
        return cls.from_scalars(entries, "exact")

    def to_json(self) -> dict[str, Any]:
        """Matrix JSON; 1-D arrays are written as one row."""
        mat = self.reshape(1, -1) if self.ndim == 1 else self
        if mat.ndim != 2:
            raise ValueError(f"only vectors and matrices have a JSON form, got {self.shape}")
        rows, cols = mat.shape
        if mat.is_exact:
            data = [mat[i, j].to_json() for i in range(rows) for j in range(cols)]
        else:
            data = [
                [float(mat._val[i, j].real), float(mat._val[i, j].imag)]
                for i in range(rows)
                for j in range(cols)
            ]
        return {"mode": mat.mode, "rows": rows, "cols": cols, "data": data}

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> CArray:
        try:
            mode, rows, cols = payload["mode"], int(payload["rows"]), int(payload["cols"])
            data = payload["data"]
        except KeyError as e:
            raise ValueError(f"matrix JSON is missing field {e}") from e
        if len(data) != rows * cols:
            raise ValueError(f"matrix JSON has {len(data)} entries, expected {rows * cols}")
        if mode == "exact":
            entries = [GaussRat.from_json(e) for e in data]
        elif mode == "float":
            entries = [complex(e[0], e[1]) for e in data]
        else:
            raise ValueError(f"unknown matrix mode '{mode}'")
        grid = [entries[r * cols : (r + 1) * cols] for r in range(rows)]
        return cls.from_scalars(grid, mode)

    def __repr__(self) -> str:
        return f"CArray(mode={self.mode}, shape={self.shape})"


MatC = CArray


def _common_mode(*arrays: CArray) -> Backend:
    modes = {a.mode for a in arrays}
    if len(modes) > 1:
        raise TypeError("cannot mix exact and float arrays; convert with to_float()")
    return modes.pop()  # type: ignore[no-any-return]


@dataclass(frozen=True)
class ConjMap:
    """Linear or anti-linear map ``x -> mat @ conj(x)`` (conjugate first)."""

    mat: CArray
    antilinear: bool = True

    def apply(self, x: CArray) -> CArray:
        return self.mat @ (x.conj() if self.antilinear else x)

    def __call__(self, x: CArray) -> CArray:
        return self.apply(x)

    def compose(self, inner: ConjMap) -> ConjMap:
        """The map ``x -> self(inner(x))``."""
        inner_mat = inner.mat.conj() if self.antilinear else inner.mat
        return ConjMap(self.mat @ inner_mat, self.antilinear != inner.antilinear)

    def squared(self) -> ConjMap:
        return self.compose(self)

    def is_identity(self, tol: float = 0.0) -> bool:
        if self.antilinear:
            return False
        return self.mat.equals(CArray.identity(self.mat.shape[0], self.mat.mode), tol)

    @classmethod
    def identity(cls, n: int, mode: Backend = "exact") -> ConjMap:
        return cls(CArray.identity(n, mode), antilinear=False)


def make_S(n: int, p: int, mode: Backend = "exact") -> CArray:
    """S^n_p = diag(I_p, -I_{n-p})."""
    if n < 1 or not 0 <= p <= n:
        raise ValueError(f"make_S needs 0 <= p <= n and n >= 1, got n={n}, p={p}")
    return CArray.diag([1] * p + [-1] * (n - p), mode)


def make_J(two_n: int, mode: Backend = "exact") -> CArray:
    """J_{2n} = ((0, I_n), (-I_n, 0))."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"make_J needs an even positive size, got {two_n}")
    n = two_n // 2
    eye = np.eye(n, dtype=np.int64)
    zero = np.zeros((n, n), dtype=np.int64)
    grid = np.block([[zero, eye], [-eye, zero]])
    return CArray.exact(grid).with_mode(mode)


def make_H(two_n: int, p: int, mode: Backend = "exact") -> CArray:
    """H^{2n}_p = diag(S^n_p, S^n_p)."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"make_H needs an even positive size, got {two_n}")
    n = two_n // 2
    if not 0 <= p <= n:
        raise ValueError(f"make_H needs 0 <= p <= n, got n={n}, p={p}")
    signs = [1] * p + [-1] * (n - p)
    return CArray.diag(signs + signs, mode)


def _require_square(M: CArray, name: str) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} needs a square matrix, got shape {M.shape}")
    return M.shape[0]


def is_symplectic(M: CArray, tol: float = 0.0) -> bool:
    """True iff M^t J M = J, with tolerance ``tol`` on the float backend."""
    n = _require_square(M, "is_symplectic")
    if n % 2:
        raise ValueError(f"is_symplectic needs an even size, got {n}")
    J = make_J(n, M.mode)
    return (M.T @ J @ M).equals(J, tol)


def is_hermitian(M: CArray, tol: float = 0.0) -> bool:
    _require_square(M, "is_hermitian")
    return M.equals(M.adjoint(), tol)


def is_antihermitian(M: CArray, tol: float = 0.0) -> bool:
    _require_square(M, "is_antihermitian")
    return M.equals(-M.adjoint(), tol)
