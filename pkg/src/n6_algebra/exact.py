"""Exact row reduction over the rationals.

``ExactSpan`` keeps a reduced row echelon basis of a growing span of rational
vectors, remembering how each echelon row was combined from the accepted
generators. Complex spaces are handled through their realification
(``CArray.realify``): a complex span is the real span of v and i*v.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional, Sequence

from .scalars import CArray, GaussRat

logger = logging.getLogger(__name__)

Vector = list[Fraction]


class ExactSpan:
    """Incrementally built span of rational vectors of a fixed length."""

    def __init__(self, length: int, track: bool = True) -> None:
        self.length = length
        self.track = track
        self._rows: list[Vector] = []
        self._pivots: list[int] = []
        self._combos: list[dict[int, Fraction]] = []
        self.generators: list[Vector] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return self.rank == self.length

    def _residual(
        self, vector: Sequence[Fraction]
    ) -> tuple[Vector, dict[int, Fraction]]:
        if len(vector) != self.length:
            raise ValueError(f"expected a vector of length {self.length}, got {len(vector)}")
        residual = [Fraction(v) for v in vector]
        used: dict[int, Fraction] = {}
        for j, (row, p) in enumerate(zip(self._rows, self._pivots)):
            c = residual[p]
            if c == 0:
                continue
            used[j] = c
            for k in range(self.length):
                if row[k]:
                    residual[k] -= c * row[k]
        return residual, used

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Add a generator; return True iff it enlarged the span."""
        residual, used = self._residual(vector)
        pivot = next((k for k, v in enumerate(residual) if v != 0), None)
        if pivot is None:
            return False
        index = len(self.generators)
        self.generators.append([Fraction(v) for v in vector])
        combo: dict[int, Fraction] = {}
        if self.track:
            combo[index] = Fraction(1)
            for j, c in used.items():
                for g, w in self._combos[j].items():
                    combo[g] = combo.get(g, Fraction(0)) - c * w
        scale = 1 / residual[pivot]
        new_row = [v * scale for v in residual]
        combo = {g: w * scale for g, w in combo.items() if w != 0}
        for j, row in enumerate(self._rows):
            c = row[pivot]
            if c == 0:
                continue
            for k in range(self.length):
                if new_row[k]:
                    row[k] -= c * new_row[k]
            if self.track:
                target = self._combos[j]
                for g, w in combo.items():
                    target[g] = target.get(g, Fraction(0)) - c * w
        self._rows.append(new_row)
        self._pivots.append(pivot)
        self._combos.append(combo)
        return True

    def contains(self, vector: Sequence[Fraction]) -> bool:
        residual, _ = self._residual(vector)
        return not any(residual)

    def coordinates(self, vector: Sequence[Fraction]) -> Optional[Vector]:
        """Coefficients of ``vector`` over the accepted generators, or None."""
        if not self.track:
            raise ValueError("coordinates need a span built with track=True")
        residual, _ = self._residual(vector)
        if any(residual):
            return None
        coords = [Fraction(0)] * len(self.generators)
        for row_combo, p in zip(self._combos, self._pivots):
            c = Fraction(vector[p])
            if c == 0:
                continue
            for g, w in row_combo.items():
                coords[g] += c * w
        return coords

    def nullspace(self) -> list[Vector]:
        """Basis of the vectors orthogonal (dot product zero) to every row."""
        pivot_set = set(self._pivots)
        basis = []
        for free in range(self.length):
            if free in pivot_set:
                continue
            x = [Fraction(0)] * self.length
            x[free] = Fraction(1)
            for row, p in zip(self._rows, self._pivots):
                x[p] = -row[free]
            basis.append(x)
        return basis


def rank(vectors: Sequence[Sequence[Fraction]], length: int) -> int:
    span = ExactSpan(length, track=False)
    for v in vectors:
        span.add(v)
        if span.is_full:
            break
    return span.rank


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Rational basis of {x : row . x = 0 for every row}."""
    span = ExactSpan(ncols, track=False)
    for row in rows:
        span.add(row)
        if span.is_full:
            break
    logger.debug(f"nullspace: {len(rows)} rows, rank {span.rank} of {ncols}")
    return span.nullspace()


class ComplexSpan:
    """Complex span of exact vectors, kept as the real span of v and i*v."""

    def __init__(self, length: int, track: bool = True) -> None:
        self.length = length
        self._real = ExactSpan(2 * length, track)
        self.basis: list[CArray] = []

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full(self) -> bool:
        return self.rank == self.length

    def add(self, vector: CArray) -> bool:
        """Add a generator; return True iff it enlarged the complex span."""
        v = vector.reshape(-1)
        if not self._real.add(v.realify()):
            return False
        self._real.add(v.times_i().realify())
        self.basis.append(v)
        return True

    def contains(self, vector: CArray) -> bool:
        return self._real.contains(vector.reshape(-1).realify())

    def coordinates(self, vector: CArray) -> Optional[CArray]:
        """Complex coefficients of ``vector`` over ``basis``, or None."""
        coords = self._real.coordinates(vector.reshape(-1).realify())
        if coords is None:
            return None
        return CArray.from_scalars(
            [GaussRat(coords[2 * k], coords[2 * k + 1]) for k in range(self.rank)], "exact"
        )
