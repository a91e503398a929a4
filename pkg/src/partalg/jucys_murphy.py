"""Recursive Jucys-Murphy elements L and the auxiliary involutions sigma.

Both families are indexed by half-integers.  Every element is materialized at
a single ambient rank so that the recursions can mix tower levels freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Mapping

from . import algebra as alg
from . import diagrams as dg
from .algebra import AlgebraElement
from .errors import IndexOutOfRangeError


@total_ordering
class HalfIndex:
    """Index in {0, 1/2, 1, 3/2, ...} stored as ``doubled`` = 2 * value."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        if not isinstance(doubled, int) or doubled < 0:
            raise ValueError(f"doubled index must be a nonnegative int, got {doubled!r}")
        self.doubled = doubled

    @classmethod
    def parse(cls, text) -> "HalfIndex":
        """Accept ``3``, ``"3"``, ``"5/2"``, ``"2.5"`` or a Fraction."""
        if isinstance(text, HalfIndex):
            return text
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse half-integer index {text!r}") from None
        twice = 2 * value
        if twice.denominator != 1 or twice < 0:
            raise ValueError(f"{text!r} is not a nonnegative half-integer")
        return cls(int(twice))

    @classmethod
    def of(cls, i: int, half: bool = False) -> "HalfIndex":
        return cls(2 * i + (1 if half else 0))

    @property
    def is_half(self) -> bool:
        return bool(self.doubled % 2)

    @property
    def floor(self) -> int:
        return self.doubled // 2

    @property
    def min_rank(self) -> int:
        """Smallest rank containing A_idx (ceil of the value)."""
        return (self.doubled + 1) // 2

    def __eq__(self, other):
        if isinstance(other, HalfIndex):
            return self.doubled == other.doubled
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfIndex):
            return self.doubled < other.doubled
        return NotImplemented

    def __hash__(self):
        return hash(("HalfIndex", self.doubled))

    def __str__(self):
        return f"{self.doubled}/2" if self.is_half else str(self.floor)

    def __repr__(self):
        return f"HalfIndex({self})"


def _doubled(idx) -> int:
    if isinstance(idx, HalfIndex):
        return idx.doubled
    if isinstance(idx, int):
        return idx
    return HalfIndex.parse(idx).doubled


def in_subalgebra(a: AlgebraElement, doubled_level: int) -> bool:
    """True iff every diagram of ``a`` lies in A_m, with m = doubled_level / 2."""
    return all(dg.level_of_labels(lab) <= doubled_level for lab in a._t)


class JMCache:
    """Memo tables of sigma and L at a fixed ambient rank.

    Indices may be HalfIndex, a string such as "5/2", or a plain int.  A plain
    int is read as the doubled index (5 means 5/2), which is what the
    recursions use internally.

    ``L_overrides`` / ``sigma_overrides`` map doubled indices to replacement
    elements.  They are used to corrupt a single family member on purpose and
    confirm that the verification suites notice.
    """

    def __init__(self, ambient_rank: int, L_overrides: Mapping | None = None,
                 sigma_overrides: Mapping | None = None):
        if ambient_rank < 0:
            raise IndexOutOfRangeError("ambient rank must be nonnegative")
        self.ambient_rank = ambient_rank
        self.sigma_table: dict[int, AlgebraElement] = {}
        self.L_table: dict[int, AlgebraElement] = {}
        for d, e in (L_overrides or {}).items():
            self.L_table[_doubled(d)] = e.embed(ambient_rank)
        for d, e in (sigma_overrides or {}).items():
            self.sigma_table[_doubled(d)] = e.embed(ambient_rank)

    # generators at ambient rank; out-of-range indices raise
    def s(self, i: int) -> AlgebraElement:
        return alg.s(i, self.ambient_rank)

    def p(self, j: int) -> AlgebraElement:
        return alg.p(j, self.ambient_rank)

    def ph(self, i: int) -> AlgebraElement:
        """p_{i+1/2}"""
        return alg.p_half(i, self.ambient_rank)

    def one(self) -> AlgebraElement:
        return AlgebraElement.one(self.ambient_rank)

    def zero(self) -> AlgebraElement:
        return AlgebraElement.zero(self.ambient_rank)

    def z(self) -> AlgebraElement:
        return AlgebraElement.scalar(self.ambient_rank, (0, 1))

    def _need(self, d: int):
        if (d + 1) // 2 > self.ambient_rank:
            raise IndexOutOfRangeError(
                f"index {HalfIndex(d)} needs rank >= {(d + 1) // 2}, ambient rank is {self.ambient_rank}"
            )

    # -- sigma ---------------------------------------------------------------

    def sigma(self, idx) -> AlgebraElement:
        d = _doubled(idx)
        if d < 1:
            raise IndexOutOfRangeError("sigma is indexed from 1/2")
        self._need(d)
        hit = self.sigma_table.get(d)
        if hit is None:
            hit = self.sigma_table[d] = self._build_sigma(d)
        return hit

    def _build_sigma(self, d: int) -> AlgebraElement:
        if d in (1, 2, 3):
            return self.one()
        if d == 4:
            return self.s(1)
        s, p, ph, L = self.s, self.p, self.ph, self.L
        if d % 2 == 0:
            i = d // 2 - 1  # sigma_{i+1}, i >= 2
            Lm = L(2 * i - 2)
            return (
                s(i - 1) * s(i) * self.sigma(2 * i) * s(i) * s(i - 1)
                + s(i) * ph(i - 1) * Lm * s(i) * ph(i - 1) * s(i)
                + ph(i - 1) * Lm * s(i) * ph(i - 1)
                - s(i) * ph(i - 1) * Lm * s(i - 1) * ph(i) * p(i) * ph(i - 1)
                - ph(i - 1) * p(i) * ph(i) * s(i - 1) * Lm * ph(i - 1) * s(i)
            )
        i = d // 2  # sigma_{i+1/2}, i >= 2
        Lm = L(2 * i - 2)
        return (
            s(i - 1) * s(i) * self.sigma(2 * i - 1) * s(i) * s(i - 1)
            + ph(i - 1) * Lm * s(i) * ph(i - 1) * s(i)
            + s(i) * ph(i - 1) * Lm * s(i) * ph(i - 1)
            - ph(i - 1) * Lm * s(i - 1) * ph(i) * p(i) * ph(i - 1)
            - s(i) * ph(i - 1) * p(i) * ph(i) * s(i - 1) * Lm * ph(i - 1) * s(i)
        )

    # -- L -------------------------------------------------------------------

    def L(self, idx) -> AlgebraElement:
        d = _doubled(idx)
        self._need(d)
        hit = self.L_table.get(d)
        if hit is None:
            hit = self.L_table[d] = self._build_L(d)
        return hit

    def _build_L(self, d: int) -> AlgebraElement:
        if d in (0, 1):
            return self.zero()
        if d == 2:
            return self.p(1)
        s, p, ph, L = self.s, self.p, self.ph, self.L
        if d % 2 == 0:
            i = d // 2 - 1  # L_{i+1}, i >= 1
            Li = L(2 * i)
            return (
                -(s(i) * Li * ph(i))
                - ph(i) * Li * s(i)
                + ph(i) * Li * p(i + 1) * ph(i)
                + s(i) * Li * s(i)
                + self.sigma(2 * i + 2)
            )
        i = d // 2  # L_{i+1/2}, i >= 1
        Li = L(2 * i)
        return (
            -(Li * ph(i))
            - ph(i) * Li
            + ph(i) * Li * p(i) * ph(i)
            + s(i) * L(2 * i - 1) * s(i)
            + self.sigma(2 * i + 1)
        )

    # -- alternative forms -----------------------------------------------------

    def sigma_half_alt(self, i: int) -> AlgebraElement:
        """sigma_{i+1/2} via the form whose last two summands are built around p_{i+1/2}."""
        if i < 2:
            raise IndexOutOfRangeError("the alternative sigma form needs i >= 2")
        self._need(2 * i + 1)
        s, p, ph = self.s, self.p, self.ph
        Lm = self.L(2 * i - 2)
        return (
            s(i - 1) * s(i) * self.sigma(2 * i - 1) * s(i) * s(i - 1)
            + ph(i - 1) * Lm * s(i - 1) * ph(i) * s(i - 1)
            + s(i - 1) * ph(i) * s(i - 1) * Lm * ph(i - 1)
            - ph(i - 1) * Lm * s(i - 1) * ph(i) * p(i) * ph(i - 1)
            - s(i - 1) * ph(i) * p(i) * ph(i - 1) * Lm * s(i - 1) * ph(i) * s(i - 1)
        )

    def L_half_alt(self, i: int) -> AlgebraElement:
        """L_{i+1/2} with the third summand written as (z - L_{i-1/2}) p_{i+1/2}."""
        if i < 1:
            raise IndexOutOfRangeError("the alternative L form needs i >= 1")
        self._need(2 * i + 1)
        s, ph = self.s, self.ph
        Li = self.L(2 * i)
        Lh = self.L(2 * i - 1)
        return (
            -(Li * ph(i))
            - ph(i) * Li
            + (self.z() - Lh) * ph(i)
            + s(i) * Lh * s(i)
            + self.sigma(2 * i + 1)
        )

    # -- central elements ------------------------------------------------------

    def central(self, idx) -> AlgebraElement:
        """z_idx = L_{1/2} + L_1 + ... + L_idx."""
        d = _doubled(idx)
        if d < 1:
            raise IndexOutOfRangeError("central elements are indexed from 1/2")
        self._need(d)
        out = self.zero()
        for e in range(1, d + 1):
            out = out + self.L(e)
        return out

    def build(self, max_doubled: int | None = None) -> "JMCache":
        """Eagerly fill both tables up to ``max_doubled`` (default: everything that fits)."""
        top = 2 * self.ambient_rank if max_doubled is None else max_doubled
        for d in range(0, top + 1):
            self.L(d)
            if d >= 1:
                self.sigma(d)
        return self


def expand(family: str, idx, k: int) -> AlgebraElement:
    """Convenience front end used by the CLI: family in {L, sigma, central}.

    Unlike JMCache, ``idx`` is read by value here, so ``expand("L", 2, 3)`` is L_2.
    """
    idx = HalfIndex.parse(idx)
    cache = JMCache(k)
    if family == "L":
        return cache.L(idx)
    if family == "sigma":
        return cache.sigma(idx)
    if family == "central":
        return cache.central(idx)
    raise ValueError(f"unknown family {family!r}")
