"""Linear combinations of diagrams over Z[z] and the partition algebra product.

Coefficients are held internally as dense integer tuples (index = power of z)
keyed by raw canonical label vectors, which keeps the product loop free of
object allocation.  The public ``terms`` view converts to
``SetPartitionDiagram -> IntPolynomial``.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from . import diagrams as dg
from .diagrams import SetPartitionDiagram
from .errors import MalformedPartitionError, RankMismatchError
from .poly import IntPolynomial

Coeff = tuple  # dense tuple of ints, no trailing zeros, never empty


def _strip(c: list) -> Coeff:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Coeff, b: Coeff) -> Coeff:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _pmul_shift(a: Coeff, b: Coeff, shift: int) -> list:
    out = [0] * (len(a) + len(b) - 1 + shift)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j + shift] += x * y
    return out


def _as_coeff(c) -> Coeff:
    if isinstance(c, IntPolynomial):
        return c.coeffs
    if isinstance(c, int) and not isinstance(c, bool):
        return (c,) if c else ()
    if isinstance(c, (tuple, list)):
        return IntPolynomial(c).coeffs
    raise TypeError(f"cannot use {c!r} as a coefficient")


def _half(rank: int, t: dict, known: bool) -> bool:
    """half_flag for a fresh result; rescan the terms when the operands cannot vouch for it."""
    if known:
        return True
    return rank > 0 and all(lab[rank - 1] == lab[2 * rank - 1] for lab in t)


class AlgebraElement:
    """Finite Z[z]-linear combination of rank-``k`` diagrams."""

    __slots__ = ("rank", "_t", "half_flag")

    def __init__(self, rank: int, terms: Mapping | None = None, half_flag: bool | None = None):
        self.rank = rank
        t: dict = {}
        for key, c in (terms or {}).items():
            labels = key.labels if isinstance(key, SetPartitionDiagram) else tuple(key)
            if len(labels) != 2 * rank:
                raise RankMismatchError(f"diagram of rank {len(labels) // 2} in rank-{rank} element")
            if dg._rgs(labels) != labels:
                raise MalformedPartitionError("term key is not a canonical label vector")
            coeff = _as_coeff(c)
            if labels in t:
                coeff = _padd(t[labels], coeff)
            if coeff:
                t[labels] = coeff
            else:
                t.pop(labels, None)
        self._t = t
        all_half = all(rank > 0 and lab[rank - 1] == lab[2 * rank - 1] for lab in t)
        if half_flag is None:
            half_flag = all_half and rank > 0
        elif half_flag and not all_half:
            raise MalformedPartitionError("half_flag set but a term is outside the half subalgebra")
        self.half_flag = bool(half_flag)

    @classmethod
    def _raw(cls, rank: int, t: dict, half_flag: bool) -> "AlgebraElement":
        obj = object.__new__(cls)
        obj.rank = rank
        obj._t = t
        obj.half_flag = half_flag
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "AlgebraElement":
        return cls._raw(k, {}, k > 0)

    @classmethod
    def one(cls, k: int) -> "AlgebraElement":
        return cls._raw(k, {dg.identity_labels(k): (1,)}, k > 0)

    @classmethod
    def from_diagram(cls, d: SetPartitionDiagram, coeff=1) -> "AlgebraElement":
        return cls(d.rank, {d: coeff})

    @classmethod
    def scalar(cls, k: int, coeff) -> "AlgebraElement":
        return cls(k, {dg.identity_labels(k): coeff})

    # -- views -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return {SetPartitionDiagram._trusted(lab): IntPolynomial(c) for lab, c in self._t.items()}

    def coefficient(self, d: SetPartitionDiagram) -> IntPolynomial:
        return IntPolynomial(self._t.get(d.labels, ()))

    def sorted_terms(self) -> list:
        """(diagram, polynomial) pairs in canonical order (by text serialization)."""
        items = [(SetPartitionDiagram._trusted(lab), IntPolynomial(c)) for lab, c in self._t.items()]
        items.sort(key=lambda item: item[0].to_text())
        return items

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __iter__(self):
        return iter(self.terms.items())

    # -- comparison --------------------------------------------------------

    def equals(self, other: "AlgebraElement") -> bool:
        return isinstance(other, AlgebraElement) and self.rank == other.rank and self._t == other._t

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # mutable-looking container semantics; compare with equals

    # -- module structure --------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        t = dict(self._t)
        for lab, c in other._t.items():
            if lab in t:
                s = _padd(t[lab], c)
                if s:
                    t[lab] = s
                else:
                    del t[lab]
            else:
                t[lab] = c
        return AlgebraElement._raw(self.rank, t, _half(self.rank, t, self.half_flag and other.half_flag))

    def __neg__(self):
        return AlgebraElement._raw(
            self.rank, {lab: tuple(-x for x in c) for lab, c in self._t.items()}, self.half_flag
        )

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "AlgebraElement":
        """Multiply every coefficient by an integer or polynomial scalar."""
        c = _as_coeff(coeff)
        if not c:
            return AlgebraElement._raw(self.rank, {}, self.half_flag)
        t = {}
        for lab, x in self._t.items():
            y = _strip(_pmul_shift(x, c, 0))
            if y:
                t[lab] = y
        return AlgebraElement._raw(self.rank, t, self.half_flag)

    # -- product -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, IntPolynomial)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        compose = dg.compose_labels
        acc: dict = {}
        for la, ca in self._t.items():
            simple_a = len(ca) == 1
            a0 = ca[0]
            for lb, cb in other._t.items():
                lab, ell = compose(la, lb)
                if simple_a and len(cb) == 1:
                    # common case: integer times integer, times z^ell
                    v = a0 * cb[0]
                    cur = acc.get(lab)
                    if cur is None:
                        cur = acc[lab] = [0] * (ell + 1)
                    elif len(cur) <= ell:
                        cur.extend([0] * (ell + 1 - len(cur)))
                    cur[ell] += v
                else:
                    prod = _pmul_shift(ca, cb, ell)
                    cur = acc.get(lab)
                    if cur is None:
                        acc[lab] = prod
                    else:
                        if len(cur) < len(prod):
                            cur.extend([0] * (len(prod) - len(cur)))
                        for i, x in enumerate(prod):
                            cur[i] += x
        t = {}
        for lab, c in acc.items():
            s = _strip(c)
            if s:
                t[lab] = s
        return AlgebraElement._raw(self.rank, t, _half(self.rank, t, self.half_flag and other.half_flag))

    def __rmul__(self, other):
        if isinstance(other, (int, IntPolynomial)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = AlgebraElement.one(self.rank)
        for _ in range(e):
            out = out * self
        return out

    # -- structure maps ----------------------------------------------------

    def star(self) -> "AlgebraElement":
        """Apply the anti-involution swapping ``i`` and ``i'`` on every diagram."""
        return AlgebraElement._raw(
            self.rank, {dg.involute_labels(lab): c for lab, c in self._t.items()}, self.half_flag
        )

    def evaluate(self, n: int) -> "AlgebraElement":
        """Specialize z to the integer ``n``; coefficients become constants."""
        t = {}
        for lab, c in self._t.items():
            v = IntPolynomial(c)(n)
            if v:
                t[lab] = (v,)
        return AlgebraElement._raw(self.rank, t, self.half_flag)

    def embed(self, k_new: int) -> "AlgebraElement":
        if k_new < self.rank:
            raise RankMismatchError(f"cannot embed rank {self.rank} into rank {k_new}")
        if k_new == self.rank:
            return self
        t = {dg.embed_labels(lab, k_new): c for lab, c in self._t.items()}
        return AlgebraElement._raw(k_new, t, True)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"diagram": d.to_json(), "coeff": list(c.coeffs)} for d, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        k = data["rank"]
        terms: dict = {}
        for term in data["terms"]:
            d = dg.from_json(term["diagram"], k)
            c = _as_coeff(list(term["coeff"]))
            terms[d.labels] = _padd(terms.get(d.labels, ()), c)
        return cls(k, terms)

    def to_text(self) -> str:
        if not self._t:
            return "0"
        lines = []
        for d, c in self.sorted_terms():
            lines.append(f"{str(c):>12}  {d.to_text()}")
        return "\n".join(lines)

    def __repr__(self):
        return f"AlgebraElement(rank={self.rank}, terms={len(self._t)})"


# -- named elements ----------------------------------------------------------

def s(i: int, k: int) -> AlgebraElement:
    return AlgebraElement.from_diagram(dg.generator("s", i, k))


def p(j: int, k: int) -> AlgebraElement:
    return AlgebraElement.from_diagram(dg.generator("p", j, k))


def p_half(i: int, k: int) -> AlgebraElement:
    """p_{i+1/2} at rank k."""
    return AlgebraElement.from_diagram(dg.generator("p_half", i, k))


def generator_element(doubled: int, kind: str, k: int) -> AlgebraElement:
    """``p`` generator by doubled index (2j -> p_j, 2i+1 -> p_{i+1/2}) or ``s`` by index."""
    if kind == "s":
        return s(doubled, k)
    if doubled % 2:
        return p_half(doubled // 2, k)
    return p(doubled // 2, k)


def product(factors: Iterable[AlgebraElement], k: int | None = None) -> AlgebraElement:
    """Left-to-right product after embedding every factor into rank ``k``."""
    factors = list(factors)
    if k is None:
        k = max(f.rank for f in factors)
    out = None
    for f in factors:
        f = f.embed(k)
        out = f if out is None else out * f
    return AlgebraElement.one(k) if out is None else out


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a
