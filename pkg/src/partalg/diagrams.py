"""Set-partition diagrams: canonical form, composition, generators, enumeration.

A diagram of rank k is a set partition of the 2k vertices 1..k (top row) and
1'..k' (bottom row).  Internally a diagram is a *label vector*: a tuple of
length 2k in vertex order 1 < 2 < ... < k < 1' < ... < k', holding a block
number for each vertex.  Block numbers form a restricted growth string (the
first vertex gets 0, every later vertex reuses a number or takes max+1), which
makes the label vector a canonical, hashable key.

Primed labels are written ``3'`` in text and as negative integers in JSON.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CapExceededError,
    IndexOutOfRangeError,
    MalformedPartitionError,
    RankMismatchError,
)

Labels = tuple  # tuple[int, ...], restricted growth string over 2k vertices

DEFAULT_ENUMERATION_CAP = 4


def _rgs(seq: Iterable) -> Labels:
    """Relabel arbitrary hashable block ids into restricted growth form."""
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in seq)


def _vertex_of(label, k: int) -> int:
    """Map a signed int / ``"3'"`` string label to a vertex position."""
    if isinstance(label, str):
        text = label.strip()
        primed = text.endswith("'")
        body = text[:-1] if primed else text
        try:
            a = int(body)
        except ValueError:
            raise MalformedPartitionError(f"bad vertex label {label!r}") from None
        if a <= 0:
            raise MalformedPartitionError(f"bad vertex label {label!r}")
        signed = -a if primed else a
    elif isinstance(label, bool) or not isinstance(label, int):
        raise MalformedPartitionError(f"bad vertex label {label!r}")
    else:
        signed = label
    a = abs(signed)
    if a == 0 or a > k:
        raise MalformedPartitionError(f"label {label!r} out of range for rank {k}")
    return a - 1 if signed > 0 else k + a - 1


def _label_of(v: int, k: int) -> int:
    return v + 1 if v < k else -(v - k + 1)


def _label_text(signed: int) -> str:
    return str(signed) if signed > 0 else f"{-signed}'"


class SetPartitionDiagram:
    """Immutable basis diagram of the partition algebra of rank ``k``."""

    __slots__ = ("labels",)

    def __init__(self, labels: Sequence[int]):
        labels = tuple(labels)
        if len(labels) % 2:
            raise MalformedPartitionError("label vector must have even length")
        if _rgs(labels) != labels:
            raise MalformedPartitionError("label vector is not in canonical form")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def _trusted(cls, labels: Labels) -> "SetPartitionDiagram":
        obj = object.__new__(cls)
        object.__setattr__(obj, "labels", labels)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("SetPartitionDiagram is immutable")

    def __reduce__(self):
        return (SetPartitionDiagram, (self.labels,))

    @property
    def rank(self) -> int:
        return len(self.labels) // 2

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as signed labels, each block in vertex order, blocks by least vertex."""
        k = self.rank
        out: list[list[int]] = []
        for v, b in enumerate(self.labels):
            if b == len(out):
                out.append([])
            out[b].append(_label_of(v, k))
        return tuple(tuple(b) for b in out)

    def __eq__(self, other):
        if not isinstance(other, SetPartitionDiagram):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"SetPartitionDiagram({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        return " | ".join(" ".join(_label_text(x) for x in b) for b in self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


class CompositionResult(NamedTuple):
    diagram: SetPartitionDiagram
    removed_blocks: int


def canonicalize(blocks: Iterable[Iterable], k: int) -> SetPartitionDiagram:
    """Build the canonical diagram of rank ``k`` from a raw block list.

    Labels may be signed ints (``-a`` for ``a'``) or strings such as ``"3'"``.
    Block order and order within blocks are irrelevant.
    """
    if k < 0:
        raise MalformedPartitionError("rank must be nonnegative")
    owner = [-1] * (2 * k)
    for b_id, block in enumerate(blocks):
        block = list(block)
        if not block:
            raise MalformedPartitionError("empty block")
        for label in block:
            v = _vertex_of(label, k)
            if owner[v] != -1:
                raise MalformedPartitionError(
                    f"vertex {_label_text(_label_of(v, k))} appears twice"
                )
            owner[v] = b_id
    missing = [_label_text(_label_of(v, k)) for v, b in enumerate(owner) if b == -1]
    if missing:
        raise MalformedPartitionError(f"missing vertices: {' '.join(missing)}")
    return SetPartitionDiagram._trusted(_rgs(owner))


def from_text(text: str, k: int | None = None) -> SetPartitionDiagram:
    """Parse ``"1 1' 3 | 2 2'"``; the rank defaults to the largest label."""
    blocks = [part.split() for part in text.split("|")]
    if any(not b for b in blocks):
        raise MalformedPartitionError(f"empty block in {text!r}")
    if k is None:
        try:
            k = max(int(x.rstrip("'")) for b in blocks for x in b)
        except ValueError:
            raise MalformedPartitionError(f"cannot parse {text!r}") from None
    return canonicalize(blocks, k)


def from_json(data, k: int | None = None) -> SetPartitionDiagram:
    """Parse an array of arrays of signed integers (``a'`` encoded as ``-a``)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise MalformedPartitionError("diagram JSON must be an array of arrays")
    if k is None:
        try:
            k = max(abs(x) for b in data for x in b)
        except (TypeError, ValueError):
            raise MalformedPartitionError("cannot infer rank from diagram JSON") from None
    return canonicalize(data, k)


def parse_diagram(text: str, k: int | None = None) -> SetPartitionDiagram:
    """Accept either the ``|``-separated text form or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedPartitionError(f"bad diagram JSON: {exc}") from None
        return from_json(data, k)
    return from_text(stripped, k)


# -- composition -------------------------------------------------------------

@lru_cache(maxsize=1 << 21)
def compose_labels(a: Labels, b: Labels) -> tuple[Labels, int]:
    """Stack ``a`` above ``b``; return the canonical result and the number of
    components lying entirely in the identified middle row.

    Union-find runs over the blocks of both diagrams (at most 4k nodes); the
    middle row of 3k vertices is glued by uniting, for each middle vertex, the
    bottom block of ``a`` with the top block of ``b`` containing it.
    """
    k = len(a) >> 1
    na = max(a) + 1 if a else 0
    total = na + (max(b) + 1 if b else 0)
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in range(k):
        x = find(a[k + m])
        y = find(na + b[m])
        if x != y:
            parent[x] = y
    outer = [find(a[v]) for v in range(k)]
    outer += [find(na + b[k + w]) for w in range(k)]
    roots = {find(x) for x in range(total)}
    seen: dict = {}
    labels = tuple(seen.setdefault(r, len(seen)) for r in outer)
    return labels, len(roots) - len(seen)


def compose(top: SetPartitionDiagram, bottom: SetPartitionDiagram) -> CompositionResult:
    if top.rank != bottom.rank:
        raise RankMismatchError(f"cannot compose rank {top.rank} with rank {bottom.rank}")
    labels, ell = compose_labels(top.labels, bottom.labels)
    return CompositionResult(SetPartitionDiagram._trusted(labels), ell)


# -- involution, subalgebra tests, embedding ---------------------------------

def involute_labels(a: Labels) -> Labels:
    k = len(a) >> 1
    return _rgs(a[k:] + a[:k])


def involute(d: SetPartitionDiagram) -> SetPartitionDiagram:
    """Reflect in the horizontal axis (swap ``i`` and ``i'``)."""
    return SetPartitionDiagram._trusted(involute_labels(d.labels))


def is_half(d: SetPartitionDiagram) -> bool:
    """True iff ``k`` and ``k'`` share a block, i.e. ``d`` lies in A_{k-1/2}."""
    k = d.rank
    return k > 0 and d.labels[k - 1] == d.labels[2 * k - 1]


def level_of_labels(a: Labels) -> int:
    """Smallest doubled level 2m such that the diagram lies in A_m (m in Z/2)."""
    k = len(a) >> 1
    top = k
    # strip identity strands {j, j'} from the right
    while top > 0:
        j = top - 1
        if a[j] == a[k + j] and a.count(a[j]) == 2:
            top -= 1
        else:
            break
    if top == 0:
        return 0
    j = top - 1
    return 2 * top - 1 if a[j] == a[k + j] else 2 * top


def embed_labels(a: Labels, k_new: int) -> Labels:
    k = len(a) >> 1
    if k_new == k:
        return a
    fresh = max(a) + 1 if a else 0
    extra = tuple(range(fresh, fresh + k_new - k))
    return _rgs(a[:k] + extra + a[k:] + extra)


def embed(d: SetPartitionDiagram, k_new: int) -> SetPartitionDiagram:
    """Append identity strands {a, a'} for a = rank+1 .. k_new."""
    if k_new < d.rank:
        raise RankMismatchError(f"cannot embed rank {d.rank} into rank {k_new}")
    return SetPartitionDiagram._trusted(embed_labels(d.labels, k_new))


# -- named diagrams ----------------------------------------------------------

def identity_labels(k: int) -> Labels:
    return tuple(range(k)) * 2


def identity(k: int) -> SetPartitionDiagram:
    return SetPartitionDiagram._trusted(identity_labels(k))


def permutation_diagram(perm: Sequence[int]) -> SetPartitionDiagram:
    """Diagram of the permutation ``u`` (0-based images): blocks {u(b), b'}.

    With this convention diagram(u) composed over diagram(w) is diagram(u o w).
    """
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise MalformedPartitionError(f"{perm!r} is not a permutation")
    return canonicalize([[perm[b] + 1, -(b + 1)] for b in range(k)], k)


def generator(kind: str, i: int, k: int) -> SetPartitionDiagram:
    """Generator diagrams ``s(i)``, ``p(j)`` and ``p_half(i)`` = p_{i+1/2} at rank ``k``."""
    if kind == "s":
        if not 1 <= i <= k - 1:
            raise IndexOutOfRangeError(f"s_{i} needs 1 <= i <= {k - 1}")
        blocks = [[a, -a] for a in range(1, k + 1) if a not in (i, i + 1)]
        blocks += [[i, -(i + 1)], [i + 1, -i]]
    elif kind == "p":
        if not 1 <= i <= k:
            raise IndexOutOfRangeError(f"p_{i} needs 1 <= i <= {k}")
        blocks = [[a, -a] for a in range(1, k + 1) if a != i] + [[i], [-i]]
    elif kind == "p_half":
        if not 1 <= i <= k - 1:
            raise IndexOutOfRangeError(f"p_{i}+1/2 needs 1 <= i <= {k - 1}")
        blocks = [[a, -a] for a in range(1, k + 1) if a not in (i, i + 1)]
        blocks += [[i, i + 1, -i, -(i + 1)]]
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return canonicalize(blocks, k)


# -- enumeration -------------------------------------------------------------

def enumeration_cap() -> int:
    raw = os.environ.get("PA_MAX_RANK")
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError:
        raise CapExceededError(f"PA_MAX_RANK must be an integer, got {raw!r}") from None


def restricted_growth_strings(n: int) -> Iterator[Labels]:
    """All restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    seq = [0] * n
    maxes = [0] * n  # maxes[i] = max(seq[:i+1])
    while True:
        yield tuple(seq)
        i = n - 1
        while i > 0 and seq[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        seq[i] += 1
        maxes[i] = max(maxes[i - 1], seq[i])
        for j in range(i + 1, n):
            seq[j] = 0
            maxes[j] = maxes[i]


def enumerate_diagrams(k: int, cap: int | None = None) -> Iterator[SetPartitionDiagram]:
    """Yield every diagram of rank ``k`` exactly once (Bell(2k) of them)."""
    limit = enumeration_cap() if cap is None else cap
    if k < 0:
        raise MalformedPartitionError("rank must be nonnegative")
    if k > limit:
        raise CapExceededError(f"rank {k} exceeds enumeration cap {limit}")
    for labels in restricted_growth_strings(2 * k):
        yield SetPartitionDiagram._trusted(labels)
