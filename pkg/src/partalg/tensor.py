"""Exact action of partition algebras on tensor space V^{(x)r}, dim V = n.

Basis vectors of V^{(x)r} are index tuples (i_1, ..., i_r) with entries in
1..n.  Operators are sparse integer matrices stored column by column.

A diagram acts on a basis tuple placed on its bottom (primed) row: the output
is the sum of all top-row tuples that, together with the input, are constant
on every block.  Blocks with no bottom vertex are summed freely over 1..n.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

from . import algebra as alg
from . import diagrams as dg
from .algebra import AlgebraElement
from .diagrams import SetPartitionDiagram
from .errors import (
    CapExceededError,
    IndexOutOfRangeError,
    MalformedPartitionError,
    RankMismatchError,
    UnknownSuiteError,
)
from .jucys_murphy import JMCache, _doubled
from .report import Check, VerificationReport

DEFAULT_BUDGET = 4096
DEFAULT_GRID = ((2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2))

Vector = dict  # TensorIndex -> int


@dataclass(frozen=True)
class RepConfig:
    n: int
    r: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if self.n ** self.r > self.budget:
            raise CapExceededError(f"n^r = {self.n ** self.r} exceeds budget {self.budget}")

    @property
    def dim(self) -> int:
        return self.n ** self.r

    def basis(self) -> list:
        return list(itertools.product(range(1, self.n + 1), repeat=self.r))

    def check_index(self, v) -> tuple:
        v = tuple(v)
        if len(v) != self.r or any(not 1 <= x <= self.n for x in v):
            raise IndexOutOfRangeError(f"{v!r} is not a basis index for n={self.n}, r={self.r}")
        return v

    def label(self) -> dict:
        return {"n": self.n, "r": self.r}


class SparseOperator:
    """Integer matrix on V^{(x)r}; ``columns[col][row] = entry``, zeros never stored."""

    __slots__ = ("config", "columns")

    def __init__(self, config: RepConfig, columns: Mapping | None = None):
        self.config = config
        cols = {}
        for col, entries in (columns or {}).items():
            kept = {row: v for row, v in entries.items() if v}
            if kept:
                cols[col] = kept
        self.columns = cols

    @classmethod
    def from_function(cls, config: RepConfig, f: Callable[[tuple], Mapping]) -> "SparseOperator":
        return cls(config, {v: f(v) for v in config.basis()})

    @classmethod
    def identity(cls, config: RepConfig) -> "SparseOperator":
        return cls(config, {v: {v: 1} for v in config.basis()})

    @classmethod
    def zero(cls, config: RepConfig) -> "SparseOperator":
        return cls(config, {})

    def apply(self, vec: Mapping) -> Vector:
        out: dict = {}
        for col, c in vec.items():
            for row, v in self.columns.get(col, {}).items():
                out[row] = out.get(row, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        """Composition: (self @ other)(x) = self(other(x))."""
        self._check(other)
        return SparseOperator(self.config, {col: self.apply(e) for col, e in other.columns.items()})

    def _check(self, other):
        if (self.config.n, self.config.r) != (other.config.n, other.config.r):
            raise RankMismatchError("operators act on different tensor spaces")

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        self._check(other)
        cols = {c: dict(e) for c, e in self.columns.items()}
        for c, e in other.columns.items():
            d = cols.setdefault(c, {})
            for row, v in e.items():
                d[row] = d.get(row, 0) + v
        return SparseOperator(self.config, cols)

    def scale(self, c: int) -> "SparseOperator":
        return SparseOperator(
            self.config, {col: {r: c * v for r, v in e.items()} for col, e in self.columns.items()}
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return (self.config.n, self.config.r) == (other.config.n, other.config.r) and \
            self.columns == other.columns

    __hash__ = None

    def nnz(self) -> int:
        return sum(len(e) for e in self.columns.values())

    def is_zero(self) -> bool:
        return not self.columns

    def flat(self, basis: list | None = None) -> list:
        """Row-major dense entries, for rank computations."""
        basis = basis or self.config.basis()
        return [self.columns.get(col, {}).get(row, 0) for row in basis for col in basis]

    def to_json(self) -> dict:
        entries = [
            [list(row), list(col), v]
            for col in sorted(self.columns)
            for row, v in sorted(self.columns[col].items())
        ]
        return {"n": self.config.n, "r": self.config.r, "entries": entries}


# -- diagram action ------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _action_labels(labels: tuple, n: int, v: tuple) -> tuple:
    k = len(labels) // 2
    nblocks = max(labels) + 1 if labels else 0
    forced = [0] * nblocks
    for b in range(k):
        blk = labels[k + b]
        val = v[b]
        if forced[blk] == 0:
            forced[blk] = val
        elif forced[blk] != val:
            return ()
    free_blocks = sorted({labels[a] for a in range(k) if forced[labels[a]] == 0})
    out = []
    for choice in itertools.product(range(1, n + 1), repeat=len(free_blocks)):
        val = list(forced)
        for blk, x in zip(free_blocks, choice):
            val[blk] = x
        out.append(tuple(val[labels[a]] for a in range(k)))
    return tuple(out)


def diagram_action(d: SetPartitionDiagram, cfg: RepConfig, v) -> Vector:
    """Image of the basis vector ``v`` under the diagram ``d`` (coefficients are all 1)."""
    if d.rank != cfg.r:
        raise RankMismatchError(f"diagram of rank {d.rank} acting on V^(x){cfg.r}")
    v = cfg.check_index(v)
    return {w: 1 for w in _action_labels(d.labels, cfg.n, v)}


def rep_operator(a: AlgebraElement, cfg: RepConfig, half: bool = False) -> SparseOperator:
    """Matrix of ``a`` (with z specialized to n).

    With ``half`` the element must be of rank r+1 and lie in the half
    subalgebra; it then acts on V^{(x)r} identified with V^{(x)r} (x) v_n.
    """
    n = cfg.n
    a_n = a.evaluate(n)
    if half:
        if a.rank != cfg.r + 1:
            raise RankMismatchError(f"half action on V^(x){cfg.r} needs rank {cfg.r + 1}, got {a.rank}")
        if not a.half_flag:
            k = a.rank
            if not all(lab[k - 1] == lab[2 * k - 1] for lab in a._t):
                raise MalformedPartitionError("element is not in the half subalgebra")
    elif a.rank != cfg.r:
        raise RankMismatchError(f"rank {a.rank} element acting on V^(x){cfg.r}")
    cols = {}
    for v in cfg.basis():
        src = v + (n,) if half else v
        out: dict = {}
        for lab, c in a_n._t.items():
            coeff = c[0]
            for w in _action_labels(lab, n, src):
                if half:
                    if w[-1] != n:  # cannot happen for half diagrams
                        raise MalformedPartitionError("half action left the subspace")
                    w = w[:-1]
                out[w] = out.get(w, 0) + coeff
        cols[v] = out
    return SparseOperator(cfg, cols)


def diagram_action_bruteforce(d: SetPartitionDiagram, cfg: RepConfig, v) -> Vector:
    """Reference implementation: test every top tuple for block-constancy."""
    k = cfg.r
    out = {}
    for w in itertools.product(range(1, cfg.n + 1), repeat=k):
        ok = True
        for block in d.blocks:
            vals = {w[x - 1] if x > 0 else v[-x - 1] for x in block}
            if len(vals) > 1:
                ok = False
                break
        if ok:
            out[w] = 1
    return out


# -- symmetric group actions ---------------------------------------------------

def _swap_values(t: tuple, a: int, b: int) -> tuple:
    return tuple(b if x == a else a if x == b else x for x in t)


def diagonal_action(perm: Mapping[int, int], cfg: RepConfig) -> SparseOperator:
    """w acting on values in every factor: v_{i_1} (x) ... -> v_{w(i_1)} (x) ..."""
    return SparseOperator.from_function(cfg, lambda v: {tuple(perm.get(x, x) for x in v): 1})


def transposition_action(a: int, b: int, cfg: RepConfig) -> SparseOperator:
    return diagonal_action({a: b, b: a}, cfg)


def place_permutation(u: tuple, cfg: RepConfig) -> SparseOperator:
    """u (0-based images) acting by position: out[u(b)] = in[b]."""
    def f(v):
        w = [0] * len(v)
        for b, x in enumerate(v):
            w[u[b]] = x
        return {tuple(w): 1}
    return SparseOperator.from_function(cfg, f)


def kappa_operator(cfg: RepConfig, exclude: int | None = None) -> SparseOperator:
    """Sum of all value transpositions s_{i,j}, i < j, skipping those that move ``exclude``."""
    n = cfg.n
    if exclude is not None and not 1 <= exclude <= n:
        raise IndexOutOfRangeError(f"excluded value {exclude} outside 1..{n}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if exclude not in (i, j)]

    def f(v):
        out: dict = {}
        for i, j in pairs:
            w = _swap_values(v, i, j)
            out[w] = out.get(w, 0) + 1
        return out
    return SparseOperator.from_function(cfg, f)


def kappa_excluding_last(cfg: RepConfig) -> SparseOperator:
    """kappa_{n, i_r}: on each basis vector, skip transpositions moving its last entry."""
    n = cfg.n

    def f(v):
        out: dict = {}
        ell = v[-1]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if ell in (i, j):
                    continue
                w = _swap_values(v, i, j)
                out[w] = out.get(w, 0) + 1
        return out
    return SparseOperator.from_function(cfg, f)


# -- closed formulas for sigma and L -------------------------------------------

def sigma_action_direct(idx, cfg: RepConfig, v) -> Vector:
    """sigma_{k+1/2} swaps the values i_k, i_{k+1} in the first k-1 factors;
    sigma_{k+1} does so in the first k+1 factors (k >= 1, k+1 <= r)."""
    d = _doubled(idx)
    v = cfg.check_index(v)
    if d % 2:
        k = d // 2
        span = k - 1
    else:
        k = d // 2 - 1
        span = k + 1
    if k < 1 or k + 1 > cfg.r:
        raise IndexOutOfRangeError(f"no closed sigma formula for index {d}/2 on V^(x){cfg.r}")
    a, b = v[k - 1], v[k]
    return {_swap_values(v[:span], a, b) + v[span:]: 1}


def L_action_direct(idx, cfg: RepConfig, v) -> Vector:
    """L_{k-1/2} and L_k (1 <= k <= r) on V^{(x)r}; factors beyond k are untouched."""
    d = _doubled(idx)
    v = cfg.check_index(v)
    k = (d + 1) // 2
    if k < 1 or k > cfg.r:
        raise IndexOutOfRangeError(f"no closed L formula for index {d}/2 on V^(x){cfg.r}")
    n = cfg.n
    head, ik, tail = v[:k - 1], v[k - 1], v[k:]
    out: dict = {}
    if d % 2:
        out[v] = n
        for j in range(1, n + 1):
            w = _swap_values(head, ik, j) + (ik,) + tail
            out[w] = out.get(w, 0) - 1
    else:
        for j in range(1, n + 1):
            w = _swap_values(head, ik, j) + (j,) + tail
            out[w] = out.get(w, 0) + 1
    return {w: c for w, c in out.items() if c}


# -- suites ----------------------------------------------------------------------

class _TRun:
    def __init__(self, suite: str, cfg: RepConfig):
        self.cfg = cfg
        self.report = VerificationReport(suite=suite, config=cfg.label())

    def same(self, ident: str, indices, a: Callable[[], SparseOperator],
             b: Callable[[], SparseOperator]):
        try:
            x, y = a(), b()
        except IndexOutOfRangeError:
            self.report.out_of_range += 1
            return None
        diff = x - y
        ok = diff.is_zero()
        self.report.checks.append(Check(ident, tuple(indices), ok, diff.nnz()))
        return ok


def _shift(op: SparseOperator, c: int) -> SparseOperator:
    """op - c * Id"""
    return op - SparseOperator.identity(op.config).scale(c)


def generator_list(k: int, half: bool = False) -> list:
    """(name, element) for the generators of A_k, or of A_{k+1/2} at rank k+1."""
    rank = k + 1 if half else k
    out = [(f"p_{j}", alg.p(j, rank)) for j in range(1, k + 1)]
    out += [(f"p_{j}+1/2", alg.p_half(j, rank)) for j in range(1, k if not half else k + 1)]
    out += [(f"s_{j}", alg.s(j, rank)) for j in range(1, k)]
    return out


def suite_generator_consistency(t: _TRun):
    """Generator images and permutation diagrams against their textbook actions."""
    cfg = t.cfg
    r, n = cfg.r, cfg.n
    for i in range(1, r):
        def place(i=i):
            def f(v):
                w = list(v)
                w[i - 1], w[i] = w[i], w[i - 1]
                return {tuple(w): 1}
            return SparseOperator.from_function(cfg, f)
        t.same("s_i swaps positions i, i+1", (i,), lambda: rep_operator(alg.s(i, r), cfg), place)
        t.same("p_i+1/2 keeps v iff i_i = i_i+1", (i,),
               lambda: rep_operator(alg.p_half(i, r), cfg),
               lambda: SparseOperator.from_function(
                   cfg, lambda v: {v: 1} if v[i - 1] == v[i] else {}))
    for k in range(1, r + 1):
        t.same("p_k sums position k over 1..n", (k,), lambda: rep_operator(alg.p(k, r), cfg),
               lambda: SparseOperator.from_function(
                   cfg, lambda v: {v[:k - 1] + (j,) + v[k:]: 1 for j in range(1, n + 1)}))
    for u in itertools.permutations(range(r)):
        t.same("permutation diagram acts by place permutation", u,
               lambda: rep_operator(AlgebraElement.from_diagram(dg.permutation_diagram(u)), cfg),
               lambda: place_permutation(u, cfg))


def suite_sigma_formulas(t: _TRun, cache: JMCache):
    cfg = t.cfg
    for d in range(3, 2 * cfg.r + 1):
        t.same("sigma image = closed formula", (d,),
               lambda: rep_operator(cache.sigma(d), cfg),
               lambda: SparseOperator.from_function(cfg, lambda v: sigma_action_direct(d, cfg, v)))


def suite_L_formulas(t: _TRun, cache: JMCache):
    cfg = t.cfg
    for d in range(1, 2 * cfg.r + 1):
        t.same("L image = closed formula", (d,),
               lambda: rep_operator(cache.L(d), cfg),
               lambda: SparseOperator.from_function(cfg, lambda v: L_action_direct(d, cfg, v)))


def suite_central_action(t: _TRun, caches: dict):
    """z_m on V^{(x)m} is kappa_n shifted by a scalar, for m = 1..r and m - 1/2, m >= 2."""
    n = t.cfg.n
    for m in range(1, t.cfg.r + 1):
        cfg = RepConfig(n, m, t.cfg.budget)
        cache = caches[m]
        t.same("z_m = kappa_n - (C(n,2) - m n)", (m,),
               lambda: rep_operator(cache.central(2 * m), cfg),
               lambda: _shift(kappa_operator(cfg), comb(n, 2) - m * n))
        if m >= 2:
            t.same("z_m-1/2 = kappa_n,i_m - (C(n,2) - m n + 1)", (m,),
                   lambda: rep_operator(cache.central(2 * m - 1), cfg),
                   lambda: _shift(kappa_excluding_last(cfg), comb(n, 2) - m * n + 1))


def suite_commutant(t: _TRun):
    """Generator images commute with S_n (full case) and S_{n-1} (half case)."""
    cfg = t.cfg
    n, r = cfg.n, cfg.r
    full = generator_list(r)
    half = generator_list(r, half=True)
    for a in range(1, n):
        w = transposition_action(a, a + 1, cfg)
        for name, g in full:
            t.same(f"{name} commutes with s_({a},{a + 1})", (a,),
                   lambda g=g: rep_operator(g, cfg) @ w, lambda g=g: w @ rep_operator(g, cfg))
    for a in range(1, n - 1):
        w = transposition_action(a, a + 1, cfg)
        for name, g in half:
            t.same(f"half {name} commutes with s_({a},{a + 1})", (a,),
                   lambda g=g: rep_operator(g, cfg, half=True) @ w,
                   lambda g=g: w @ rep_operator(g, cfg, half=True))


def suite_hr_equality(t: _TRun, caches: dict):
    """Central elements match Z_k = kappa_n - (C(n,2) - kn) on V^{(x)k} and
    Z_{k+1/2} = kappa_{n-1} - (C(n,2) - (k+1)n + 1) on V^{(x)k} (x) v_n.
    Differences of consecutive Z's then agree with L_{k+1/2} and L_{k+1}."""
    n = t.cfg.n
    for k in range(1, t.cfg.r + 1):
        cfg = RepConfig(n, k, t.cfg.budget)
        Zk = lambda: _shift(kappa_operator(cfg), comb(n, 2) - k * n)
        Zh = lambda: _shift(kappa_operator(cfg, exclude=n), comb(n, 2) - (k + 1) * n + 1)
        up = caches[k + 1]
        t.same("z_k = Z_k", (k,), lambda: rep_operator(caches[k].central(2 * k), cfg), Zk)
        t.same("z_k+1/2 = Z_k+1/2", (k,),
               lambda: rep_operator(up.central(2 * k + 1), cfg, half=True), Zh)
        t.same("L_k+1/2 = Z_k+1/2 - Z_k", (k,),
               lambda: rep_operator(up.L(2 * k + 1), cfg, half=True), lambda: Zh() - Zk())
        if k + 1 <= t.cfg.r:
            cfg1 = RepConfig(n, k + 1, t.cfg.budget)
            # Z_{k+1/2} on the whole of V^{(x)k+1}: the S_n-translate of kappa_{n-1}
            # is kappa_{n, i_{k+1}}
            t.same("L_k+1 = Z_k+1 - Z_k+1/2", (k,),
                   lambda: rep_operator(up.L(2 * k + 2), cfg1),
                   lambda: _shift(kappa_operator(cfg1), comb(n, 2) - (k + 1) * n)
                   - _shift(kappa_excluding_last(cfg1), comb(n, 2) - (k + 1) * n + 1))


TENSOR_SUITES = (
    "generator_consistency",
    "sigma_formulas",
    "L_formulas",
    "central_action",
    "commutant",
    "hr_equality",
)


def verify_tensor_suite(suite: str, cfg: RepConfig) -> VerificationReport:
    if suite not in TENSOR_SUITES:
        raise UnknownSuiteError(suite)
    t = _TRun(suite, cfg)
    t0 = time.perf_counter()
    caches = {m: JMCache(m) for m in range(0, cfg.r + 2)}
    if suite == "generator_consistency":
        suite_generator_consistency(t)
    elif suite == "sigma_formulas":
        suite_sigma_formulas(t, caches[cfg.r])
    elif suite == "L_formulas":
        suite_L_formulas(t, caches[cfg.r])
    elif suite == "central_action":
        suite_central_action(t, caches)
    elif suite == "commutant":
        suite_commutant(t)
    else:
        suite_hr_equality(t, caches)
    t.report.elapsed = time.perf_counter() - t0
    return t.report


def verify_tensor_all(cfg: RepConfig) -> list:
    return [verify_tensor_suite(s, cfg) for s in TENSOR_SUITES]


# -- injectivity and homomorphism sampling ---------------------------------------

def basis_image_rank(cfg: RepConfig) -> tuple[int, int]:
    """(rank of the span of all basis-diagram images, number of diagrams)."""
    import sympy

    basis = cfg.basis()
    rows = [
        rep_operator(AlgebraElement.from_diagram(d), cfg).flat(basis)
        for d in dg.enumerate_diagrams(cfg.r)
    ]
    return sympy.Matrix(rows).rank(), len(rows)


def random_word(k: int, rng: random.Random, max_len: int = 4) -> AlgebraElement:
    gens = [g for _, g in generator_list(k)]
    length = rng.randint(1, max_len)
    return alg.product([rng.choice(gens) for _ in range(length)], k)


def homomorphism_trials(cfg: RepConfig, trials: int = 200, seed: int = 0) -> list:
    """Return the list of failing (a, b) pairs among ``trials`` random generator words."""
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        a = random_word(cfg.r, rng)
        b = random_word(cfg.r, rng)
        if rep_operator(a * b, cfg) != rep_operator(a, cfg) @ rep_operator(b, cfg):
            bad.append((a, b))
    return bad
