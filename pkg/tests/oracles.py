"""Independent reference implementations used only by the tests.

None of these import the package's composition or enumeration code; they work
on diagrams given as collections of blocks of signed labels (a' is -a).
"""

from collections import deque
from functools import lru_cache


def blocks_key(blocks):
    """Order-free representation: frozenset of frozensets."""
    return frozenset(frozenset(b) for b in blocks)


def compose_bfs(top_blocks, bottom_blocks, k):
    """Stack ``top`` over ``bottom``; return (blocks_key, number of middle-only components).

    Builds the 3-row graph explicitly and labels components by breadth-first search.
    """
    adj = {}

    def node(row, a):
        adj.setdefault((row, a), set())
        return (row, a)

    for a in range(1, k + 1):
        for row in ("t", "m", "b"):
            node(row, a)

    def link(nodes):
        nodes = list(nodes)
        for x in nodes[1:]:
            adj[nodes[0]].add(x)
            adj[x].add(nodes[0])

    for blk in top_blocks:
        link(("t", x) if x > 0 else ("m", -x) for x in blk)
    for blk in bottom_blocks:
        link(("m", x) if x > 0 else ("b", -x) for x in blk)

    seen = set()
    out_blocks = []
    middle_only = 0
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            cur = queue.popleft()
            comp.append(cur)
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        outer = [a if row == "t" else -a for row, a in comp if row != "m"]
        if outer:
            out_blocks.append(outer)
        else:
            middle_only += 1
    return blocks_key(out_blocks), middle_only


def product_bfs(words, k):
    """Product of single diagrams: returns (blocks_key, total z power)."""
    cur = words[0]
    power = 0
    for nxt in words[1:]:
        key, ell = compose_bfs(cur, nxt, k)
        cur = [list(b) for b in key]
        power += ell
    return blocks_key(cur), power


@lru_cache(maxsize=None)
def count_rgs(length, current_max=-1):
    """Number of restricted growth strings of ``length`` extending a prefix whose max is given."""
    if length == 0:
        return 1
    # reuse one of the current_max+1 existing values, or open a new one
    return (current_max + 1) * count_rgs(length - 1, current_max) + count_rgs(length - 1, current_max + 1)


def bell_triangle(m):
    """Bell(m) by the Aitken triangle (second, unrelated method)."""
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def identity_blocks(k):
    return [[a, -a] for a in range(1, k + 1)]


def s_blocks(i, k):
    return [[a, -a] for a in range(1, k + 1) if a not in (i, i + 1)] + [[i, -(i + 1)], [i + 1, -i]]


def p_blocks(j, k):
    return [[a, -a] for a in range(1, k + 1) if a != j] + [[j], [-j]]


def ph_blocks(i, k):
    return [[a, -a] for a in range(1, k + 1) if a not in (i, i + 1)] + [[i, i + 1, -i, -(i + 1)]]


def tensor_action_oracle(blocks, n, v):
    """Image of basis tuple ``v`` (on primed vertices) under a diagram given by blocks.

    Enumerates every top tuple and keeps those making each block single-valued.
    """
    import itertools

    k = len(v)
    out = {}
    for w in itertools.product(range(1, n + 1), repeat=k):
        if all(len({w[x - 1] if x > 0 else v[-x - 1] for x in b}) == 1 for b in blocks):
            out[w] = 1
    return out


def exact_rank(rows):
    """Row rank over Q by fraction-free Gaussian elimination."""
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def decode_xy_picture(lines):
    """Decode a row of xy-pic diagrams into [(sign, blocks_key)].

    Vertices sit at y = +4 (top row, a) or y = -4 (bottom row, a'); every
    three consecutive x columns form one rank-3 diagram.  Edges are straight
    ``**\\dir{-}`` segments; sign markers sit at y = 0 just left of a diagram,
    and a diagram with no marker carries +.
    """
    import re

    pt = r"\((-?\d+),(-?\d+)\)"
    vertices, edges, marks = set(), [], []
    for line in lines:
        m = re.match(pt + r"\*=0\{\\text\{\\tiny\\textbullet\}\}", line.strip())
        if m:
            vertices.add((int(m.group(1)), int(m.group(2))))
            continue
        m = re.match(pt + r"\*\{\}; " + pt + r"\*\{\} \*\*\\dir\{-\};", line.strip())
        if m:
            a, b, c, d = map(int, m.groups())
            edges.append(((a, b), (c, d)))
            continue
        m = re.match(r"\((-?[\d.]+),(-?[\d.]+)\)\*=0\{([+-])\}", line.strip())
        if m:
            marks.append((float(m.group(1)), m.group(3)))
    xs = sorted({x for x, _ in vertices})
    assert len(xs) % 3 == 0
    k = 3
    groups = [xs[i:i + k] for i in range(0, len(xs), k)]

    def label(p):
        x, y = p
        g = next(i for i, cols in enumerate(groups) if x in cols)
        a = groups[g].index(x) + 1
        return g, (a if y > 0 else -a)

    parent = {}

    def find(u):
        while parent.setdefault(u, u) != u:
            u = parent[u]
        return u

    for p in vertices:
        find(label(p))
    for p, q in edges:
        (g1, u), (g2, v) = label(p), label(q)
        assert g1 == g2
        parent[find((g1, u))] = find((g2, v))
    out = []
    for g, cols in enumerate(groups):
        comps = {}
        for a in list(range(1, k + 1)) + [-a for a in range(1, k + 1)]:
            comps.setdefault(find((g, a)), []).append(a)
        sign = +1
        left = [m for m in marks if m[0] < cols[0] and (g == 0 or m[0] > groups[g - 1][-1])]
        if left:
            sign = +1 if left[0][1] == "+" else -1
        out.append((sign, blocks_key(comps.values())))
    return out


def pictured_terms(text, name):
    """Terms of the picture introduced by ``&name=`` in ``text``."""
    lines = text.splitlines()
    start = next(i for i, ln in enumerate(lines) if ln.strip().startswith(f"&{name}="))
    end = next(i for i in range(start, len(lines)) if lines[i].strip().startswith("\\endxy"))
    return decode_xy_picture(lines[start + 1:end])
