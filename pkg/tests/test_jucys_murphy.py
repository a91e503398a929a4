import pytest
from hypothesis import given
import hypothesis.strategies as st

from oracles import blocks_key, identity_blocks, p_blocks, ph_blocks, product_bfs, s_blocks
from partalg import algebra as alg
from partalg import diagrams as dg
from partalg.algebra import AlgebraElement
from partalg.errors import IndexOutOfRangeError
from partalg.jucys_murphy import HalfIndex, JMCache, expand, in_subalgebra

K = 4


@pytest.fixture(scope="module")
def cache():
    return JMCache(K).build()


def signed_terms(elem):
    """{blocks_key: int} for an element whose coefficients are constants."""
    out = {}
    for d, c in elem.terms.items():
        assert c.degree == 0
        out[blocks_key(d.blocks)] = c.coeffs[0]
    return out


def oracle_sum(summands, k):
    """summands: list of (sign, [block lists]); each word multiplied out independently."""
    out = {}
    for sign, word in summands:
        key, power = product_bfs(word, k)
        assert power == 0
        out[key] = out.get(key, 0) + sign
    return {key: c for key, c in out.items() if c}


# -- base cases --------------------------------------------------------------------

def test_base_cases(cache):
    one = AlgebraElement.one(K)
    # plain ints are doubled indices
    for idx in ("1/2", "1", "3/2"):
        assert cache.sigma(idx) == one
    assert cache.sigma(4) == cache.sigma("2") == alg.s(1, K)
    assert cache.L(0).is_zero() and cache.L("1/2").is_zero()
    assert cache.L(2) == cache.L(HalfIndex.of(1)) == alg.p(1, K)


def test_expand_small_ranks():
    assert expand("sigma", 1, 2) == AlgebraElement.one(2)
    assert expand("L", 1, 1) == alg.p(1, 1)
    with pytest.raises(ValueError):
        expand("M", 1, 2)


# -- the two worked elements -------------------------------------------------------

def L2_words(k):
    s1, p1, p2, ph1 = s_blocks(1, k), p_blocks(1, k), p_blocks(2, k), ph_blocks(1, k)
    return [
        (-1, [s1, p1, ph1]),
        (-1, [ph1, p1, s1]),
        (+1, [ph1, p1, p2, ph1]),
        (+1, [p2]),
        (+1, [s1]),
    ]


def sigma3_words(k):
    s1, s2 = s_blocks(1, k), s_blocks(2, k)
    p1, p2 = p_blocks(1, k), p_blocks(2, k)
    ph1, ph2 = ph_blocks(1, k), ph_blocks(2, k)
    # sigma_2 = s_1 and L_1 = p_1 substituted by hand
    return [
        (+1, [s1, s2, s1, s2, s1]),
        (+1, [s2, ph1, p1, s2, ph1, s2]),
        (+1, [ph1, p1, s2, ph1]),
        (-1, [s2, ph1, p1, s1, ph2, p2, ph1]),
        (-1, [ph1, p2, ph2, s1, p1, ph1, s2]),
    ]


SIGMA3_PICTURED = {
    blocks_key([[1, -1], [2, -3], [3, -2]]): +1,
    blocks_key([[1, 3, -2], [2, -1, -3]]): +1,
    blocks_key([[1, 2, -3], [-1, -2, 3]]): +1,
    blocks_key([[1, -1, -2, 3], [2, -3]]): -1,
    blocks_key([[1, 2, -1, -3], [-2, 3]]): -1,
}


def test_L2_term_by_term():
    elem = expand("L", 2, 3)
    assert signed_terms(elem) == oracle_sum(L2_words(3), 3)
    assert sorted(signed_terms(elem).values()) == [-1, -1, 1, 1, 1]


def test_sigma3_term_by_term():
    elem = expand("sigma", 3, 3)
    got = signed_terms(elem)
    assert got == oracle_sum(sigma3_words(3), 3)
    assert got == SIGMA3_PICTURED
    # five summands, no cancellation; the positive identity-like term s_2 is one of them
    assert sorted(got.values()) == [-1, -1, 1, 1, 1]
    assert got[blocks_key(s_blocks(2, 3))] == 1


def test_worked_elements_stable_under_embedding(cache):
    assert cache.L(4) == expand("L", 2, 2).embed(K)
    assert cache.sigma(6) == expand("sigma", 3, 3).embed(K)


# -- alternative forms --------------------------------------------------------------

@pytest.mark.parametrize("i", [2, 3])
def test_sigma_half_alt(cache, i):
    assert cache.sigma_half_alt(i) == cache.sigma(2 * i + 1)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_L_half_alt(cache, i):
    alt = cache.L_half_alt(i)
    assert alt == cache.L(2 * i + 1)
    assert alt.star() == alt


def test_alt_forms_small_rank():
    c = JMCache(3)
    assert c.L_half_alt(2) == c.L(5)
    assert c.sigma_half_alt(2) == c.sigma(5)
    with pytest.raises(IndexOutOfRangeError):
        c.sigma_half_alt(1)
    with pytest.raises(IndexOutOfRangeError):
        c.L_half_alt(0)


# -- structure -----------------------------------------------------------------------

def test_self_adjoint(cache):
    for d in range(0, 2 * K + 1):
        assert cache.L(d).star() == cache.L(d)
        if d:
            assert cache.sigma(d).star() == cache.sigma(d)


def test_sigma_involutive(cache):
    one = cache.one()
    for d in range(1, 2 * K + 1):
        sg = cache.sigma(d)
        assert sg * sg == one, d


def test_sigma_split(cache):
    for i in range(1, K):
        sh, s = cache.sigma(2 * i + 1), cache.s(i)
        assert sh * s == s * sh == cache.sigma(2 * i + 2)
        assert sh * cache.sigma(2 * i + 2) == s


def test_pairwise_commutative(cache):
    Ls = [cache.L(d) for d in range(0, 2 * K + 1)]
    for a in range(len(Ls)):
        for b in range(a + 1, len(Ls)):
            assert Ls[a] * Ls[b] == Ls[b] * Ls[a], (a, b)


def test_membership(cache):
    for d in range(0, 2 * K + 1):
        assert in_subalgebra(cache.L(d), d)
        if d:
            assert in_subalgebra(cache.sigma(d), d)


def test_half_members_at_tight_rank():
    # L_{i+1/2} and sigma_{i+1/2} built at rank i+1 lie in the half subalgebra
    for i in range(1, K):
        c = JMCache(i + 1)
        assert c.L(2 * i + 1).half_flag
        assert c.sigma(2 * i + 1).half_flag


def test_not_in_smaller_subalgebra(cache):
    assert not in_subalgebra(cache.L(4), 3)
    assert not in_subalgebra(cache.L(3), 2)


def test_central_elements(cache):
    assert cache.central("1") == alg.p(1, K)
    assert cache.central("3/2") == alg.p(1, K) + cache.L(3)
    c2 = JMCache(2).central("2")
    for g in (alg.s(1, 2), alg.p(1, 2), alg.p(2, 2), alg.p_half(1, 2)):
        assert c2 * g == g * c2
    # z_{3/2} at rank 2 commutes with the half subalgebra generators
    ch = JMCache(2).central("3/2")
    for g in (alg.p(1, 2), alg.p_half(1, 2)):
        assert ch * g == g * ch


def test_cli_central_matches_sum():
    assert expand("central", "3/2", 2) == sum(
        (expand("L", x, 2) for x in ("1/2", 1, "3/2")), AlgebraElement.zero(2)
    )


def test_reproducible():
    a = JMCache(3).build()
    b = JMCache(3).build()
    for d in range(0, 7):
        assert a.L(d) == b.L(d)
        assert a.L(d).to_json() == b.L(d).to_json()


def test_rank_too_small():
    c = JMCache(2)
    with pytest.raises(IndexOutOfRangeError):
        c.L("5/2")
    with pytest.raises(IndexOutOfRangeError):
        c.sigma("3")
    with pytest.raises(IndexOutOfRangeError):
        c.sigma(0)
    with pytest.raises(IndexOutOfRangeError):
        c.central(0)


def test_overrides_replace_a_member():
    flipped = alg.p(1, 2).scale(-1)
    c = JMCache(2, L_overrides={2: flipped})
    assert c.L(2) == flipped
    assert c.L(4) != JMCache(2).L(4)


# -- HalfIndex -----------------------------------------------------------------------

@pytest.mark.parametrize("text,doubled", [("3", 6), (3, 6), ("5/2", 5), ("2.5", 5), ("0", 0), ("1/2", 1)])
def test_half_index_parse(text, doubled):
    h = HalfIndex.parse(text)
    assert h.doubled == doubled
    assert HalfIndex.parse(str(h)) == h


@pytest.mark.parametrize("bad", ["1/3", "-1", "x", "0.25"])
def test_half_index_rejects(bad):
    with pytest.raises(ValueError):
        HalfIndex.parse(bad)


@given(st.integers(0, 40))
def test_half_index_properties(d):
    h = HalfIndex(d)
    assert h.is_half == (d % 2 == 1)
    assert h.floor == d // 2
    assert h.min_rank == -(-d // 2)
    assert HalfIndex.of(h.floor, h.is_half) == h
    assert (h < HalfIndex(d + 1)) and hash(h) == hash(HalfIndex(d))
