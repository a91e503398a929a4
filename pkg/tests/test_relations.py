import json

import pytest

from partalg import algebra as alg
from partalg.algebra import AlgebraElement
from partalg.errors import UnknownSuiteError
from partalg.jucys_murphy import JMCache
from partalg.relations import SUITE_NAMES, verify_all, verify_suite

ALL_16 = {
    "hr_presentation", "hr_derived", "prel_a", "star_invariance", "sigma_split", "lemma_f10",
    "thm_ab", "thm_ac", "pairwise_commute", "jm_commute", "centrality", "c_e", "n_pres",
    "sigma_involution", "r_2", "alt_recursion",
}


@pytest.fixture(scope="module")
def caches():
    return {k: JMCache(k).build() for k in (2, 3, 4)}


def test_suite_names():
    assert set(SUITE_NAMES) == ALL_16 and len(SUITE_NAMES) == 16


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("suite", sorted(ALL_16))
def test_suite_passes(caches, suite, k):
    rep = verify_suite(suite, k, caches[k])
    assert rep.passed, rep.first_failure()
    if k == 4:
        assert not rep.vacuous
    assert all(c.passed for c in rep.checks)


def test_example_pairs_at_rank_2(caches):
    rep = verify_suite("pairwise_commute", 2, caches[2])
    assert rep.passed and not rep.vacuous
    c = caches[2]
    assert c.L(2) * c.L(3) == c.L(3) * c.L(2)


def test_verify_all_rank_2():
    reps = verify_all(2)
    assert len(reps) == 16
    assert all(r.passed for r in reps)


def test_rank_zero_is_vacuous():
    reps = verify_all(0)
    assert len(reps) == 16
    for r in reps:
        assert r.vacuous
        assert "VACUOUS" in r.summary()
        assert r.to_json()["vacuous"] is True


def test_sigma_involution_covers_proof_steps(caches):
    rep = verify_suite("sigma_involution", 4, caches[4])
    steps = {c.id for c in rep.checks if c.id != "sigma^2 = 1"}
    assert len(steps) == 13
    # each step needs s_i, so i runs over 2..k-1; i = k is counted as out of range
    for step in steps:
        assert sorted(c.indices for c in rep.checks if c.id == step) == [(2,), (3,)]
    assert rep.out_of_range >= 13


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        verify_suite("nope", 2)
    with pytest.raises(ValueError):
        verify_suite("r_2", 3, JMCache(2))


def test_reports_deterministic():
    a = [r.dumps() for r in verify_all(3)]
    b = [r.dumps() for r in verify_all(3)]
    assert a == b
    for text in a:
        assert "elapsed" not in json.loads(text)


# -- alternative readings: notes are produced and the variants really fail --------------------

@pytest.mark.parametrize("suite,needle", [
    ("hr_presentation", "j = i-1"),
    ("thm_ab", "without the inner s_i"),
    ("alt_recursion", "p_i+1 there"),
    ("n_pres", "square on both sides"),
    ("n_pres", "j = i-1"),
])
def test_variant_notes(caches, suite, needle):
    rep = verify_suite(suite, 4, caches[4])
    assert any(needle in n for n in rep.notes), rep.notes


def test_thm_ab_variant_without_inner_s_fails(caches):
    c = caches[4]
    s, p, sg = c.s, c.p, c.sigma
    for i in (2, 3):
        lhs = sg(2 * i + 2) * p(i - 1)
        variant = s(i - 1) * sg(2 * i) * p(i + 1) * s(i) * s(i - 1)
        fixed = s(i - 1) * s(i) * sg(2 * i) * p(i + 1) * s(i) * s(i - 1)
        assert lhs == fixed
        assert lhs != variant


def test_squared_idempotent_form_is_trivial():
    ph = alg.p_half(1, 2)
    # p^2 = p^2 holds for every element, so it says nothing
    assert ph * ph == ph * ph
    assert (ph * ph) == ph


# -- mutation sensitivity ------------------------------------------------------------

def flip_one_term(elem, which):
    d, c = elem.sorted_terms()[which]
    return elem - AlgebraElement.from_diagram(d, c).scale(2)


@pytest.mark.parametrize("which", range(5))
def test_L2_sign_flip_detected(which):
    L2 = JMCache(2).L(4)
    assert len(L2) == 5
    bad = JMCache(2, L_overrides={4: flip_one_term(L2, which)})
    reps = [verify_suite(s, 2, bad) for s in ("jm_commute", "pairwise_commute")]
    assert sum(len(r.failures) for r in reps) >= 1


@pytest.mark.parametrize("family,doubled", [("L", 2), ("sigma", 4), ("sigma", 3)])
def test_other_base_case_flips_detected(family, doubled):
    base = getattr(JMCache(2), family)(doubled)
    bad_elem = flip_one_term(base, 0)
    key = "L_overrides" if family == "L" else "sigma_overrides"
    bad = JMCache(2, **{key: {doubled: bad_elem}})
    reps = verify_all(2, bad)
    assert any(not r.passed for r in reps)


def test_unmodified_cache_is_clean():
    assert all(r.passed for r in verify_all(2, JMCache(2)))
