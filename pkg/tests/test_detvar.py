"""Signed permutation calculus and the skew-symmetric fibre theorem."""

import pytest
from hypothesis import given, settings, strategies as st

from cograss import detvar
from cograss.checks import (
    check_braid_embedding,
    check_detvar_factorizations,
    check_type_d_length_agreement,
)
from cograss.cominuscule import build_context
from cograss.weyl import WeylGroup
from cograss.rootsys import build_diagram


def test_word_to_perm_examples():
    assert detvar.word_to_perm(4, ()).values == (1, 2, 3, 4)
    assert detvar.word_to_perm(4, (1,)).values == (2, 1, 3, 4)
    for n in (4, 5, 6):
        wj_word = detvar.perm_to_word(detvar.levi_longest_perm(n))
        assert detvar.word_to_perm(n, wj_word) == detvar.levi_longest_perm(n)
        assert detvar.levi_longest_perm(n).values == tuple(range(n, 0, -1))


def test_perm_to_word_examples():
    assert detvar.perm_to_word(detvar.identity_perm(5)) == ()
    assert detvar.perm_to_word(detvar.SignedPermutation(4, (2, 1, 3, 4))) == (1,)
    for n in (4, 5, 6):
        w0 = detvar.longest_perm(n)
        assert w0.length() == n * (n - 1)
        assert len(detvar.perm_to_word(w0)) == n * (n - 1)


def test_signed_permutation_validation():
    with pytest.raises(ValueError, match="distinct"):
        detvar.SignedPermutation(3, (1, 1, 2))
    with pytest.raises(ValueError, match="flip"):
        detvar.SignedPermutation(3, (1, 2, 5))  # 2 and 5 are flips of each other
    with pytest.raises(ValueError, match="parity"):
        detvar.SignedPermutation(3, (6, 2, 3))
    with pytest.raises(ValueError, match="1..2n"):
        detvar.SignedPermutation(3, (1, 2, 9))


def test_skew_rank_element_examples():
    assert detvar.skew_rank_element(4, 2).values == (3, 4, 7, 8)
    assert detvar.skew_rank_element(6, 0) == detvar.identity_perm(6)
    assert detvar.skew_rank_element(5, 4).values == (5, 7, 8, 9, 10)
    with pytest.raises(ValueError, match="even"):
        detvar.skew_rank_element(5, 3)
    with pytest.raises(ValueError, match="0 <= r"):
        detvar.skew_rank_element(5, 6)


def test_chain_elements():
    for n in (4, 5, 6, 7):
        assert detvar.chain_perm(n, n - 1) == detvar.generator_perm(n, n)
    assert detvar.chain_perm(4, 2) == detvar.word_to_perm(4, (3, 2, 4))
    assert detvar.chain_word(4, 1) == (2, 1, 3, 2, 4)
    assert detvar.chain_perm(4, 1).length() == 5
    with pytest.raises(ValueError, match="chain index"):
        detvar.chain_word(4, 4)


def test_chain_closed_form():
    # corrected one-line form, derived from the recursion
    for n in (4, 5, 6, 7, 8):
        for i in range(1, n):
            expected = (tuple(range(1, i)) + tuple(range(i + 2, n + 1))
                        + (2 * n - i, 2 * n - i + 1))
            assert detvar.chain_perm(n, i).values == expected


@pytest.mark.parametrize("n", range(4, 9))
def test_braid_relations_in_embedding(n):
    assert check_braid_embedding(n)


def test_relation_report_ranges():
    rep4 = detvar.check_relations(4)
    assert rep4.all_hold
    assert not [c for c in rep4.checks if c[0] == "chain-shift"]  # vacuous at n=4
    rep6 = detvar.check_relations(6)
    assert rep6.all_hold
    assert [p for cid, p, _ in rep6.checks if cid == "chain-shift"] == \
        ["n=6 i=1", "n=6 i=2"]
    rep7 = detvar.check_relations(7)
    assert rep7.all_hold
    assert any(cid == "twisted-exchange" for cid, _, _ in rep7.checks)


@pytest.mark.parametrize("n", range(4, 9))
def test_relations_hold(n):
    assert detvar.check_relations(n).all_hold


@pytest.mark.parametrize("n", range(4, 9))
def test_factorizations_and_dual_strings(n):
    assert check_detvar_factorizations(n)


def test_length_agreement_exhaustive_d4():
    assert check_type_d_length_agreement(4)


@settings(max_examples=120, deadline=None)
@given(st.integers(4, 7), st.lists(st.integers(0, 100), max_size=14))
def test_length_agreement_random_words(n, raw):
    word = tuple(1 + (x % n) for x in raw)
    perm = detvar.word_to_perm(n, word)
    group = WeylGroup(build_diagram("D", n))
    elem = group.from_word(word)
    assert perm.length() == elem.length() <= len(word)
    assert detvar.word_to_perm(n, detvar.perm_to_word(perm)) == perm
    assert group.from_word(detvar.perm_to_word(perm)) == elem


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 7), st.lists(st.integers(0, 100), max_size=12))
def test_window_commutes_with_flip(n, raw):
    perm = detvar.word_to_perm(n, tuple(1 + (x % n) for x in raw))
    win = perm.window
    for i in range(1, 2 * n + 1):
        assert win[2 * n - i] == 2 * n + 1 - win[i - 1]
    assert sum(1 for v in perm.values if v > n) % 2 == 0


def test_fibre_rank_examples():
    assert detvar.fibre_rank(4, 2)[0] == 2
    assert detvar.fibre_rank(5, 2)[0] == 2
    rank, witness = detvar.fibre_rank(6, 6)
    assert rank == 0 and witness.is_identity()


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fibre_rank_full_sweep(n):
    nbar = detvar.even_rank(n)
    for r in range(0, nbar + 1, 2):
        rank, witness = detvar.fibre_rank(n, r)
        assert rank == nbar - r
        assert witness == detvar.skew_rank_element(n, nbar - r)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_intersect_identity_sweep(n):
    for r in range(0, detvar.even_rank(n) + 1, 2):
        assert detvar.intersect_identity(n, r)


def test_element_roundtrip_through_context():
    ctx = build_context("D", 5, 5)
    perm = detvar.skew_rank_element(5, 2)
    elem = detvar.element_of(ctx, perm)
    assert elem.length() == perm.length()
    assert elem.support() <= set(ctx.finite_nodes)


def test_parse_perm():
    assert detvar.parse_perm("[3,4,7,8]") == detvar.SignedPermutation(4, (3, 4, 7, 8))
    assert str(detvar.skew_rank_element(4, 2)) == "[3,4,7,8]"
    with pytest.raises(ValueError):
        detvar.parse_perm("3,4,7,8")
