"""Combinatorial layer: words, duality, merges, shuffles, reflection."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polylog.algebra import (Composition, FormalSum, Point, PolylogTerm,
                             SignedComposition, Word, basis_compositions,
                             basis_reflection_matrix, compositions_of_weight,
                             expand_composition_sum, holder_pairs, is_identity,
                             le_to_li, li_reflection, li_to_le, mat_mul,
                             reflection_matrix, shuffle_compositions,
                             shuffle_words)
from polylog.errors import BadBoundary, CapExceeded, NotDecodable

compositions = st.lists(st.integers(1, 4), min_size=1, max_size=5).map(
    lambda parts: Composition(tuple(parts)))


def C(*parts):
    return Composition(tuple(parts))


def W(text):
    return Word.parse(text)


class TestWords:
    def test_encode_examples(self):
        assert str(C(2, 1).word()) == "011"
        assert str(C(1).word()) == "1"
        assert str(C(2, 1, 3).word()) == "011001"

    def test_word_length_is_weight(self):
        assert len(C(3, 1, 2).word()) == 6

    def test_decode_examples(self):
        assert W("011").composition() == C(2, 1)
        assert W("111").composition() == C(1, 1, 1)
        assert W("100111").composition() == C(1, 3, 1, 1)

    def test_decode_rejects_trailing_zero(self):
        with pytest.raises(NotDecodable):
            W("0110").composition()
        with pytest.raises(NotDecodable):
            Word(()).composition()

    @given(compositions)
    def test_round_trip(self, c):
        assert c.word().composition() == c

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=10))
    def test_word_round_trip(self, letters):
        w = Word(tuple(letters))
        if w.is_decodable():
            assert w.composition().word() == w

    def test_parse_str(self):
        assert Composition.parse("2,1,3") == C(2, 1, 3)
        assert str(C(2, 1, 3)) == "2,1,3"
        with pytest.raises(ValueError):
            Composition.parse("2,x")
        with pytest.raises(ValueError):
            Composition((0,))


class TestDual:
    def test_paper_example(self):
        assert C(2, 1, 3).dual() == C(1, 3, 1, 1)

    def test_single_part(self):
        assert C(4).dual() == C(1, 1, 1, 1)

    @given(compositions)
    def test_involution_and_weight(self, c):
        assert c.dual().dual() == c
        assert c.dual().weight == c.weight


class TestMergeExpansions:
    def test_le_to_li_two_parts(self):
        fs = le_to_li(C(1, 1))
        expect = {(PolylogTerm("Li", C(1, 1)),): Fraction(1),
                  (PolylogTerm("Li", C(2)),): Fraction(1)}
        assert fs.terms == expect

    def test_le_to_li_three_parts(self):
        fs = le_to_li(C(1, 2, 3))
        indices = {tp[0].index for tp in fs.terms}
        assert indices == {C(1, 2, 3), C(3, 3), C(1, 5), C(6)}
        assert all(coeff == 1 for coeff in fs.terms.values())

    def test_li_to_le_signs(self):
        fs = li_to_le(C(1, 2, 3))
        by_index = {tp[0].index: coeff for tp, coeff in fs.terms.items()}
        assert by_index[C(1, 2, 3)] == 1
        assert by_index[C(3, 3)] == -1
        assert by_index[C(1, 5)] == -1
        assert by_index[C(6)] == 1

    @given(compositions)
    @settings(max_examples=60)
    def test_round_trip_both_ways(self, c):
        def li_expander(term):
            return le_to_li(term.index)

        def le_expander(term):
            return li_to_le(term.index)

        identity = FormalSum.single(PolylogTerm("Li", c))
        assert expand_composition_sum(li_to_le(c), li_expander) == identity
        identity_le = FormalSum.single(PolylogTerm("Le", c))
        assert expand_composition_sum(le_to_li(c), le_expander) == identity_le


class TestShuffle:
    def test_li1_times_li2(self):
        out = shuffle_words(W("1"), W("01"))
        assert out == {W("101"): 1, W("011"): 2}

    def test_li2_squared(self):
        out = shuffle_words(W("01"), W("01"))
        assert out == {W("0101"): 2, W("0011"): 4}

    def test_li1_times_li4(self):
        out = shuffle_words(W("1"), W("0001"))
        as_comps = {w.composition(): m for w, m in out.items()}
        assert as_comps == {C(4, 1): 2, C(3, 2): 1, C(2, 3): 1, C(1, 4): 1}

    @given(st.lists(st.integers(0, 1), max_size=5), st.lists(st.integers(0, 1), max_size=5))
    @settings(max_examples=80)
    def test_multiplicity_total(self, u, v):
        wu, wv = Word(tuple(u)), Word(tuple(v))
        total = sum(shuffle_words(wu, wv).values())
        assert total == comb(len(u) + len(v), len(u))

    @given(compositions, compositions)
    @settings(max_examples=40)
    def test_decodable_terms_and_lengths(self, c1, c2):
        fs = shuffle_compositions(c1, c2)
        for tp in fs.terms:
            t = tp[0].index
            assert t.length == c1.length + c2.length
            assert t.weight == c1.weight + c2.weight


class TestReflection:
    def test_three_one(self):
        fs = li_reflection(C(3, 1))
        by_index = {tp[0].index: coeff for tp, coeff in fs.terms.items()}
        assert by_index == {C(3, 1): 1, C(2, 1, 1): 1, C(1, 2, 1): 1,
                            C(1, 1, 1, 1): 1}

    def test_single_one(self):
        fs = li_reflection(C(1))
        assert fs.terms == {(PolylogTerm("Li", C(1)),): Fraction(-1)}

    def test_ones_two_ones_pattern(self):
        fs = li_reflection(C(1, 2, 1))
        by_index = {tp[0].index: coeff for tp, coeff in fs.terms.items()}
        assert by_index == {C(1, 2, 1): -1, C(1, 1, 1, 1): -1}

    @given(st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(
        lambda parts: sum(parts) <= 9).map(lambda parts: Composition(tuple(parts))))
    @settings(max_examples=60)
    def test_term_count_and_signs(self, c):
        fs = li_reflection(c)
        count = 1
        for s in c.parts:
            count *= 2 ** (s - 1)
        assert len(fs.terms) == count
        sign = (-1) ** c.length
        assert all(coeff == sign for coeff in fs.terms.values())

    def test_matrix_small(self):
        assert reflection_matrix(1) == [[-1]]
        for w in (2, 3, 4, 5, 6):
            mat = reflection_matrix(w)
            assert is_identity(mat_mul(mat, mat))

    def test_matrix_cap(self):
        with pytest.raises(CapExceeded):
            reflection_matrix(11)

    def test_basis_restriction_closed(self):
        for w in (2, 3, 5):
            mat = basis_reflection_matrix(w)
            assert is_identity(mat_mul(mat, mat))


class TestEnumerations:
    def test_weight_count_and_order(self):
        comps = compositions_of_weight(5)
        assert len(comps) == 16
        assert comps[0] == C(5)
        assert comps[-1] == C(1, 1, 1, 1, 1)
        assert comps == sorted(comps, key=lambda c: c.parts, reverse=True)

    def test_basis_examples(self):
        assert basis_compositions(2) == [C(2), C(1, 1)]
        assert len(basis_compositions(5)) == 8

    def test_all_parts_in_one_two(self):
        for c in basis_compositions(7):
            assert set(c.parts) <= {1, 2}


class TestHolder:
    def test_m2(self):
        pairs = holder_pairs(W("01"))
        assert pairs == [(W("01"), Word(())), (W("1"), W("1")), (Word(()), W("01"))]

    def test_boundary_errors(self):
        with pytest.raises(BadBoundary):
            holder_pairs(W("11"))
        with pytest.raises(BadBoundary):
            holder_pairs(W("010"))
        with pytest.raises(BadBoundary):
            holder_pairs(W("1"))

    def test_pair_count_and_weights(self):
        word = C(4, 1).word()  # x0^3 x1^2
        pairs = holder_pairs(word)
        assert len(pairs) == 6
        for i, (suffix, flipped) in enumerate(pairs):
            assert len(suffix) + len(flipped) == 5
            assert len(flipped) == i
            if len(suffix):
                assert suffix.is_decodable()
            if len(flipped):
                assert flipped.is_decodable()

    def test_zeta_m_pattern(self):
        # words x0^(m-1) x1 split into Li_(m-i+1) x Li_(1,...,1) pairs
        m = 5
        pairs = holder_pairs(C(m).word())
        for i in range(1, m + 1):
            suffix, flipped = pairs[i - 1]
            assert suffix.composition() == C(m - i + 1)
            if i > 1:
                assert flipped.composition() == C(*([1] * (i - 1)))
        assert pairs[m][1].composition() == C(2, *([1] * (m - 2)))


class TestSignedComposition:
    def test_convergence_predicate(self):
        assert SignedComposition(((2, 1), (1, 1))).is_convergent()
        assert SignedComposition(((1, -1), (1, 1))).is_convergent()
        assert not SignedComposition(((1, 1), (2, -1))).is_convergent()

    def test_validation(self):
        with pytest.raises(ValueError):
            SignedComposition(())
        with pytest.raises(ValueError):
            SignedComposition(((0, 1),))
        with pytest.raises(ValueError):
            SignedComposition(((2, 2),))

    def test_accessors(self):
        sc = SignedComposition(((3, -1), (1, 1)))
        assert sc.exponents == (3, 1) and sc.signs == (-1, 1)
        assert sc.weight == 4
        assert str(sc) == "3!,1"


class TestPolylogTerm:
    def test_divergent_rejected(self):
        with pytest.raises(ValueError):
            PolylogTerm("Li", C(1, 2), Point.ONE)
        PolylogTerm("Li", C(2, 1), Point.ONE)  # fine

    def test_formal_sum_homogeneity(self):
        fs = FormalSum.single(PolylogTerm("Li", C(2))) + \
            FormalSum.single(PolylogTerm("Li", C(1, 1)))
        assert fs.is_homogeneous()
        assert fs.weight() == 2
        mixed = fs + FormalSum.single(PolylogTerm("Li", C(3)))
        assert not mixed.is_homogeneous()

    def test_cancellation(self):
        fs = FormalSum.single(PolylogTerm("Li", C(2)))
        assert (fs - fs).terms == {}
