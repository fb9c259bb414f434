import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slidergraphs.words import Alphabet, cyclic_shift, debruijn_successors, is_debruijn_transition

ABC = Alphabet(3, ("a", "b", "c"))


def words(max_m=4, max_n=8):
    return st.integers(1, max_m).flatmap(
        lambda m: st.tuples(st.just(m), st.lists(st.integers(0, m - 1), min_size=1, max_size=max_n).map(tuple))
    )


class TestAlphabet:
    def test_default_labels(self):
        assert Alphabet(3).labels == ("0", "1", "2")

    def test_single_char_text_form(self):
        assert ABC.format((0, 1, 2)) == "abc"
        assert ABC.parse("cab") == (2, 0, 1)

    def test_multi_char_text_form_uses_dots(self):
        a = Alphabet(2, ("e", "ab"))
        assert a.format((1, 0, 1)) == "ab.e.ab"
        assert a.parse("ab.e.ab") == (1, 0, 1)

    def test_eleven_letters_are_dot_joined(self):
        a = Alphabet(11)
        assert a.format((10, 1)) == "10.1"

    @pytest.mark.parametrize("labels", [("a", "a"), ("a",), ("a b", "c")])
    def test_bad_labels(self, labels):
        with pytest.raises(ValueError):
            Alphabet(2, labels)

    def test_size_must_be_positive(self):
        with pytest.raises(ValueError):
            Alphabet(0)

    def test_unknown_letter(self):
        with pytest.raises(ValueError, match="unknown letter"):
            ABC.parse("abd")


class TestCyclicShift:
    def test_examples(self):
        assert cyclic_shift(ABC.parse("abc"), 1) == ABC.parse("bca")
        w = (0, 1, 1, 0)
        assert cyclic_shift(w, 0) == w
        assert cyclic_shift(w, len(w)) == w
        assert cyclic_shift(w, -1) == (0, 0, 1, 1)

    def test_empty(self):
        with pytest.raises(ValueError):
            cyclic_shift((), 1)

    @given(words(), st.integers(-20, 20), st.integers(-20, 20))
    def test_composition(self, mw, j, k):
        _, w = mw
        assert cyclic_shift(cyclic_shift(w, j), k) == cyclic_shift(w, j + k)

    @given(words(), st.integers(-20, 20))
    def test_definition(self, mw, k):
        _, w = mw
        n = len(w)
        r = cyclic_shift(w, k)
        assert all(r[i] == w[(i + k) % n] for i in range(n))


class TestDeBruijnTransitions:
    def test_binary(self):
        arrows = debruijn_successors((0, 1, 0), 2)
        assert [(a.dst, a.label) for a in arrows] == [((1, 0, 0), 0), ((1, 0, 1), 1)]

    def test_unary_loop(self):
        (arrow,) = debruijn_successors((0, 0, 0), 1)
        assert arrow.src == arrow.dst == (0, 0, 0)

    def test_ternary_by_enumeration(self):
        dsts = {ABC.format(a.dst) for a in debruijn_successors(ABC.parse("ab"), 3)}
        # oracle: every word "b?" for ? in the alphabet
        assert dsts == {"b" + c for c in "abc"} == {"ba", "bb", "bc"}

    def test_is_transition(self):
        assert is_debruijn_transition((0, 1, 0), (1, 0, 0))
        assert is_debruijn_transition((0, 1, 0), (1, 0, 1))
        assert not is_debruijn_transition((0, 1, 0), (1, 1, 0))

    def test_mismatch_errors(self):
        with pytest.raises(ValueError):
            is_debruijn_transition((0, 1), (0, 1, 0))
        with pytest.raises(ValueError):
            is_debruijn_transition((0, 1), (0, 2), m=2)

    @given(words())
    def test_successors_are_transitions(self, mw):
        m, w = mw
        arrows = debruijn_successors(w, m)
        assert len(arrows) == m
        assert all(is_debruijn_transition(w, a.dst) for a in arrows)

    @pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (3, 2)])
    def test_transition_iff_successor(self, m, n):
        for w in itertools.product(range(m), repeat=n):
            succ = {a.dst for a in debruijn_successors(w, m)}
            for w2 in itertools.product(range(m), repeat=n):
                assert is_debruijn_transition(w, w2) == (w2 in succ)
