import pytest

from modasc import words
from modasc.counting import fubini

# counts of modified ascent sequences and of the primitive ones, n = 0..9,
# frozen from the recursive generator and cross-checked against the
# endofunction oracle below
MODASC_COUNTS = [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240]
PRIM_COUNTS = [1, 1, 1, 2, 5, 16, 61, 271, 1372, 7795]


def test_parse_word_forms():
    assert words.parse_word("1 3 1 2") == (1, 3, 1, 2)
    assert words.parse_word("1312") == (1, 3, 1, 2)
    assert words.parse_word("") == ()
    with pytest.raises(ValueError):
        words.parse_word("1 0 2")


def test_format_word_roundtrip():
    for text in ("", "1", "1 3 1 2", "1 2 2 1 3"):
        assert words.format_word(words.parse_word(text)) == text


def test_is_cayley():
    assert words.is_cayley(())
    assert words.is_cayley((1, 2, 1, 3))
    assert not words.is_cayley((2, 3))  # misses the value 1
    assert not words.is_cayley((1, 3))  # gap at 2


def test_statistics_by_hand():
    st = words.statistics((1, 3, 1, 2))
    assert st.asc == 2 and st.des == 1
    assert st.asctops == ((1, 1), (2, 3), (4, 2))
    assert st.nub == ((1, 1), (2, 3), (4, 2))
    assert st.lrmin == ((1, 1),)
    assert st.wlrmin == ((1, 1), (3, 1))
    assert st.rlmax == ((2, 3), (4, 2))
    assert st.wrlmax == ((2, 3), (4, 2))
    assert st.rlmin == ((3, 1), (4, 2))
    assert st.wrlmin == ((1, 1), (3, 1), (4, 2))


def test_statistics_empty():
    st = words.statistics(())
    assert st.asc == 0 and st.des == 0 and st.asctops == ()


def test_is_modasc_examples():
    assert words.is_modasc((1,))
    assert words.is_modasc((1, 1, 2))
    assert words.is_modasc((1, 3, 1, 2))
    assert not words.is_modasc((1, 2, 1, 2))  # second 2 is an ascent top
    assert not words.is_modasc((2, 1))  # leftmost 1 is not an ascent top
    assert not words.is_modasc((1, 3))  # not a Cayley permutation


def test_generation_counts():
    for n, want in enumerate(MODASC_COUNTS):
        assert len(words.generate_modasc(n)) == want
    for n, want in enumerate(PRIM_COUNTS):
        assert len(words.generate_prim(n)) == want


def test_generate_modasc_order():
    assert words.generate_modasc(3) == [
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 1),
        (1, 2, 2),
        (1, 2, 3),
    ]
    assert words.generate_prim(0) == [()]
    assert words.generate_prim(3) == [(1, 2, 1), (1, 2, 3)]


def test_generation_matches_endofunction_oracle():
    for n in range(6):
        cayley = list(words.iter_cayley(n))
        assert len(cayley) == fubini(n)
        assert {x for x in cayley if words.is_modasc(x)} == set(words.iter_modasc(n))
        assert {x for x in cayley if words.is_prim(x)} == set(words.iter_prim(n))


def test_iter_cayley_cap():
    with pytest.raises(ValueError):
        next(words.iter_cayley(words.ENDOFUNCTION_CAP + 1))


def test_collapse_flats_example():
    d = words.collapse_flats(words.parse_word("1113122224211"))
    assert d.primitive == (1, 3, 1, 2, 4, 2, 1)
    assert d.multiplicities == (3, 1, 1, 4, 1, 1, 2)
    assert words.insert_flats(d) == words.parse_word("1113122224211")


def test_collapse_flats_roundtrip_small():
    for n in range(1, 7):
        for x in words.iter_modasc(n):
            d = words.collapse_flats(x)
            assert words.is_prim(d.primitive)
            assert words.insert_flats(d) == x


def test_insert_flats_validation():
    from modasc.words import FlatDecomposition

    with pytest.raises(ValueError):
        words.insert_flats(FlatDecomposition((1, 2), (1,)))
    with pytest.raises(ValueError):
        words.insert_flats(FlatDecomposition((1, 2), (1, 0)))
    with pytest.raises(ValueError):
        words.insert_flats(FlatDecomposition((1, 1), (1, 1)))
