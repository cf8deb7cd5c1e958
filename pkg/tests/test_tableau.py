from __future__ import annotations

import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evacshuffle import BOX, Partition, Rectangle, SkewShape, SkewTableau
from evacshuffle.tableau import (
    complement,
    content,
    format_rows,
    is_ballot,
    is_semistandard,
    is_standard,
    parse_rows,
    rotate180,
    standardize,
    transpose,
    transpose_tableau,
)
from oracles import ballot_oracle, complement_oracle, reading_positions, standardize_oracle, transpose_oracle


@st.composite
def partitions_in(draw, max_rows=5, max_cols=6):
    rows = draw(st.integers(0, max_rows))
    parts = sorted(draw(st.lists(st.integers(1, max_cols), min_size=rows, max_size=rows)), reverse=True)
    return Partition(parts)


@st.composite
def semistandard_fillings(draw, max_rows=4, max_cols=5):
    """Random skew shape filled row-major with values forced to respect both orderings."""
    outer = draw(partitions_in(max_rows, max_cols))
    inner_parts = [draw(st.integers(0, p)) for p in outer]
    for k in range(1, len(inner_parts)):
        inner_parts[k] = min(inner_parts[k], inner_parts[k - 1])
    shape = SkewShape(outer, Partition([p for p in inner_parts if p]))
    entries = {}
    for r, c in shape.cells():
        lo = 1
        if (r, c - 1) in entries:
            lo = max(lo, entries[(r, c - 1)])
        if (r - 1, c) in entries:
            lo = max(lo, entries[(r - 1, c)] + 1)
        entries[(r, c)] = lo + draw(st.integers(0, 2))
    return SkewTableau.from_dict(shape, entries)


# -- partitions -----------------------------------------------------------


def test_complement_and_transpose_examples():
    assert complement((3, 2), Rectangle(3, 4)) == (4, 2, 1)
    assert transpose((4, 2, 1)) == (3, 2, 1, 1)


@given(partitions_in(), st.integers(0, 3), st.integers(0, 3))
def test_complement_matches_oracle(p, extra_rows, extra_cols):
    rect = Rectangle(max(len(p), 1) + extra_rows, max(p, default=1) + extra_cols)
    assert complement(p, rect) == complement_oracle(p, rect.rows, rect.cols)
    assert complement(complement(p, rect), rect) == p


@given(partitions_in())
def test_transpose_matches_oracle_and_is_involution(p):
    assert transpose(p) == transpose_oracle(p)
    assert transpose(transpose(p)) == p
    assert Partition(p).transpose().size == Partition(p).size


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Partition.parse("2,x")
    with pytest.raises(ValueError):
        Rectangle.parse("4by5")


def test_partition_parse_and_cells():
    p = Partition.parse("3,1")
    assert p == (3, 1)
    assert p.cells() == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert set(p.corners()) == {(1, 3), (2, 1)}
    assert set(p.cocorners()) == {(1, 4), (2, 2), (3, 1)}
    assert Partition.parse("") == ()


def test_rectangle_partitions_count():
    # partitions in an a x b box number C(a+b, a)
    assert len(list(Rectangle(3, 4).partitions())) == 35
    assert Rectangle.parse("4x5") == Rectangle(4, 5)


# -- skew shapes ----------------------------------------------------------


def test_skew_shape_corners():
    shape = SkewShape(Partition((4, 3, 1)), Partition((2, 1)))
    assert set(shape.outer_corners()) == {(1, 4), (2, 3), (3, 1)}
    assert set(shape.inner_corners()) == {(1, 3), (2, 2), (3, 1)}
    assert set(shape.inner_cocorners()) == {(1, 2), (2, 1)}


def test_skew_shape_rejects_non_nested():
    with pytest.raises(ValueError):
        SkewShape(Partition((2,)), Partition((3,)))


@given(partitions_in(4, 5))
def test_reading_order_matches_oracle(p):
    shape = SkewShape(p, Partition(p[1:]) if len(p) > 1 else Partition())
    assert shape.reading_cells() == reading_positions(shape)


# -- tableaux -------------------------------------------------------------


@given(semistandard_fillings())
def test_generated_fillings_are_semistandard(T):
    assert is_semistandard(T)


@given(semistandard_fillings())
def test_standardize_matches_oracle(T):
    S = standardize(T)
    assert is_standard(S)
    assert S.to_dict() == standardize_oracle(T.to_dict(), T.shape)


@given(st.lists(st.integers(1, 4), max_size=10))
def test_ballot_matches_oracle(word):
    assert is_ballot(word) == ballot_oracle(word)


def test_ballot_skips_box():
    assert is_ballot([2, BOX, 1, 1])
    assert not is_ballot([1, BOX, 2])


def test_standardization_example():
    T = parse_rows(["...11", "..122", "..3", "12", "2"])
    assert "".join(str(e) for e in T.reading_word()) == "212312211"
    S = standardize(T)
    assert format_rows(S) == ["...34", "..278", "..9", "16", "5"]
    assert S.reading_word() == [5, 1, 6, 9, 2, 7, 8, 3, 4]
    assert is_ballot([2, 1, 2, 3, 1, 2, 2, 1, 1])
    assert content(T) == [4, 4, 1]


def test_semistandard_rejects_column_repeat():
    T = parse_rows(["1", "1"])
    assert not is_semistandard(T)


def test_box_rank_in_semistandard_check():
    T = parse_rows(["1X", "2"])
    assert is_semistandard(T, box_rank=1.5)
    assert not is_semistandard(T, box_rank=0.5)
    assert is_semistandard(T, skip_box=True)


@given(semistandard_fillings())
def test_format_parse_round_trip(T):
    assert parse_rows(format_rows(T)) == T


def test_format_uses_commas_for_two_digit_entries():
    T = SkewTableau.from_dict(SkewShape(Partition((2,))), {(1, 1): 3, (1, 2): 12})
    assert format_rows(T) == ["3,12"]
    assert parse_rows(["3,12"]) == T


def test_parse_rows_rejects_gaps():
    with pytest.raises(ValueError):
        parse_rows(["1.2"])


@settings(max_examples=50)
@given(semistandard_fillings())
def test_rotation_and_transpose_are_involutions(T):
    rect = Rectangle(max(len(T.shape.outer), 1), max(T.shape.outer, default=1))
    top = max((e for _, e in T.items()), default=0)
    assert rotate180(rotate180(T, rect, top), rect, top) == T
    assert is_semistandard(rotate180(T, rect, top))
    assert transpose_tableau(transpose_tableau(T)) == T


def test_content_counts_values():
    T = parse_rows(["..1X", "12", "3"])
    assert content(T) == [2, 1, 1]


def test_box_singleton_survives_pickle():
    assert pickle.loads(pickle.dumps(BOX)) is BOX
