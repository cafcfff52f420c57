import pytest

from cellrook.enumeration import canonical_keys, count, enumerate_shapes
from cellrook.grid import canonical, connected_components, weak_components
from oracles import brute_count_shapes

COLLECTIONS = {1: 1, 2: 2, 3: 5, 4: 22, 5: 94, 6: 524, 7: 3031}
POLYOMINOES = {1: 1, 2: 1, 3: 2, 4: 5, 5: 12, 6: 35, 7: 108, 8: 369}


def test_documented_examples():
    assert len(list(enumerate_shapes("polyomino", 4))) == 5
    assert len(list(enumerate_shapes("collection", 4))) == 22
    assert len(list(enumerate_shapes("polyomino", 1))) == 1
    assert count("collection", 7) == 3031
    assert count("polyomino", 8) == 369
    assert count("collection", 2) == 2


@pytest.mark.parametrize("kind", ["polyomino", "collection"])
@pytest.mark.parametrize("rank", range(1, 6))
def test_counts_match_subset_scan(kind, rank):
    assert count(kind, rank) == brute_count_shapes(kind, rank)


@pytest.mark.parametrize("kind,table", [("polyomino", POLYOMINOES), ("collection", COLLECTIONS)])
def test_table_counts(kind, table):
    for rank, expected in table.items():
        assert count(kind, rank) == expected


@pytest.mark.parametrize("kind", ["polyomino", "collection"])
@pytest.mark.parametrize("rank", range(1, 7))
def test_stream_invariants(kind, rank):
    shapes = list(enumerate_shapes(kind, rank))
    keys = [P.canonical_key for P in shapes]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for P in shapes:
        assert len(P) == rank
        assert canonical(P) == P
        assert len(weak_components(P)) == 1
        if kind == "polyomino":
            assert len(connected_components(P)) == 1


def test_rank_zero_and_errors():
    assert canonical_keys("polyomino", 0) == ((),)
    with pytest.raises(ValueError):
        count("polyomino", -1)
    with pytest.raises(ValueError):
        count("tree", 3)
