import pytest

from latpath import (DomainError, components, make_system, matching_rank,
                     maximal_presentation, special_elements)


def test_matching_rank_two_overlapping_intervals():
    sys_ = make_system([1, 2, 3, 4], [{1, 2, 3}, {2, 3, 4}])
    assert matching_rank(sys_) == 2
    assert matching_rank(sys_, set()) == 0


def test_matching_rank_four_interval_system():
    sets = [set(range(1, 5)), set(range(2, 8)), set(range(5, 11)),
            set(range(6, 12))]
    sys_ = make_system(range(1, 12), sets)
    assert matching_rank(sys_, set(range(1, 12))) == 4


def test_matching_rank_subset_queries():
    sys_ = make_system([1, 2, 3, 4], [{1, 2, 3}, {2, 3, 4}])
    assert matching_rank(sys_, {1}) == 1
    assert matching_rank(sys_, {2, 3}) == 2
    assert matching_rank(sys_, {1, 2, 3}) == 2


def test_matching_rank_rejects_foreign_element():
    sys_ = make_system([1, 2], [{1}])
    with pytest.raises(DomainError):
        matching_rank(sys_, {9})


def test_make_system_rejects_member_outside_ground():
    with pytest.raises(DomainError):
        make_system([1, 2, 3, 4], [{5}])


def test_special_elements_singleton_set_isthmus():
    sys_ = make_system([1, 2, 3], [{1}, {2, 3}])
    loops, isth = special_elements(sys_)
    assert set(loops) == set()
    assert set(isth) == {1}


def test_special_elements_loop_and_isthmus():
    # element 1 in no set, element 6 pinned by the singleton interval
    sys_ = make_system(range(1, 7), [{2, 3, 4}, {4, 5}, {6}])
    loops, isth = special_elements(sys_)
    assert set(loops) == {1}
    assert set(isth) == {6}


def test_special_elements_none():
    sys_ = make_system([1, 2, 3, 4], [{1, 2, 3}, {2, 3, 4}])
    assert special_elements(sys_) == ((), ())


def test_maximal_presentation_grows_both_sets():
    sys_ = make_system([1, 2, 3, 4], [{1, 2, 3}, {2, 3, 4}])
    out = maximal_presentation(sys_)
    assert sorted(sorted(s) for s in out.sets) == [[1, 2, 3, 4], [1, 2, 3, 4]]


def test_maximal_presentation_middle_set_absorbs_ends():
    # deleting the middle set leaves {1, 6} as a pair of isthmuses,
    # so the middle set grows to the whole ground set
    sets = [{1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6}]
    sys_ = make_system(range(1, 7), sets)
    out = maximal_presentation(sys_)
    assert [set(s) for s in out.sets] == [
        {1, 2, 3}, {1, 2, 3, 4, 5, 6}, {4, 5, 6}]
    again = maximal_presentation(out)
    assert again.sets == out.sets


def test_maximal_presentation_fixed_point():
    sets = [{1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8}]
    sys_ = make_system(range(1, 9), sets)
    out = maximal_presentation(sys_)
    assert [set(s) for s in out.sets] == sets
    again = maximal_presentation(out)
    assert again.sets == out.sets


def test_components_disjoint_sets_split():
    sys_ = make_system([1, 2, 3, 4], [{1, 2}, {3, 4}])
    assert [sorted(b) for b in components(sys_)] == [[1, 2], [3, 4]]


def test_components_overlap_joins():
    sys_ = make_system([1, 2, 3, 4], [{1, 2, 3}, {2, 3, 4}])
    assert [sorted(b) for b in components(sys_)] == [[1, 2, 3, 4]]


def test_components_loop_is_singleton():
    sys_ = make_system([1], [])
    assert [sorted(b) for b in components(sys_)] == [[1]]
