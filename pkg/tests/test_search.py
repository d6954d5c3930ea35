"""Bounded enumeration, bucketing, and tuple extraction."""

from __future__ import annotations

import pytest

from bidouble import (
    BoundTooLarge,
    CoverType,
    HomeoClassBucket,
    HomeoClassKey,
    SearchConfig,
    enumerate_admissible,
    extract_k_tuples,
    group_by_homeo_class,
    is_catanese_tuple,
    search,
)
from bidouble.search import branch_pairs, pack, unpack

TYPE_1 = CoverType(16, 22, 52, 4)
TYPE_2 = CoverType(28, 10, 28, 10)


def brute_force_canonical(bound: int) -> set[CoverType]:
    """Quadruple loop over the raw constraints, independent of the library."""
    found: set[CoverType] = set()
    for a in range(3, bound + 1):
        for b in range(3, bound + 1):
            for m2 in range(3, bound + 1):
                for n2 in range(3, bound + 1):
                    if (
                        a > 2 * n2
                        and m2 > 2 * b
                        and (a - n2) % 2 == 0
                        and (b - m2) % 2 == 0
                    ):
                        t = CoverType(a, b, m2, n2)
                        s = CoverType(m2, n2, a, b)
                        found.add(min(t, s))
    return found


def test_pack_round_trip_preserves_order() -> None:
    types = sorted(enumerate_admissible(25))
    packed = [pack(t) for t in types]
    assert packed == sorted(packed)
    assert [unpack(p) for p in packed] == types


def test_branch_pairs_small_bounds() -> None:
    assert branch_pairs(7) == [(7, 3)]
    assert branch_pairs(9) == [(7, 3), (9, 3)]
    assert branch_pairs(6) == []


def test_enumerate_smallest_bound_with_a_type() -> None:
    assert list(enumerate_admissible(7)) == [CoverType(7, 3, 7, 3)]


def test_enumerate_below_threshold_is_empty() -> None:
    assert list(enumerate_admissible(2)) == []
    assert list(enumerate_admissible(6)) == []


def test_enumerate_emits_canonical_forms_only() -> None:
    types = list(enumerate_admissible(9))
    assert CoverType(7, 3, 9, 3) in types
    assert CoverType(9, 3, 7, 3) not in types
    assert len(types) == 3


def test_enumerate_matches_brute_force_oracle() -> None:
    for bound in (7, 12, 21):
        assert set(enumerate_admissible(bound)) == brute_force_canonical(bound)


def test_enumerate_never_repeats_a_class() -> None:
    types = list(enumerate_admissible(30))
    assert len(types) == len(set(types))


def test_enumerate_is_monotone_in_the_bound() -> None:
    assert set(enumerate_admissible(20)) <= set(enumerate_admissible(30))


def test_enumerate_shards_partition_the_output() -> None:
    whole = set(enumerate_admissible(25))
    sharded = list(enumerate_admissible(25, shard_count=4))
    assert len(sharded) == len(whole)
    assert set(sharded) == whole


def test_group_by_homeo_class_merges_the_worked_example() -> None:
    buckets = group_by_homeo_class([TYPE_1, TYPE_2])
    assert set(buckets) == {HomeoClassKey(10368, 1856)}
    bucket = buckets[HomeoClassKey(10368, 1856)]
    assert bucket.members() == [(TYPE_1, 18), (TYPE_2, 36)]


def test_group_by_homeo_class_separates_distinct_keys() -> None:
    buckets = group_by_homeo_class([CoverType(7, 3, 7, 3), CoverType(9, 3, 9, 3)])
    assert set(buckets) == {HomeoClassKey(512, 106), HomeoClassKey(800, 154)}
    assert all(len(b) == 1 for b in buckets.values())


def test_group_by_homeo_class_canonicalizes_and_dedupes() -> None:
    buckets = group_by_homeo_class([TYPE_1, CoverType(52, 4, 16, 22)])
    (bucket,) = buckets.values()
    assert bucket.members() == [(TYPE_1, 18)]


def test_group_by_homeo_class_empty_input() -> None:
    assert group_by_homeo_class([]) == {}


def repeated_index_bucket() -> HomeoClassBucket:
    # Three admissible types sharing key (2304, 422): indices 4, 12, 12.
    types = [CoverType(7, 5, 33, 3), CoverType(10, 5, 21, 4), CoverType(11, 7, 19, 3)]
    buckets = group_by_homeo_class(types)
    (bucket,) = buckets.values()
    return bucket


def test_extract_pairs_with_index_multiplicity() -> None:
    bucket = repeated_index_bucket()
    assert sorted(bucket.indices) == [4, 12, 12]
    tuples, truncated = extract_k_tuples(bucket, 2)
    assert not truncated
    # Two members share index 12, so only the {4, 12} combinations survive.
    assert len(tuples) == 2
    for t in tuples:
        assert sorted(t.indices) == [4, 12]
        assert is_catanese_tuple(list(t.members)).is_catanese


def test_extract_when_distinct_indices_are_scarce() -> None:
    bucket = repeated_index_bucket()
    tuples, truncated = extract_k_tuples(bucket, 3)
    assert tuples == []
    assert not truncated


def test_extract_respects_the_emission_cap() -> None:
    bucket = repeated_index_bucket()
    tuples, truncated = extract_k_tuples(bucket, 2, cap=1)
    assert len(tuples) == 1
    assert truncated
    exact, truncated = extract_k_tuples(bucket, 2, cap=2)
    assert len(exact) == 2
    assert not truncated


def test_extract_rejects_degenerate_k() -> None:
    with pytest.raises(ValueError):
        extract_k_tuples(repeated_index_bucket(), 1)


def test_search_finds_the_worked_example_pair() -> None:
    result = search(SearchConfig(bound=60, k=2))
    wanted = [
        t
        for t in result.tuples
        if t.members == (TYPE_1, TYPE_2)
    ]
    assert len(wanted) == 1
    assert wanted[0].indices == (18, 36)
    assert wanted[0].key == HomeoClassKey(10368, 1856)


def test_search_single_type_yields_no_tuples() -> None:
    result = search(SearchConfig(bound=7, k=2))
    assert result.tuples == ()
    assert result.type_count == 1


def test_search_empty_family() -> None:
    result = search(SearchConfig(bound=3, k=2))
    assert result.tuples == ()
    assert result.type_count == 0
    assert result.bucket_count == 0


def test_search_every_tuple_passes_the_verdict() -> None:
    result = search(SearchConfig(bound=30, k=2))
    assert len(result.tuples) == 105
    for t in result.tuples:
        verdict = is_catanese_tuple(list(t.members))
        assert verdict.is_catanese
        assert verdict.shared_key == t.key


def test_search_is_shard_independent() -> None:
    baseline = search(SearchConfig(bound=30, k=2))
    for shards in (2, 8):
        assert search(SearchConfig(bound=30, k=2, shard_count=shards)) == baseline


def test_search_results_grow_with_the_bound() -> None:
    small = {t.members for t in search(SearchConfig(bound=30)).tuples}
    large = {t.members for t in search(SearchConfig(bound=45)).tuples}
    assert small <= large
    assert len(small) < len(large)


def test_search_output_is_sorted() -> None:
    result = search(SearchConfig(bound=30))
    keys = [(t.key, t.members) for t in result.tuples]
    assert keys == sorted(keys)


def test_search_max_results_truncates_after_sorting() -> None:
    full = search(SearchConfig(bound=30))
    clipped = search(SearchConfig(bound=30, max_results=10))
    assert clipped.clipped
    assert clipped.tuples == full.tuples[:10]
    unclipped = search(SearchConfig(bound=30, max_results=10**6))
    assert not unclipped.clipped
    assert unclipped.tuples == full.tuples


def test_search_rejects_bound_above_cap() -> None:
    with pytest.raises(BoundTooLarge):
        search(SearchConfig(bound=10_001))


def test_search_rejects_degenerate_configs() -> None:
    with pytest.raises(ValueError):
        search(SearchConfig(bound=2))
    with pytest.raises(ValueError):
        search(SearchConfig(bound=30, k=1))
    with pytest.raises(ValueError):
        search(SearchConfig(bound=30, shard_count=0))
