"""Bounded enumeration of cover types and Catanese tuple extraction.

The admissibility constraints factor through the two pairs (a, n2) and
(m2, b): each must lie in P(bound) = {(x, y): y >= 3, x > 2*y, x <= bound,
x == y (mod 2)}, with no cross conditions.  A cover type is therefore an
ordered pair of members of P(bound), and the branch-swap involution exchanges
the two, so iterating over unordered pairs of P(bound) visits every
involution orbit exactly once.  That keeps the enumeration quadratic in
|P(bound)| instead of quartic in the bound.

Buckets keyed by (K^2, chi) store members as packed 64-bit integers, four
16-bit lanes in field order, so numeric order on packed values equals
lexicographic order on types.  Tuple extraction walks combinations of
distinct-index groups rather than filtering all k-subsets, so buckets with
many members but few distinct indices cost nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .covers import (
    DEFAULT_FIELD_CAP,
    CoverType,
    canonicalize,
    surface_invariants,
)
from .errors import BoundTooLarge
from .topology import HomeoClassKey

DEFAULT_TUPLES_PER_BUCKET = 10_000

_LANE = 16
_LANE_MASK = (1 << _LANE) - 1


def pack(t: CoverType) -> int:
    """Pack a type into one 64-bit integer, preserving lexicographic order."""
    return t.a << (3 * _LANE) | t.b << (2 * _LANE) | t.m2 << _LANE | t.n2


def unpack(packed: int) -> CoverType:
    return CoverType(
        packed >> (3 * _LANE) & _LANE_MASK,
        packed >> (2 * _LANE) & _LANE_MASK,
        packed >> _LANE & _LANE_MASK,
        packed & _LANE_MASK,
    )


@dataclass(frozen=True, slots=True)
class SearchConfig:
    """Parameters of one search run.

    ``bound`` caps every branch-data field; ``k`` is the tuple size;
    ``max_results`` truncates the (sorted) output when set; ``shard_count``
    splits the enumeration without affecting the result; ``tuples_per_bucket``
    caps emission per homeomorphism class.
    """

    bound: int
    k: int = 2
    max_results: int | None = None
    shard_count: int = 1
    tuples_per_bucket: int = DEFAULT_TUPLES_PER_BUCKET


@dataclass(frozen=True, slots=True)
class HomeoClassBucket:
    """All enumerated types sharing one homeomorphism key.

    ``packed`` holds the canonical members sorted and deduplicated;
    ``indices`` is the divisibility index of each member, aligned by position.
    """

    key: HomeoClassKey
    packed: tuple[int, ...]
    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.packed)

    def members(self) -> list[tuple[CoverType, int]]:
        return [(unpack(p), r) for p, r in zip(self.packed, self.indices)]


@dataclass(frozen=True, slots=True)
class CataneseTuple:
    """k canonical types sharing a key, with pairwise distinct indices."""

    key: HomeoClassKey
    members: tuple[CoverType, ...]
    indices: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Sorted tuples plus run statistics.

    ``truncated_buckets`` lists the keys whose per-bucket cap was hit;
    ``clipped`` reports whether ``max_results`` cut the sorted output.
    """

    tuples: tuple[CataneseTuple, ...]
    type_count: int
    bucket_count: int
    truncated_buckets: tuple[HomeoClassKey, ...]
    clipped: bool


def branch_pairs(bound: int) -> list[tuple[int, int]]:
    """P(bound): all (x, y) with y >= 3, x > 2*y, x <= bound, equal parity."""
    pairs: list[tuple[int, int]] = []
    for y in range(3, bound // 2 + 1):
        # First x > 2*y with x == y (mod 2): 2*y+1 for odd y, 2*y+2 for even y.
        start = 2 * y + 1 if y % 2 else 2 * y + 2
        pairs.extend((x, y) for x in range(start, bound + 1, 2))
    return pairs


def enumerate_admissible(bound: int, *, shard_count: int = 1) -> Iterator[CoverType]:
    """Yield each admissibility class exactly once, in canonical form.

    The outer pair index is partitioned round-robin over ``shard_count``
    shards, drained in shard order, so the iteration order is deterministic
    for a fixed shard count and the union over shards never repeats a class.
    """
    if shard_count < 1:
        raise ValueError("shard_count must be >= 1")
    pairs = branch_pairs(bound)
    count = len(pairs)
    for shard in range(shard_count):
        for i in range(shard, count, shard_count):
            x1, y1 = pairs[i]
            for j in range(i, count):
                x2, y2 = pairs[j]
                # (a, n2) = pairs[i], (m2, b) = pairs[j]; canonical form is
                # the lex-min of the two orderings of the unordered pair.
                first = (x1, y2, x2, y1)
                second = (x2, y1, x1, y2)
                yield CoverType(*(first if first <= second else second))


def group_by_homeo_class(
    types: Iterable[CoverType],
) -> dict[HomeoClassKey, HomeoClassBucket]:
    """Bucket types by (K^2, chi); members end up canonical, sorted, unique."""
    accumulator: dict[HomeoClassKey, set[int]] = {}
    for t in types:
        canonical = canonicalize(t)
        inv = surface_invariants(canonical)
        key = HomeoClassKey(inv.kk, inv.chi)
        accumulator.setdefault(key, set()).add(pack(canonical))
    buckets: dict[HomeoClassKey, HomeoClassBucket] = {}
    for key, packed_set in accumulator.items():
        packed = tuple(sorted(packed_set))
        indices = tuple(surface_invariants(unpack(p)).r for p in packed)
        buckets[key] = HomeoClassBucket(key=key, packed=packed, indices=indices)
    return buckets


def extract_k_tuples(
    bucket: HomeoClassBucket, k: int, *, cap: int = DEFAULT_TUPLES_PER_BUCKET
) -> tuple[list[CataneseTuple], bool]:
    """All size-k subsets of the bucket with pairwise distinct indices.

    Only valid subsets are ever generated: members are grouped by index and
    subsets are products over k distinct groups.  Emission stops at ``cap``
    subsets; the second return value reports whether anything was cut off.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    by_index: dict[int, list[int]] = {}
    for position, r in enumerate(bucket.indices):
        by_index.setdefault(r, []).append(position)
    if len(by_index) < k:
        return [], False
    groups = [by_index[r] for r in sorted(by_index)]
    out: list[CataneseTuple] = []
    for chosen in itertools.combinations(groups, k):
        for positions in itertools.product(*chosen):
            if len(out) >= cap:
                return out, True
            ordered = sorted(positions)
            out.append(
                CataneseTuple(
                    key=bucket.key,
                    members=tuple(unpack(bucket.packed[p]) for p in ordered),
                    indices=tuple(bucket.indices[p] for p in ordered),
                )
            )
    return out, False


def search(config: SearchConfig) -> SearchResult:
    """Enumerate, bucket, and extract; output order is fully deterministic.

    Tuples are sorted by key and then by members, and ``max_results`` is
    applied after sorting, so ``shard_count`` can never change the result.
    Raises :class:`BoundTooLarge` above the global field cap.
    """
    if config.bound > DEFAULT_FIELD_CAP:
        raise BoundTooLarge(
            f"bound {config.bound} exceeds the field cap {DEFAULT_FIELD_CAP}"
        )
    if config.bound < 3:
        raise ValueError("bound must be >= 3")
    if config.k < 2:
        raise ValueError("k must be >= 2")
    if config.shard_count < 1:
        raise ValueError("shard_count must be >= 1")
    if config.tuples_per_bucket < 1:
        raise ValueError("tuples_per_bucket must be >= 1")
    types = enumerate_admissible(config.bound, shard_count=config.shard_count)
    buckets = group_by_homeo_class(types)
    collected: list[CataneseTuple] = []
    truncated: list[HomeoClassKey] = []
    for key in sorted(buckets):
        tuples, was_truncated = extract_k_tuples(
            buckets[key], config.k, cap=config.tuples_per_bucket
        )
        collected.extend(tuples)
        if was_truncated:
            truncated.append(key)
    collected.sort(key=lambda t: (t.key, t.members))
    clipped = config.max_results is not None and len(collected) > config.max_results
    if clipped:
        collected = collected[: config.max_results]
    return SearchResult(
        tuples=tuple(collected),
        type_count=sum(len(b) for b in buckets.values()),
        bucket_count=len(buckets),
        truncated_buckets=tuple(truncated),
        clipped=clipped,
    )
