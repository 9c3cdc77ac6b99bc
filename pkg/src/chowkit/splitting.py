"""Generic splitting types of sheaves on projective space.

The restriction of a rank-r torsion-free sheaf to a generic line splits as
a direct sum of line bundles O(b_1) + ... + O(b_r) with
b_1 >= b_2 >= ... >= b_r; the tuple (b_1, ..., b_r) is the splitting type.
Two numeric constraints make the set of candidate types finite for a
mu-semistable reflexive sheaf on P^3:

* magnitude: |b_i| <= |c_1|/r + r for every i, and
* gap: consecutive entries differ by at most 2.

This module represents splitting types, checks the two constraints, and
enumerates every candidate inside the magnitude box.  The gap filter is a
flag because the magnitude bound holds for all mu-semistable reflexive
sheaves while the gap bound is specific to reflexive sheaves on P^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator, Sequence

from .errors import InadmissibleParameterError

IntSequence = Sequence[int]


@dataclass(frozen=True)
class SplittingType:
    """A non-increasing tuple of generic-line restriction degrees.

    Construction canonicalizes: entries are sorted non-increasing, so equal
    multisets give equal (and hash-equal) types.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) == 0:
            raise InadmissibleParameterError("a splitting type needs rank >= 1")
        if any(not isinstance(b, int) or isinstance(b, bool) for b in self.entries):
            raise InadmissibleParameterError("splitting type entries must be integers")
        object.__setattr__(self, "entries", tuple(sorted(self.entries, reverse=True)))

    @classmethod
    def of(cls, *entries: int) -> "SplittingType":
        return cls(tuple(entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def c1(self) -> int:
        """First Chern class of O(b): the sum of the entries."""
        return sum(self.entries)

    @property
    def b_max(self) -> int:
        return self.entries[0]

    @property
    def b_min(self) -> int:
        return self.entries[-1]

    @property
    def square_sum(self) -> int:
        """Sum of the squared entries; feeds the h^1 bound downstream."""
        return sum(b * b for b in self.entries)

    def twisted(self, k: int) -> "SplittingType":
        """Splitting type of F(k): every entry shifted by k."""
        return SplittingType(tuple(b + k for b in self.entries))

    def dual(self) -> "SplittingType":
        """Splitting type of the dual sheaf: entries negated (and re-sorted)."""
        return SplittingType(tuple(-b for b in self.entries))

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.entries) + ")"


def _entries(b: "SplittingType | IntSequence") -> tuple[int, ...]:
    if isinstance(b, SplittingType):
        return b.entries
    return tuple(b)


def validate(b: "SplittingType | IntSequence", r: int, c1: int) -> bool:
    """True iff b has length r, sums to c1, and is non-increasing.

    Accepts raw integer sequences so that mis-ordered input can be reported
    as False rather than being silently canonicalized.
    """
    entries = _entries(b)
    if len(entries) != r or sum(entries) != c1:
        return False
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1))


def gap_ok(b: "SplittingType | IntSequence") -> bool:
    """True iff consecutive entries differ by at most 2."""
    entries = _entries(b)
    return all(entries[i] - entries[i + 1] <= 2 for i in range(len(entries) - 1))


def splitting_radius(r: int, c1: int) -> Fraction:
    """The magnitude bound |c_1|/r + r, as an exact rational."""
    if r <= 0:
        raise InadmissibleParameterError(f"rank must be positive, got {r}")
    return Fraction(abs(c1), r) + r


def magnitude_ok(b: "SplittingType | IntSequence", r: int, c1: int) -> bool:
    """True iff every |b_i| <= |c1|/r + r, compared exactly.

    Requires `validate(b, r, c1)` to hold.
    """
    if not validate(b, r, c1):
        raise InadmissibleParameterError(
            f"{tuple(_entries(b))} is not a valid splitting type for rank {r}, c1 {c1}"
        )
    bound = splitting_radius(r, c1)
    return all(abs(entry) <= bound for entry in _entries(b))


def _descending_tuples(
    slots: int, total: int, hi: int, lo: int
) -> Iterator[tuple[int, ...]]:
    """Non-increasing integer tuples of given length and sum, entries in [lo, hi].

    Yielded in lexicographically descending order.
    """
    if slots == 0:
        if total == 0:
            yield ()
        return
    upper = min(hi, total - (slots - 1) * lo)
    lower = max(lo, -(-total // slots))  # first entry is the max, so >= mean
    for first in range(upper, lower - 1, -1):
        for rest in _descending_tuples(slots - 1, total - first, first, lo):
            yield (first, *rest)


def enumerate_splitting_types(
    r: int, c1: int, reflexive_gap: bool = True
) -> list[SplittingType]:
    """All splitting types of rank r and first Chern class c1 inside the box.

    Every returned type satisfies |b_i| <= |c1|/r + r; with `reflexive_gap`
    the gap <= 2 filter is applied on top.  The result is finite, free of
    duplicates, and sorted lexicographically descending.
    """
    radius = splitting_radius(r, c1)
    hi = floor(radius)
    results = []
    for entries in _descending_tuples(r, c1, hi, -hi):
        if reflexive_gap and not gap_ok(entries):
            continue
        results.append(SplittingType(entries))
    return results
