"""Explicit cohomology, Euler-characteristic, and ch_3 bounds.

All bounds are driven by two exact quantities attached to a rank-n sheaf
with first Chern class c_1, second character ch_2, and splitting type b:

* the splitting radius  t = |c_1|/n + n,  which boxes every b_i, and
* the twist- and dual-invariant h^1 bound  -ch_2 + (1/2) * sum b_i^2.

From these the vanishing constant Q, the per-degree cohomology bounds on
P^2 and P^3, the worst-case Euler bound, and the ch_3 bound are assembled
exactly as rational numbers.  Worst-case variants substitute b_i = t;
per-splitting-type variants keep the sharper sum of squares.

Factors that bound dimensions are clamped at 0 by default (a negative
"bound" just means the cohomology vanishes); pass ``literal_mode=True``
to reproduce the raw formulas for auditing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor

from .chow import (
    ChernCharacter,
    ChernClasses,
    RationalLike,
    as_rational,
    chern_to_character,
    restrict_to_hyperplane,
)
from .errors import (
    DimensionMismatchError,
    InadmissibleParameterError,
    IntegralityError,
    RankMismatchError,
)
from .splitting import SplittingType, splitting_radius


def h0_line_bundle(n: int, k: int) -> int:
    """Global-section count of O(k) on P^n: C(k+n, n) for k >= 0, else 0."""
    if n < 1:
        raise InadmissibleParameterError(f"projective dimension must be >= 1, got {n}")
    if k < 0:
        return 0
    return comb(k + n, n)


def extreme_bounds(b: SplittingType, N: int) -> tuple[int, int]:
    """Bounds for the outermost cohomology of a sheaf on P^N of splitting type b.

    h^0 is at most h^0 O(b) = sum_i h^0 O(b_i) and h^N at most
    h^0 O(-b - N - 1) = sum_i h^0 O(-b_i - N - 1).
    """
    if N not in (2, 3):
        raise DimensionMismatchError(f"extreme bounds are defined on P^2 and P^3, not P^{N}")
    low = sum(h0_line_bundle(N, entry) for entry in b)
    high = sum(h0_line_bundle(N, -entry - N - 1) for entry in b)
    return low, high


def _paired_section_bound(entry: int) -> Fraction:
    # (b+1)(b+2)/2 equals whichever of h^0 O(b), h^0 O(-b-3) is positive on P^2
    return Fraction((entry + 1) * (entry + 2), 2)


def p2_bounds(
    b: SplittingType, ch: ChernCharacter
) -> tuple[Fraction, Fraction, Fraction]:
    """Per-degree bounds (h^0, h^1, h^2) for a sheaf on P^2.

    h^0 and h^2 are bounded by sum_i C(b_i + 2, 2); h^1 by the same sum
    minus the Euler characteristic n + (3/2) c_1 + ch_2.  The values are
    returned verbatim (no clamping).
    """
    if ch.ambient_dim != 2:
        raise DimensionMismatchError("p2_bounds expects a P^2 character")
    if ch.rank != b.rank:
        raise RankMismatchError(
            f"character rank {ch.rank} != splitting type length {b.rank}"
        )
    section_sum = sum((_paired_section_bound(entry) for entry in b), Fraction(0))
    chi = ch.ch0 + Fraction(3, 2) * ch.ch1 + ch.ch2
    return section_sum, -chi + section_sum, section_sum


def h1_invariant_bound(b: SplittingType, ch2: RationalLike) -> Fraction:
    """The twist- and dual-invariant h^1 bound: -ch_2 + (1/2) sum b_i^2."""
    return -as_rational(ch2) + Fraction(b.square_sum, 2)


def vanishing_Q(n: int, c1: int, ch2: RationalLike, b: SplittingType) -> Fraction:
    """The vanishing constant Q = |c_1|/n + n + 4 - ch_2 + (1/2) sum b_i^2.

    For k >= Q all four of h^1 F(k), h^2 F(k), h^0 F(-k), h^1 F(-k) vanish
    on P^2.  Q subsumes the four step thresholds of
    :func:`step_thresholds` via the magnitude bound on b_max and b_min.
    """
    if b.rank != n:
        raise RankMismatchError(f"splitting type length {b.rank} != rank {n}")
    return splitting_radius(n, c1) + 4 + h1_invariant_bound(b, ch2)


def step_thresholds(
    b: SplittingType, ch2: RationalLike
) -> tuple[int, int, Fraction, Fraction]:
    """Diagnostic: the four per-step vanishing thresholds on P^2.

    In order, vanishing of h^0 F(-k), h^2 F(k), h^1 F(k), h^1 F(-k) holds
    for k strictly above b_max, -b_min - 3, -b_min + inv, b_max + 3 + inv,
    where inv is the invariant h^1 bound.  These are informational only;
    the bound formulas use the single displayed constant Q.
    """
    inv = h1_invariant_bound(b, ch2)
    return (b.b_max, -b.b_min - 3, -b.b_min + inv, b.b_max + 3 + inv)


def _clamp(value: Fraction, literal_mode: bool) -> Fraction:
    if literal_mode:
        return value
    return value if value > 0 else Fraction(0)


def euler_bound(
    n: int, c1: int, ch2: RationalLike, literal_mode: bool = False
) -> Fraction:
    """Worst-case bound for |chi(F)| in terms of rank, c_1, and ch_2 alone.

    With t = |c_1|/n + n this is
    2 (t + 4 - ch_2 + n t^2 / 2)(-ch_2 + n t^2 / 2) + (n/6)(t + 3)^3,
    i.e. the splitting-type-dependent quantities evaluated at b_i = t.
    """
    ch2 = as_rational(ch2)
    t = splitting_radius(n, c1)
    half_square = n * t * t / 2
    q_factor = _clamp(t + 4 - ch2 + half_square, literal_mode)
    inv_factor = _clamp(-ch2 + half_square, literal_mode)
    return 2 * q_factor * inv_factor + Fraction(n, 6) * (t + 3) ** 3


def ch3_bound(
    n: int, c1: int, ch2: RationalLike, literal_mode: bool = False
) -> Fraction:
    """Strict bound for |ch_3| of a mu-semistable reflexive sheaf on P^3.

    Equals the Euler bound plus 2|ch_2| + (11/6)|c_1| + n; any such sheaf
    satisfies |ch_3| < ch3_bound(n, c1, ch2) strictly.
    """
    ch2 = as_rational(ch2)
    return (
        euler_bound(n, c1, ch2, literal_mode)
        + 2 * abs(ch2)
        + Fraction(11, 6) * abs(c1)
        + n
    )


@dataclass(frozen=True)
class BoundReport:
    """Bundle of every explicit bound for fixed invariants (and type, if any).

    ``h_bounds`` lists upper bounds for h^0 .. h^3.  When no splitting type
    is supplied the worst case b_i = t is substituted; degrees 0 and 3 then
    share the joint section bound (n/6)(t + 3)^3, which dominates each of
    them separately.  ``euler_bound`` and ``ch3_bound`` always refer to the
    worst-case formulas, which depend on the invariants only.
    """

    rank: int
    c1: int
    ch2: Fraction
    splitting_radius: Fraction
    q: Fraction
    q_int: int
    h_bounds: tuple[Fraction, Fraction, Fraction, Fraction]
    euler_bound: Fraction
    ch3_bound: Fraction
    literal_mode: bool
    splitting_type: SplittingType | None = None


def bound_report(
    n: int,
    c1: int,
    ch2: RationalLike,
    b: SplittingType | None = None,
    literal_mode: bool = False,
) -> BoundReport:
    """Assemble the full :class:`BoundReport` for the given invariants.

    With a splitting type the middle cohomology uses the sharper invariant
    bound and the extremes use the exact section counts; without one, every
    splitting-type quantity is evaluated at the magnitude radius t.
    """
    if n < 1:
        raise InadmissibleParameterError(f"rank must be >= 1, got {n}")
    ch2 = as_rational(ch2)
    t = splitting_radius(n, c1)
    if b is None:
        q = t + 4 - ch2 + n * t * t / 2
        inv = -ch2 + n * t * t / 2
        outer_low = outer_high = Fraction(n, 6) * (t + 3) ** 3
    else:
        if b.rank != n:
            raise RankMismatchError(f"splitting type length {b.rank} != rank {n}")
        q = vanishing_Q(n, c1, ch2, b)
        inv = h1_invariant_bound(b, ch2)
        low, high = extreme_bounds(b, 3)
        outer_low, outer_high = Fraction(low), Fraction(high)
    middle = _clamp(q, literal_mode) * _clamp(inv, literal_mode)
    return BoundReport(
        rank=n,
        c1=c1,
        ch2=ch2,
        splitting_radius=t,
        q=q,
        q_int=ceil(q),
        h_bounds=(outer_low, middle, middle, outer_high),
        euler_bound=euler_bound(n, c1, ch2, literal_mode),
        ch3_bound=ch3_bound(n, c1, ch2, literal_mode),
        literal_mode=literal_mode,
        splitting_type=b,
    )


def p3_bounds(
    b: SplittingType, ch: ChernCharacter, literal_mode: bool = False
) -> BoundReport:
    """Per-splitting-type bound report for a sheaf on P^3.

    h^0 and h^3 come from the section counts of O(b) and O(-b-4); h^1 and
    h^2 are bounded by Q * (-ch_2 + (1/2) sum b_i^2) with Q computed from
    the restricted character (restriction just drops ch_3, so Q sees the
    same rank, c_1, ch_2).
    """
    if ch.ambient_dim != 3:
        raise DimensionMismatchError("p3_bounds expects a P^3 character")
    if ch.rank < 1:
        raise InadmissibleParameterError(
            f"bounds require an honest sheaf rank >= 1, got {ch.rank}"
        )
    if ch.ch1.denominator != 1:
        raise IntegralityError(f"c_1 must be an integer, got {ch.ch1}")
    if ch.rank != b.rank:
        raise RankMismatchError(
            f"character rank {ch.rank} != splitting type length {b.rank}"
        )
    restricted = restrict_to_hyperplane(ch)
    return bound_report(
        restricted.rank, int(restricted.ch1), restricted.ch2, b=b,
        literal_mode=literal_mode,
    )


def _ch2_of_classes(r: int, c1: int, c2: int) -> Fraction:
    return Fraction(c1 * c1 - 2 * c2, 2)


def enumerate_admissible_c3(r: int, c1: int, c2: int) -> tuple[int, int]:
    """The maximal integer interval of c_3 compatible with the ch_3 bound.

    Returns (c3_min, c3_max) such that |ch_3(r, c1, c2, c3)| < ch3_bound
    holds strictly for every c3 in the closed interval and fails at
    c3_min - 1 and c3_max + 1.  Since ch_3 moves by 1/2 per unit of c_3,
    the interval is finite.
    """
    if r < 1:
        raise InadmissibleParameterError(f"rank must be >= 1, got {r}")
    bound = ch3_bound(r, c1, _ch2_of_classes(r, c1, c2))
    base = Fraction(c1**3 - 3 * c1 * c2, 6)  # ch_3 at c_3 = 0
    # |base + c3/2| < bound  <=>  -2(base + bound) < c3 < 2(bound - base)
    c3_min = floor(-2 * (base + bound)) + 1
    c3_max = ceil(2 * (bound - base)) - 1
    return c3_min, c3_max


def ch3_of_classes(r: int, c1: int, c2: int, c3: int) -> Fraction:
    """ch_3 of the P^3 character with the given integer Chern classes."""
    return chern_to_character(ChernClasses(r, c1, c2, c3), 3).ch3
