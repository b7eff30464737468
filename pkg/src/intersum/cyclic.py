"""Cyclic permutations, intervals, and the double-counting checks built on them.

A cyclic permutation of {1..n} is stored as the tuple of elements in cycle
order, rotated so element 1 sits at position 0.  Rotations are therefore
identified, reflections are not, and there are exactly (n-1)! distinct
objects, which enumerate_cyclic walks in a fixed order.

A length-t interval is t cyclically consecutive positions; it is *oriented*:
it knows its left (first) and right (last) endpoint.  An ordered pair (A, B)
of an interval of fam_a and an interval of fam_b is *representable* when
A ∩ B is a nonempty interval whose right endpoint is A's right endpoint and
whose left endpoint is B's left endpoint.  Counting representable pairs in
two ways, per pair across all cyclic permutations and per permutation across
pairs, is the engine behind double_count_check.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import islice, permutations
from math import factorial
from typing import Iterator, Sequence

from .errors import (
    BadElementError,
    BadLengthError,
    GroundMismatchError,
    HypothesisError,
    TooLargeError,
)
from .setcore import Family, KSet, _require_same_ground, is_cross_intersecting

# All-permutation sweeps walk (n-1)! * 2^n states; 8 keeps that near 10M.
MAX_SWEEP_GROUND = 8
# Single-permutation interval analysis only needs the 2^n subset walk.
MAX_SINGLE_GROUND = 16
MAX_ENUM_GROUND = 10


@dataclass(frozen=True)
class CyclicPerm:
    """Elements of {1..n} in cycle order, anchored so order[0] == 1."""

    n: int
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise BadLengthError(f"cyclic permutations need n >= 2, got {self.n}")
        if sorted(self.order) != list(range(1, self.n + 1)):
            raise BadElementError(f"order {self.order!r} is not an arrangement of 1..{self.n}")
        if self.order[0] != 1:
            raise BadElementError("cycle order must be rotated so element 1 is first")

    @classmethod
    def identity(cls, n: int) -> "CyclicPerm":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "CyclicPerm":
        """Accept any rotation of a cycle and anchor it at element 1."""
        seq = tuple(seq)
        if 1 not in seq:
            raise BadElementError(f"sequence {seq!r} does not contain element 1")
        i = seq.index(1)
        return cls(len(seq), seq[i:] + seq[:i])

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, e in enumerate(self.order):
            pos[e - 1] = i
        return tuple(pos)

    def position_of(self, element: int) -> int:
        if not 1 <= element <= self.n:
            raise BadElementError(f"element {element} outside ground set 1..{self.n}")
        return self._positions[element - 1]

    def element_at(self, position: int) -> int:
        return self.order[position % self.n]


def enumerate_cyclic(n: int) -> Iterator[CyclicPerm]:
    """All (n-1)! cyclic permutations of {1..n}, reflections distinct."""
    if n < 2:
        raise BadLengthError(f"cyclic permutations need n >= 2, got {n}")
    if n > MAX_ENUM_GROUND:
        raise TooLargeError(f"enumerate_cyclic is limited to n <= {MAX_ENUM_GROUND}, got {n}")
    return (CyclicPerm(n, (1,) + rest) for rest in permutations(range(2, n + 1)))


@dataclass(frozen=True)
class Interval:
    """length cyclically consecutive positions of perm, starting at start."""

    perm: CyclicPerm
    start: int
    length: int

    def __post_init__(self) -> None:
        if not 1 <= self.length < self.perm.n:
            raise BadLengthError(
                f"interval length {self.length} out of range 1..{self.perm.n - 1}"
            )
        if not 0 <= self.start < self.perm.n:
            raise ValueError(f"start position {self.start} out of range 0..{self.perm.n - 1}")

    @property
    def left(self) -> int:
        return self.perm.element_at(self.start)

    @property
    def right(self) -> int:
        return self.perm.element_at(self.start + self.length - 1)

    @cached_property
    def bits(self) -> int:
        b = 0
        for j in range(self.length):
            b |= 1 << (self.perm.element_at(self.start + j) - 1)
        return b

    def as_kset(self) -> KSet:
        return KSet(self.perm.n, self.bits)

    def elements(self) -> tuple[int, ...]:
        """Elements in cycle order, left endpoint first."""
        return tuple(self.perm.element_at(self.start + j) for j in range(self.length))


def intervals_of_length(perm: CyclicPerm, length: int) -> tuple[Interval, ...]:
    """The n intervals of the given length, one per start position."""
    if not 1 <= length < perm.n:
        raise BadLengthError(f"interval length {length} out of range 1..{perm.n - 1}")
    return tuple(Interval(perm, s, length) for s in range(perm.n))


def _position_mask(bits: int, pos: Sequence[int]) -> int:
    p = 0
    while bits:
        low = bits & -bits
        p |= 1 << pos[low.bit_length() - 1]
        bits ^= low
    return p


def _arc_start(posmask: int, n: int) -> int | None:
    """Start position if posmask is one nonempty arc shorter than the full
    cycle, else None."""
    if posmask == 0 or posmask == (1 << n) - 1:
        return None
    full = (1 << n) - 1
    rot = ((posmask << 1) | (posmask >> (n - 1))) & full
    starts = posmask & ~rot
    if starts & (starts - 1):
        return None
    return starts.bit_length() - 1


def interval_of(perm: CyclicPerm, s: KSet) -> Interval | None:
    """The oriented interval equal to s as a set, or None."""
    if s.n != perm.n:
        raise GroundMismatchError(f"set on ground 1..{s.n}, permutation on 1..{perm.n}")
    t = s.size
    if not 1 <= t < perm.n:
        return None
    start = _arc_start(_position_mask(s.bits, perm._positions), perm.n)
    if start is None:
        return None
    return Interval(perm, start, t)


@dataclass(frozen=True)
class RepresentablePair:
    """An ordered interval pair whose meet hangs off A's right and B's left end."""

    a: KSet
    b: KSet
    meet: KSet
    perm: CyclicPerm


def representable_pairs(
    perm: CyclicPerm, fam_a: Family, fam_b: Family
) -> tuple[RepresentablePair, ...]:
    """All representable ordered pairs (A, B) with A in fam_a, B in fam_b.

    Members that are not intervals of perm cannot participate.  Order is
    fam_a-major with members in bitmask order.
    """
    _require_same_ground(fam_a, fam_b)
    if fam_a.n != perm.n:
        raise GroundMismatchError(f"families on 1..{fam_a.n}, permutation on 1..{perm.n}")
    n = perm.n
    pos = perm._positions
    out = []
    a_info = [(ks, _arc_info(ks.bits, pos, n)) for ks in fam_a.members]
    b_info = [(ks, _arc_info(ks.bits, pos, n)) for ks in fam_b.members]
    for a_ks, a_arc in a_info:
        if a_arc is None:
            continue
        pa, sa = a_arc
        a_right = (sa + fam_a.k - 1) % n
        for b_ks, b_arc in b_info:
            if b_arc is None:
                continue
            pb, sb = b_arc
            pm = pa & pb
            if pm == 0:
                continue
            sm = _arc_start(pm, n)
            if sm is None:
                continue
            tm = pm.bit_count()
            if sm != sb or (sm + tm - 1) % n != a_right:
                continue
            out.append(
                RepresentablePair(a_ks, b_ks, KSet(n, a_ks.bits & b_ks.bits), perm)
            )
    return tuple(out)


def _arc_info(bits: int, pos: Sequence[int], n: int) -> tuple[int, int] | None:
    """(position mask, start) when bits is an interval of the permutation."""
    pm = _position_mask(bits, pos)
    start = _arc_start(pm, n)
    if start is None:
        return None
    return pm, start


def interval_meet_family(
    perm: CyclicPerm, fam_a: Family, fam_b: Family, m: int
) -> Family:
    """The distinct meets of size m arising from representable pairs."""
    if not 1 <= m <= min(fam_a.k, fam_b.k):
        raise BadLengthError(f"meet size {m} out of range 1..{min(fam_a.k, fam_b.k)}")
    meets = {
        rp.meet.bits
        for rp in representable_pairs(perm, fam_a, fam_b)
        if rp.meet.size == m
    }
    return Family.from_bitmasks(perm.n, m, meets)


# ---------------------------------------------------------------------------
# maximum intersecting interval subfamilies (one permutation at a time)
# ---------------------------------------------------------------------------


def _max_intersecting_interval_subsets(masks: Sequence[int]) -> tuple[int, list[int]]:
    """Max size and all maximum index subsets S with pairwise-meeting masks.

    Subset DP: S is intersecting iff S minus its lowest member is, and the
    lowest member meets everything else.
    """
    n_iv = len(masks)
    adj = [0] * n_iv
    for i in range(n_iv):
        for j in range(i + 1, n_iv):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    ok = bytearray(1 << n_iv)
    ok[0] = 1
    best, maxima = 0, [0]
    for sub in range(1, 1 << n_iv):
        low = sub & -sub
        rest = sub ^ low
        if ok[rest] and (rest & ~adj[low.bit_length() - 1]) == 0:
            ok[sub] = 1
            size = sub.bit_count()
            if size > best:
                best, maxima = size, [sub]
            elif size == best:
                maxima.append(sub)
    return best, maxima


def _sweep_one_perm(perm: CyclicPerm, k: int) -> tuple[int, int, bool]:
    """(max size, number of maxima, all maxima share an element) for perm."""
    masks = [iv.bits for iv in intervals_of_length(perm, k)]
    best, maxima = _max_intersecting_interval_subsets(masks)
    all_fixed = True
    for sub in maxima:
        common = (1 << perm.n) - 1
        s = sub
        while s:
            low = s & -s
            common &= masks[low.bit_length() - 1]
            s ^= low
        if common == 0:
            all_fixed = False
            break
    return best, len(maxima), all_fixed


def _katona_chunk(args: tuple[int, int, int, int]) -> tuple[int, set[int], bool, int]:
    n, k, start, stop = args
    best = 0
    counts: set[int] = set()
    all_fixed = True
    seen = 0
    for rest in islice(permutations(range(2, n + 1)), start, stop):
        perm = CyclicPerm(n, (1,) + rest)
        b, c, fixed = _sweep_one_perm(perm, k)
        best = max(best, b)
        counts.add(c)
        all_fixed = all_fixed and fixed
        seen += 1
    return best, counts, all_fixed, seen


@dataclass(frozen=True)
class KatonaReport:
    """Outcome of sweeping interval subfamilies of cyclic permutations."""

    n: int
    k: int
    all_perms: bool
    perms_checked: int
    max_size: int
    expected_max: int
    maxima_count: int
    maxima_count_consistent: bool
    all_maxima_fixed: bool
    uniqueness_expected: bool
    ok: bool
    example_maxima: tuple[Family, ...]


def katona_verify(
    n: int, k: int, all_perms: bool = False, workers: int = 1
) -> KatonaReport:
    """Check that among the n k-intervals of a cyclic permutation, at most k
    pairwise-meeting ones can be chosen, with equality forced through a
    common element when n > 2k.

    With all_perms the sweep covers every cyclic permutation (n <= 8), else
    just the identity cycle (n <= 16).
    """
    if not (isinstance(n, int) and isinstance(k, int)) or k < 1:
        raise HypothesisError(f"need integers n >= 2k >= 2, got n={n!r}, k={k!r}")
    if n < 2 * k:
        raise HypothesisError(f"interval analysis needs n >= 2k, got n={n}, k={k}")
    limit = MAX_SWEEP_GROUND if all_perms else MAX_SINGLE_GROUND
    if n > limit:
        mode = "all permutations" if all_perms else "one permutation"
        raise TooLargeError(f"katona_verify over {mode} is limited to n <= {limit}, got {n}")

    ident = CyclicPerm.identity(n)
    best, count0, fixed0 = _sweep_one_perm(ident, k)
    counts = {count0}
    all_fixed = fixed0
    perms_checked = 1
    if all_perms:
        total = factorial(n - 1)
        if workers > 1:
            step = max(1, total // (workers * 4))
            chunks = [(n, k, lo, min(lo + step, total)) for lo in range(0, total, step)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for b, cs, fixed, seen in pool.map(_katona_chunk, chunks):
                    best = max(best, b)
                    counts |= cs
                    all_fixed = all_fixed and fixed
        else:
            for rest in islice(permutations(range(2, n + 1)), 1, None):
                b, c, fixed = _sweep_one_perm(CyclicPerm(n, (1,) + rest), k)
                best = max(best, b)
                counts.add(c)
                all_fixed = all_fixed and fixed
        perms_checked = total

    # Reconstruct the identity permutation's maxima as concrete families.
    masks = [iv.bits for iv in intervals_of_length(ident, k)]
    _, maxima = _max_intersecting_interval_subsets(masks)
    examples = tuple(
        Family.from_bitmasks(n, k, [masks[i] for i in range(n) if sub >> i & 1])
        for sub in maxima
    )
    uniqueness_expected = n > 2 * k
    ok = (
        best == k
        and len(counts) == 1
        and (not uniqueness_expected or all_fixed)
    )
    return KatonaReport(
        n=n,
        k=k,
        all_perms=all_perms,
        perms_checked=perms_checked,
        max_size=best,
        expected_max=k,
        maxima_count=count0,
        maxima_count_consistent=len(counts) == 1,
        all_maxima_fixed=all_fixed,
        uniqueness_expected=uniqueness_expected,
        ok=ok,
        example_maxima=examples,
    )


# ---------------------------------------------------------------------------
# double counting of representable pairs across all cyclic permutations
# ---------------------------------------------------------------------------


def _dc_chunk(
    args: tuple[int, int, int, list[tuple[int, int]], int, int, int, bool]
) -> tuple[list[int], bool, int, bool]:
    """Count representability of each pair over a slice of permutations.

    Returns per-pair counts, whether meets stayed distinct within every
    permutation, the max number of distinct meets seen in one permutation,
    and whether that count stayed within the meet size bound.
    """
    n, k, l, pairs, m, start, stop, check_bound = args
    per_pair = [0] * len(pairs)
    meets_distinct = True
    bound_ok = True
    max_meets = 0
    for rest in islice(permutations(range(2, n + 1)), start, stop):
        order = (1,) + rest
        pos = [0] * n
        for i, e in enumerate(order):
            pos[e - 1] = i
        arc_cache: dict[int, tuple[int, int] | None] = {}
        seen_meets: set[int] = set()
        hits = 0
        for idx, (abits, bbits) in enumerate(pairs):
            a_arc = arc_cache.get(abits, False)
            if a_arc is False:
                a_arc = _arc_info(abits, pos, n)
                arc_cache[abits] = a_arc
            if a_arc is None:
                continue
            b_arc = arc_cache.get(bbits, False)
            if b_arc is False:
                b_arc = _arc_info(bbits, pos, n)
                arc_cache[bbits] = b_arc
            if b_arc is None:
                continue
            pa, sa = a_arc
            pb, sb = b_arc
            pm = pa & pb
            sm = _arc_start(pm, n)
            if sm is None or sm != sb:
                continue
            if (sm + m - 1) % n != (sa + k - 1) % n:
                continue
            per_pair[idx] += 1
            hits += 1
            meet_bits = abits & bbits
            if meet_bits in seen_meets:
                meets_distinct = False
            seen_meets.add(meet_bits)
        max_meets = max(max_meets, len(seen_meets))
        if check_bound and len(seen_meets) > m:
            bound_ok = False
        if len(seen_meets) != hits:
            meets_distinct = False
    return per_pair, meets_distinct, max_meets, bound_ok


@dataclass(frozen=True)
class DoubleCountReport:
    """Census of representable pairs with a fixed meet size m."""

    n: int
    k: int
    l: int
    m: int
    perms_checked: int
    pair_count: int
    per_pair_expected: int
    per_pair_ok: bool
    lhs_total: int
    rhs_total: int
    meets_distinct_ok: bool
    meet_bound_checked: bool
    meet_bound_ok: bool
    max_meets_in_one_perm: int
    ok: bool


def double_count_check(
    fam_a: Family, fam_b: Family, m: int, workers: int = 1
) -> DoubleCountReport:
    """Count, over all (n-1)! cyclic permutations, the representable pairs
    with meet size exactly m, and compare against the closed-form census.

    Every ordered pair (A, B) with |A ∩ B| = m >= 1 is representable in
    exactly (n-k-l+m)! (k-m)! m! (l-m)! cyclic permutations, so the sweep
    total must equal that factor times the number of such pairs.  Within one
    permutation the meets of distinct representable pairs must be distinct,
    and when the families are cross-intersecting with n >= k + l, at most m
    distinct meets of size m can occur per permutation.
    """
    _require_same_ground(fam_a, fam_b)
    n, k, l = fam_a.n, fam_a.k, fam_b.k
    if n > MAX_SWEEP_GROUND:
        raise TooLargeError(
            f"double_count_check sweeps (n-1)! permutations; limit n <= {MAX_SWEEP_GROUND}"
        )
    if n < 2:
        raise HypothesisError(f"double counting needs n >= 2, got {n}")
    if not 1 <= m <= min(k, l):
        raise HypothesisError(f"meet size m={m} out of range 1..{min(k, l)}")

    pairs = [
        (a, b)
        for a in fam_a.bitmasks
        for b in fam_b.bitmasks
        if (a & b).bit_count() == m
    ]
    check_bound = n >= k + l and is_cross_intersecting(fam_a, fam_b)
    total = factorial(n - 1)
    if workers > 1 and pairs:
        step = max(1, total // (workers * 4))
        chunk_args = [
            (n, k, l, pairs, m, lo, min(lo + step, total), check_bound)
            for lo in range(0, total, step)
        ]
        per_pair = [0] * len(pairs)
        meets_distinct = True
        bound_ok = True
        max_meets = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for pp, md, mm, bo in pool.map(_dc_chunk, chunk_args):
                per_pair = [x + y for x, y in zip(per_pair, pp)]
                meets_distinct = meets_distinct and md
                bound_ok = bound_ok and bo
                max_meets = max(max_meets, mm)
    else:
        per_pair, meets_distinct, max_meets, bound_ok = _dc_chunk(
            (n, k, l, pairs, m, 0, total, check_bound)
        )

    if n - k - l + m >= 0:
        factor = (
            factorial(n - k - l + m) * factorial(k - m) * factorial(m) * factorial(l - m)
        )
    else:
        factor = 0
    lhs = sum(per_pair)
    rhs = len(pairs) * factor
    per_pair_ok = all(c == factor for c in per_pair)
    ok = (
        lhs == rhs
        and per_pair_ok
        and meets_distinct
        and (bound_ok or not check_bound)
    )
    return DoubleCountReport(
        n=n,
        k=k,
        l=l,
        m=m,
        perms_checked=total,
        pair_count=len(pairs),
        per_pair_expected=factor,
        per_pair_ok=per_pair_ok,
        lhs_total=lhs,
        rhs_total=rhs,
        meets_distinct_ok=meets_distinct,
        meet_bound_checked=check_bound,
        meet_bound_ok=bound_ok if check_bound else True,
        max_meets_in_one_perm=max_meets,
        ok=ok,
    )
