"""Exactly representable subsets of the integers and their Minkowski sums.

Three shapes cover everything this package needs: sets bounded below whose
membership bits are eventually periodic (finite sets are the special case of
an all-zero repeating word), mirror images of those (bounded above), and
unions of residue classes (periodic in both directions).  Construction always
canonicalizes (least element first, minimal period, minimal transient), so
dataclass equality coincides with set equality.

Sums are computed exactly.  For two bounded-below sets the key fact is: if A
is exactly p-periodic on [alpha, inf) and B exactly q-periodic on [beta, inf),
then A+B is exactly lcm(p,q)-periodic on [alpha + beta + lcm(p,q), inf).
(Upward: a decomposition x = a+b of x >= alpha+beta has a >= alpha or
b >= beta, and that part shifts up by lcm.  Downward: x >= alpha+beta+lcm
forces a >= alpha+lcm or b >= beta+lcm, and that part shifts down by lcm.)
So materializing bits up to that bound plus one word is exact, and the
windowed brute-force oracle can re-check any sum on request.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, lcm
from random import Random
from typing import Iterable, Optional, Sequence, Union

from .errors import NotIdempotentError, NotRepresentableError, ParamOutOfRangeError

__all__ = [
    "BoundedAbove",
    "BoundedBelow",
    "TwoSidedPeriodic",
    "ZCosetGroupReport",
    "ZSet",
    "NaturalsDemoReport",
    "UnitTranslateVerdict",
    "additive_closure",
    "bounded_below",
    "build_z_coset_group",
    "finite_zset",
    "minkowski_window_sum",
    "naturals",
    "power_group_of_naturals_demo",
    "random_bounded_below",
    "random_idempotent",
    "random_zset",
    "theorem3_unit_test",
    "two_sided",
    "z_subgroup",
    "zset_contains",
    "zset_from_text",
    "zset_is_finite",
    "zset_is_idempotent",
    "zset_is_z_subgroup",
    "zset_max",
    "zset_min",
    "zset_negate",
    "zset_residual",
    "zset_sum",
    "zset_to_text",
    "zset_translate",
    "zset_window_mask",
]

# When True, every zset_sum re-checks itself against the windowed oracle.
VERIFY_SUMS = False


def _check_bits(bits: Sequence[int], label: str) -> tuple[int, ...]:
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"{label} must be 0/1 bits, got {bits!r}")
    return out


@dataclass(frozen=True)
class BoundedBelow:
    """offset is the least element; bit i of transient answers offset+i; the
    word repeats forever after the transient.  An all-zero word (canonically
    period 1) makes the set finite."""

    offset: int
    transient: tuple[int, ...]
    period: int
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        t, w, p = self.transient, self.word, self.period
        if p < 1 or len(w) != p:
            raise ValueError("word length must equal period >= 1")
        _check_bits(t, "transient")
        _check_bits(w, "word")
        first = t[0] if t else w[0]
        if first != 1:
            raise ValueError("offset must be a member; use bounded_below() to canonicalize")
        for d in range(1, p):
            if p % d == 0 and all(w[i] == w[i % d] for i in range(p)):
                raise ValueError("word period is not minimal; use bounded_below()")
        if t and t[-1] == w[-1]:
            raise ValueError("transient not minimal; use bounded_below()")


@dataclass(frozen=True)
class BoundedAbove:
    """The mirror image {-x | x in mirror} of an infinite bounded-below set."""

    mirror: BoundedBelow

    def __post_init__(self) -> None:
        if self.mirror.word == (0,):
            raise ValueError("finite sets are represented bounded-below; negate explicitly")


@dataclass(frozen=True)
class TwoSidedPeriodic:
    """Union of residue classes: {x | x mod modulus in residues}."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self) -> None:
        m, rs = self.modulus, self.residues
        if m < 1 or not rs or any(not 0 <= r < m for r in rs):
            raise ValueError("need modulus >= 1 and nonempty residues in range")
        for d in range(1, m):
            if m % d == 0 and rs == frozenset((r + d) % m for r in rs):
                raise ValueError("modulus is not minimal; use two_sided()")


ZSet = Union[BoundedBelow, BoundedAbove, TwoSidedPeriodic]


def bounded_below(
    offset: int, transient: Sequence[int], period: int, word: Sequence[int]
) -> BoundedBelow:
    """Canonicalize an eventually periodic description into a BoundedBelow.

    Leading zero bits advance the offset, the word is cut to its least period,
    and trailing transient bits that already match the periodic continuation
    are absorbed into the word's phase.  Raises ValueError on the empty set.
    """
    bits = list(_check_bits(transient, "transient"))
    w = list(_check_bits(word, "word"))
    if period < 1 or len(w) != period:
        raise ValueError("word length must equal period >= 1")
    while bits and bits[0] == 0:
        bits.pop(0)
        offset += 1
    if not bits and 1 not in w:
        raise ValueError("empty set is not representable")
    if not bits and w[0] == 0:
        k = w.index(1)
        w = w[k:] + w[:k]
        offset += k
    for d in range(1, len(w) + 1):
        if len(w) % d == 0 and all(w[i] == w[i % d] for i in range(len(w))):
            w = w[:d]
            break
    while bits and bits[-1] == w[-1]:
        bits.pop()
        w = [w[-1]] + w[:-1]
    return BoundedBelow(offset, tuple(bits), len(w), tuple(w))


def finite_zset(elements: Iterable[int]) -> BoundedBelow:
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("empty set is not representable")
    lo = elems[0]
    bits = [0] * (elems[-1] - lo + 1)
    for x in elems:
        bits[x - lo] = 1
    return bounded_below(lo, bits, 1, (0,))


def naturals() -> BoundedBelow:
    """The non-negative integers (0 included)."""
    return BoundedBelow(0, (), 1, (1,))


def two_sided(modulus: int, residues: Iterable[int]) -> TwoSidedPeriodic:
    """Canonicalize a residue-class union to its minimal modulus."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    rs = frozenset(r % modulus for r in residues)
    if not rs:
        raise ValueError("empty set is not representable")
    for d in range(1, modulus + 1):
        if modulus % d == 0 and rs == frozenset((r + d) % modulus for r in rs):
            return TwoSidedPeriodic(d, frozenset(r % d for r in rs))
    raise AssertionError("unreachable: modulus divides itself")


# ---------------------------------------------------------------------------
# Membership, windows, structure


def zset_contains(s: ZSet, x: int) -> bool:
    if isinstance(s, BoundedBelow):
        i = x - s.offset
        if i < 0:
            return False
        if i < len(s.transient):
            return s.transient[i] == 1
        return s.word[(i - len(s.transient)) % s.period] == 1
    if isinstance(s, BoundedAbove):
        return zset_contains(s.mirror, -x)
    return x % s.modulus in s.residues


def zset_window_mask(s: ZSet, lo: int, hi: int) -> int:
    """Bitmask of the window [lo, hi): bit i answers membership of lo + i."""
    out = 0
    for i in range(hi - lo):
        if zset_contains(s, lo + i):
            out |= 1 << i
    return out


def zset_is_finite(s: ZSet) -> bool:
    return isinstance(s, BoundedBelow) and s.word == (0,)


def zset_min(s: ZSet) -> Optional[int]:
    return s.offset if isinstance(s, BoundedBelow) else None


def zset_max(s: ZSet) -> Optional[int]:
    if isinstance(s, BoundedAbove):
        return -s.mirror.offset
    if zset_is_finite(s):
        assert isinstance(s, BoundedBelow)
        return s.offset + len(s.transient) - 1
    return None


def zset_negate(s: ZSet) -> ZSet:
    if isinstance(s, BoundedBelow):
        if zset_is_finite(s):
            top = s.offset + len(s.transient) - 1
            return bounded_below(-top, tuple(reversed(s.transient)), 1, (0,))
        return BoundedAbove(s)
    if isinstance(s, BoundedAbove):
        return s.mirror
    return two_sided(s.modulus, ((-r) % s.modulus for r in s.residues))


def zset_translate(s: ZSet, t: int) -> ZSet:
    if isinstance(s, BoundedBelow):
        return BoundedBelow(s.offset + t, s.transient, s.period, s.word)
    if isinstance(s, BoundedAbove):
        return BoundedAbove(BoundedBelow(s.mirror.offset - t, s.mirror.transient, s.mirror.period, s.mirror.word))
    return two_sided(s.modulus, ((r + t) % s.modulus for r in s.residues))


def _residues_mod(s: ZSet, d: int) -> frozenset[int]:
    """The exact set {x mod d | x in s}."""
    if isinstance(s, TwoSidedPeriodic):
        g = gcd(s.modulus, d)
        return frozenset((r + k * g) % d for r in s.residues for k in range(d // g))
    if isinstance(s, BoundedAbove):
        return frozenset((-r) % d for r in _residues_mod(s.mirror, d))
    out = {(s.offset + i) % d for i, b in enumerate(s.transient) if b}
    base = s.offset + len(s.transient)
    g = gcd(s.period, d)
    for j, b in enumerate(s.word):
        if b:
            out.update((base + j + k * g) % d for k in range(d // g))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Sums


def _sum_bounded_below(a: BoundedBelow, b: BoundedBelow) -> BoundedBelow:
    o = a.offset + b.offset
    alpha = a.offset + len(a.transient)
    beta = b.offset + len(b.transient)
    lam = lcm(a.period, b.period)
    gamma = alpha + beta + lam  # sum provably lcm-periodic from here (module docstring)
    need = (gamma - o) + lam
    amask = zset_window_mask(a, a.offset, gamma + lam - b.offset)
    bmask = zset_window_mask(b, b.offset, gamma + lam - a.offset)
    conv = 0
    m = amask
    while m:
        low = m & -m
        conv |= bmask << (low.bit_length() - 1)
        m ^= low
    assert gamma + lam - o == need
    bits = [(conv >> i) & 1 for i in range(gamma - o)]
    word = [(conv >> (gamma - o + i)) & 1 for i in range(lam)]
    return bounded_below(o, bits, lam, word)


def zset_sum(a: ZSet, b: ZSet, *, verify: Optional[bool] = None) -> ZSet:
    """Exact Minkowski sum {x + y}.

    An infinite bounded-below set plus an infinite bounded-above set is
    rejected with NotRepresentableError: such a sum is unbounded both ways yet
    generally not a union of residue classes (example: {0,2,4,...} plus the
    negative odd numbers covers every odd integer but only the non-negative
    evens), so it falls outside the representable class.
    """
    if isinstance(a, TwoSidedPeriodic) and isinstance(b, TwoSidedPeriodic):
        g = gcd(a.modulus, b.modulus)
        out: ZSet = two_sided(
            g, ((r + s) % g for r in _residues_mod(a, g) for s in _residues_mod(b, g))
        )
    elif isinstance(a, TwoSidedPeriodic) or isinstance(b, TwoSidedPeriodic):
        ts, other = (a, b) if isinstance(a, TwoSidedPeriodic) else (b, a)
        m = ts.modulus
        out = two_sided(m, ((r + s) % m for r in ts.residues for s in _residues_mod(other, m)))
    elif isinstance(a, BoundedBelow) and isinstance(b, BoundedBelow):
        out = _sum_bounded_below(a, b)
    elif isinstance(a, BoundedAbove) and isinstance(b, BoundedAbove):
        out = BoundedAbove(_sum_bounded_below(a.mirror, b.mirror))
    else:
        below, above = (a, b) if isinstance(a, BoundedBelow) else (b, a)
        if not zset_is_finite(below):
            raise NotRepresentableError(
                "sum of opposite-direction infinite sets is not representable"
            )
        neg = _sum_bounded_below(zset_negate(below), above.mirror)  # type: ignore[union-attr,arg-type]
        out = zset_negate(neg)
    if verify or (verify is None and VERIFY_SUMS):
        _verify_sum(a, b, out)
    return out


def _scale(s: ZSet) -> int:
    if isinstance(s, BoundedBelow):
        return abs(s.offset) + len(s.transient) + s.period
    if isinstance(s, BoundedAbove):
        return _scale(s.mirror)
    return s.modulus


def _verify_sum(a: ZSet, b: ZSet, c: ZSet) -> None:
    sa, sb = _scale(a), _scale(b)
    span = sa + sb + sa * sb + 16
    got = zset_window_mask(c, -2 * span, 2 * span)
    want = minkowski_window_sum(a, b, -2 * span, 2 * span, pad=4 * span)
    if got != want:  # pragma: no cover
        raise AssertionError(f"sum failed windowed self-check: {a!r} + {b!r}")


def minkowski_window_sum(a: ZSet, b: ZSet, lo: int, hi: int, pad: Optional[int] = None) -> int:
    """Brute-force oracle: sum bits on [lo, hi) from operand windows.

    Operands are materialized on [lo - pad, hi + pad); the result window is
    exact whenever every representable sum in it has a decomposition inside
    the padded windows, which holds when offsets, transients, periods, and
    moduli are all small relative to pad.
    """
    if pad is None:
        pad = (hi - lo) // 2
    olo, ohi = lo - pad, hi + pad
    amask = zset_window_mask(a, olo, ohi)
    bmask = zset_window_mask(b, olo, ohi)
    conv = 0
    m = amask
    while m:
        low = m & -m
        conv |= bmask << (low.bit_length() - 1)
        m ^= low
    shift = lo - 2 * olo
    assert shift >= 0, "pad too small for this window"
    return (conv >> shift) & ((1 << (hi - lo)) - 1)


# ---------------------------------------------------------------------------
# Group-theoretic predicates over the integers


def zset_is_idempotent(e: ZSet) -> bool:
    """EE = E under addition (bounded-below idempotents have least element 0)."""
    return zset_sum(e, e) == e


def z_subgroup(d: int) -> ZSet:
    """The subgroup of multiples of d; d = 0 gives {0}."""
    if d < 0:
        raise ParamOutOfRangeError("d must be >= 0")
    if d == 0:
        return finite_zset([0])
    return two_sided(d, [0])


def zset_is_z_subgroup(s: ZSet) -> bool:
    """Subgroups of the integers are exactly {0} and the multiple sets."""
    if isinstance(s, TwoSidedPeriodic):
        return s.residues == frozenset({0})
    return s == finite_zset([0])


def zset_residual(e: BoundedBelow, a: BoundedBelow) -> Optional[BoundedBelow]:
    """The largest Q with A + Q inside E, i.e. {x | x + A subset of E}; None if empty.

    Membership of x reduces to finitely many checks: beyond
    max(stab_A, stab_E - x) + lcm(p_A, p_E) every element of A repeats an
    already-checked element modulo p_E, so the conjunction over all of A is
    decided by the window.  Q is exactly p_E-periodic from stab_E - min(A) on.
    """
    stab_a = a.offset + len(a.transient)
    stab_e = e.offset + len(e.transient)
    lam = lcm(a.period, e.period)
    lo = e.offset - a.offset
    cut = stab_e - a.offset
    bound = max(stab_a, stab_e - lo) + lam
    a_elems = [v for v in range(a.offset, bound) if zset_contains(a, v)]
    e_lo = lo + a.offset  # = e.offset; e-window covers all x + v queried below
    e_hi = cut + e.period + bound
    e_bits = [1 if zset_contains(e, v) else 0 for v in range(e_lo, e_hi)]

    def cond(x: int) -> int:
        m = max(stab_a, stab_e - x) + lam
        for v in a_elems:
            if v >= m:
                break
            idx = x + v - e_lo
            if idx < 0 or not e_bits[idx]:
                return 0
        return 1

    bits = [cond(lo + i) for i in range(cut - lo)]
    word = [cond(cut + i) for i in range(e.period)]
    if 1 not in bits and 1 not in word:
        return None
    return bounded_below(lo, bits, e.period, word)


@dataclass(frozen=True)
class UnitTranslateVerdict:
    """Two independently computed answers for one candidate family member A.

    unit_ok: A + E = A and some B solves A + B = E (decided via the residual).
    translate_ok: A is min(A) + E.  The two agree for every bounded-below A
    over an idempotent E with least element 0, which the suites check on
    randomized trials.
    """

    unit_ok: bool
    translate_ok: bool
    residual: Optional[BoundedBelow]

    @property
    def agree(self) -> bool:
        return self.unit_ok == self.translate_ok


def theorem3_unit_test(e: ZSet, a: ZSet) -> UnitTranslateVerdict:
    """Compare "A is invertible at E" with "A is a translate of E" (see class doc)."""
    if not isinstance(e, BoundedBelow) or e.offset != 0:
        raise ValueError("identity must be bounded below with least element 0")
    if not zset_is_idempotent(e):
        raise NotIdempotentError("E + E != E")
    if not isinstance(a, BoundedBelow):
        raise ValueError("candidate must be bounded below")
    in_monoid = zset_sum(a, e) == a
    q = zset_residual(e, a)
    unit_ok = in_monoid and q is not None and zset_sum(a, q) == e
    translate_ok = a == zset_translate(e, a.offset)
    return UnitTranslateVerdict(unit_ok=unit_ok, translate_ok=translate_ok, residual=q)


# ---------------------------------------------------------------------------
# Coset families over the integers


@dataclass(frozen=True)
class ZCosetGroupReport:
    """Exact checks of {a + E | a in step * Z} on a window of representatives."""

    idempotent: ZSet
    step: int
    window: tuple[int, int]
    representatives: tuple[int, ...]
    product_law_ok: bool
    product_law_witness: Optional[tuple[int, int]]
    translates_distinct: bool
    kernel_representatives: tuple[int, ...]
    overlap_witness: Optional[tuple[int, int, int]]  # (a, b, common element)
    structure: str

    @property
    def ok(self) -> bool:
        return self.product_law_ok


def _first_overlap(e: ZSet, a: int, b: int) -> Optional[int]:
    """A common element of a+E and b+E, or None; exact for every shape.

    For bounded-below E both translates are exactly periodic past
    max(a, b) + stab, so their intersection, if nonempty, shows up by one
    period later.  The bounded-above case is the mirror image.
    """
    if isinstance(e, BoundedAbove):
        y = _first_overlap(e.mirror, -a, -b)
        return None if y is None else -y
    if isinstance(e, TwoSidedPeriodic):
        lo, hi = -e.modulus, e.modulus
    else:
        stab = e.offset + len(e.transient)
        lo = min(a, b) + e.offset
        hi = max(a, b) + stab + e.period
    sa = zset_translate(e, a)
    sb = zset_translate(e, b)
    for x in range(lo, hi):
        if zset_contains(sa, x) and zset_contains(sb, x):
            return x
    return None


def build_z_coset_group(e: ZSet, step: int, lo: int = -8, hi: int = 8) -> ZCosetGroupReport:
    """Verify the coset-family laws for {a + E | a in step * Z} on [lo, hi].

    The addition law (a+E) + (b+E) = (a+b) + E is checked exactly for every
    pair of representatives.  Distinctness and overlaps are reported so the
    caller can see when the family fails to be a partition.
    """
    if step < 1:
        raise ParamOutOfRangeError("step must be >= 1")
    if not zset_is_idempotent(e):
        raise NotIdempotentError("E + E != E")
    start = -((-lo) // step) * step if lo <= 0 else ((lo + step - 1) // step) * step
    reps = tuple(range(start, hi + 1, step))
    translates = {a: zset_translate(e, a) for a in reps}
    law_ok, witness = True, None
    for a in reps:
        for b in reps:
            want = zset_translate(e, a + b)
            if zset_sum(translates[a], translates[b]) != want:  # pragma: no cover
                law_ok, witness = False, (a, b)
                break
        if not law_ok:
            break
    distinct = len(set(translates.values())) == len(reps)
    kernel = tuple(a for a in reps if translates[a] == e)
    overlap = None
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            if translates[a] != translates[b]:
                x = _first_overlap(e, a, b)
                if x is not None:
                    overlap = (a, b, x)
                    break
        if overlap:
            break
    if isinstance(e, TwoSidedPeriodic):
        structure = f"C{e.modulus // gcd(step, e.modulus)}"
    else:
        structure = "Z"
    return ZCosetGroupReport(
        idempotent=e,
        step=step,
        window=(lo, hi),
        representatives=reps,
        product_law_ok=law_ok,
        product_law_witness=witness,
        translates_distinct=distinct,
        kernel_representatives=kernel,
        overlap_witness=overlap,
        structure=structure,
    )


@dataclass(frozen=True)
class NaturalsDemoReport:
    """The one-element family {naturals} over the integers, checked exactly.

    The family is a group under addition (its single member is idempotent),
    yet its identity is not a subgroup of the integers, element inverses leave
    the family inverse, and the union is not a subgroup: the finite-carrier
    equivalences genuinely need finite order.
    """

    is_power_group: bool
    identity_is_subgroup: bool
    member_witness: int  # in E ...
    missing_inverse: int  # ... but its negation is not
    inverse_closure_holds: bool
    partition_union_subgroup_holds: bool
    subquotient_condition_failed: str

    @property
    def certifies_counterexample(self) -> bool:
        return self.is_power_group and not (
            self.identity_is_subgroup
            or self.inverse_closure_holds
            or self.partition_union_subgroup_holds
        )


def power_group_of_naturals_demo() -> NaturalsDemoReport:
    e = naturals()
    is_pg = zset_sum(e, e) == e
    witness = next(x for x in range(1, 10) if zset_contains(e, x) and not zset_contains(e, -x))
    return NaturalsDemoReport(
        is_power_group=is_pg,
        identity_is_subgroup=zset_is_z_subgroup(e),
        member_witness=witness,
        missing_inverse=-witness,
        inverse_closure_holds=zset_negate(e) == e,
        partition_union_subgroup_holds=zset_is_z_subgroup(e),  # union of {E} is E
        subquotient_condition_failed="identity_not_subgroup",
    )


# ---------------------------------------------------------------------------
# Randomized instances (seeded by the caller)


def additive_closure(generators: Sequence[int]) -> BoundedBelow:
    """Smallest subset of the non-negative integers containing 0 and closed
    under adding any generator.  Always idempotent with least element 0."""
    gens = sorted({int(x) for x in generators})
    if not gens or gens[0] < 1:
        raise ValueError("need positive generators")
    g = 0
    for x in gens:
        g = gcd(g, x)
    reduced = [x // g for x in gens]
    m = reduced[0]
    inf = float("inf")
    dist: list[float] = [inf] * m
    dist[0] = 0
    done = [False] * m
    for _ in range(m):
        r = min((d, i) for i, d in enumerate(dist) if not done[i])[1]
        done[r] = True
        for x in reduced:
            nr = (r + x) % m
            if dist[r] + x < dist[nr]:
                dist[nr] = dist[r] + x
        if all(done):
            break
    stab = int(max(dist)) + 1
    bits = [1 if dist[x % m] <= x else 0 for x in range(stab)]
    scaled = []
    for y in range(g * stab):
        q, r = divmod(y, g)
        scaled.append(bits[q] if r == 0 else 0)
    word = [1 if i == 0 else 0 for i in range(g)]
    return bounded_below(0, scaled, g, word)


def random_idempotent(rng: Random, *, max_generator: int = 10, max_count: int = 3) -> BoundedBelow:
    count = rng.randint(1, max_count)
    return additive_closure([rng.randint(1, max_generator) for _ in range(count)])


def random_bounded_below(rng: Random, *, span: int = 16, max_period: int = 8) -> BoundedBelow:
    """The raw offset draw is within +/-16; canonicalization can only move the
    least element up (to the first set bit), so it lands in [-16, 16 + span +
    max_period).  That keeps every decomposition of a sum element near the
    origin inside the oracle's padded enumeration range."""
    while True:
        offset = rng.randint(-16, 16)
        bits = [rng.randint(0, 1) for _ in range(rng.randint(0, span))]
        p = rng.randint(1, max_period)
        word = [rng.randint(0, 1) for _ in range(p)]
        if rng.random() < 0.2:
            word = [0] * p
        if 1 in bits or 1 in word:
            return bounded_below(offset, bits, p, word)


def random_zset(rng: Random) -> ZSet:
    roll = rng.random()
    if roll < 0.45:
        return random_bounded_below(rng)
    if roll < 0.75:
        b = random_bounded_below(rng)
        return zset_negate(b)
    m = rng.randint(1, 12)
    residues = [r for r in range(m) if rng.random() < 0.5] or [rng.randrange(m)]
    return two_sided(m, residues)


# ---------------------------------------------------------------------------
# Text form


_BB_RE = re.compile(r"^B([BA])\((-?\d+);([01]*);(\d+);([01]+)\)$")
_TS_RE = re.compile(r"^TS\((\d+);(\d+(?:,\d+)*)\)$")


def zset_to_text(s: ZSet) -> str:
    """Render as BB(offset;transient;period;word), BA(top;...) or TS(modulus;residues).

    BA fields describe the mirror image read downward from the top element, so
    BA(0;;1;1) is the non-positive integers.
    """
    if isinstance(s, BoundedBelow):
        bits = "".join(map(str, s.transient))
        word = "".join(map(str, s.word))
        return f"BB({s.offset};{bits};{s.period};{word})"
    if isinstance(s, BoundedAbove):
        m = s.mirror
        bits = "".join(map(str, m.transient))
        word = "".join(map(str, m.word))
        return f"BA({-m.offset};{bits};{m.period};{word})"
    return f"TS({s.modulus};{','.join(map(str, sorted(s.residues)))})"


def zset_from_text(text: str) -> ZSet:
    t = text.strip().replace(" ", "")
    m = _BB_RE.match(t)
    if m:
        kind = m.group(1)
        anchor = int(m.group(2))
        bits = [int(c) for c in m.group(3)]
        period = int(m.group(4))
        word = [int(c) for c in m.group(5)]
        if len(word) != period:
            raise ValueError(f"word length {len(word)} != period {period} in {text!r}")
        if kind == "B":
            return bounded_below(anchor, bits, period, word)
        return zset_negate(bounded_below(-anchor, bits, period, word))
    m = _TS_RE.match(t)
    if m:
        modulus = int(m.group(1))
        residues = [int(x) for x in m.group(2).split(",")]
        return two_sided(modulus, residues)
    raise ValueError(f"cannot parse integer-set text {text!r}")
