"""Classification of subset-group families: coset structure and equivalent criteria.

For a family F with identity E over a finite group, the following are checked
independently of each other: E is a subgroup; inverses of members' elements
land in the family inverse; the family partitions its union and that union is
a subgroup; and F is exactly the coset family of N = E inside H = union(F).
For finite carriers all of these agree (which the test suite asserts); the
checks stay separate so that infinite-carrier analogues can report which
conditions break.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    CommutationFailsError,
    HomomorphismFailsError,
    NotIdempotentError,
)
from .groups import (
    FiniteGroup,
    SubgroupMask,
    all_subgroups,
    is_subgroup_mask,
    iter_bits,
    normal_subgroups_of,
)
from .subsets import GroupSubset, is_idempotent
from .search import PowerGroupFamily, power_group_family

__all__ = [
    "CosetGroupDescriptor",
    "EpimorphismReport",
    "NotCosetGroup",
    "NotSubquotient",
    "SubquotientDescriptor",
    "build_coset_group",
    "check_identity_subgroup",
    "check_inverse_closure",
    "check_partition_union_subgroup",
    "coset_group_epimorphism_check",
    "enumerate_subquotients",
    "is_group_of_cosets",
    "match_subquotient",
]


@dataclass(frozen=True)
class SubquotientDescriptor:
    """A family realized as the cosets of ``kernel`` inside ``carrier``."""

    carrier: SubgroupMask
    kernel: SubgroupMask


@dataclass(frozen=True)
class NotSubquotient:
    """Value describing the first coset-realization condition that failed."""

    condition: str
    detail: str


@dataclass(frozen=True)
class CosetGroupDescriptor:
    """A family obtained as {aE | a in H} for an idempotent E commuting with H."""

    idempotent: GroupSubset
    carrier: SubgroupMask
    family: PowerGroupFamily


@dataclass(frozen=True)
class NotCosetGroup:
    """Value: no subgroup H yields the family as {aE | a in H}."""

    detail: str


def check_identity_subgroup(f: PowerGroupFamily) -> bool:
    """Does the family identity E pass the subgroup invariants?"""
    return is_subgroup_mask(f.parent, f.identity.members)


def check_inverse_closure(f: PowerGroupFamily) -> bool:
    """For every member A and every x in A, is x^-1 in the family inverse of A?"""
    g = f.parent
    for i, a in enumerate(f.elements):
        fam_inv = f.elements[f.inverse_map[i]].members
        if g.inverse_mask(a.members) & ~fam_inv:
            return False
    return True


def check_partition_union_subgroup(f: PowerGroupFamily) -> bool:
    """Are the members pairwise disjoint with a union that is a subgroup?"""
    return _partition_union_check(f.parent, f.masks())


def _partition_union_check(g: FiniteGroup, masks: Sequence[int]) -> bool:
    union = 0
    for m in masks:
        if union & m:
            return False
        union |= m
    return is_subgroup_mask(g, union)


def _coset_masks(g: FiniteGroup, hmask: int, nmask: int) -> list[int]:
    """Masks of {aN | a in H}, deduplicated and sorted."""
    return sorted({_left_translate(g, a, nmask) for a in iter_bits(hmask)})


def _left_translate(g: FiniteGroup, a: int, mask: int) -> int:
    out = 0
    row = g.table[a]
    for x in iter_bits(mask):
        out |= 1 << row[x]
    return out


def match_subquotient(
    f: PowerGroupFamily,
) -> Union[SubquotientDescriptor, NotSubquotient]:
    """Try to realize the family as the full coset set of N = identity in H = union.

    Returns a descriptor on success, otherwise NotSubquotient naming the first
    failed condition: identity-subgroup, union-subgroup, normality, or the
    coset set differing from the family.
    """
    g = f.parent
    nmask = f.identity.members
    hmask = 0
    for a in f.elements:
        hmask |= a.members
    if not is_subgroup_mask(g, nmask):
        return NotSubquotient("identity_not_subgroup", f"identity mask {nmask:#x} is not a subgroup")
    if not is_subgroup_mask(g, hmask):
        return NotSubquotient("union_not_subgroup", f"union mask {hmask:#x} is not a subgroup")
    if any(g.conjugate_mask(nmask, h) != nmask for h in iter_bits(hmask)):
        return NotSubquotient("identity_not_normal_in_union", f"{nmask:#x} not normal in {hmask:#x}")
    cosets = _coset_masks(g, hmask, nmask)
    if cosets != sorted(f.masks()):
        return NotSubquotient("family_not_coset_set", "family differs from the coset set of N in H")
    return SubquotientDescriptor(
        carrier=SubgroupMask(g, hmask), kernel=SubgroupMask(g, nmask)
    )


def enumerate_subquotients(
    g: FiniteGroup,
) -> list[tuple[SubquotientDescriptor, PowerGroupFamily]]:
    """All pairs (H, N normal in H) with the coset family each pair induces.

    This is the classification-side census; the search-side census
    (all_power_groups) must produce exactly the same families on finite groups,
    which the verification suites assert.
    """
    out = []
    for h in all_subgroups(g):
        for n in normal_subgroups_of(g, h):
            masks = _coset_masks(g, h.members, n.members)
            fam = power_group_family(g, masks)
            out.append((SubquotientDescriptor(carrier=h, kernel=n), fam))
    return out


def build_coset_group(
    g: FiniteGroup, e: GroupSubset, h: SubgroupMask
) -> CosetGroupDescriptor:
    """Form {aE | a in H} for an idempotent E with aE = Ea for every a in H.

    Raises NotIdempotentError or CommutationFailsError when the preconditions
    fail; a product-law failure after that would be an internal bug and is
    asserted.  E need not contain the group identity and need not be a subset
    of H; distinct a may give the same coset.
    """
    if not is_idempotent(e):
        raise NotIdempotentError(f"EE != E for mask {e.members:#x}")
    emask = e.members
    for a in iter_bits(h.members):
        if _left_translate(g, a, emask) != g.right_translate_mask(emask, a):
            raise CommutationFailsError(f"aE != Ea for a = {a}", a)
    translate_of = {a: _left_translate(g, a, emask) for a in iter_bits(h.members)}
    masks = sorted(set(translate_of.values()))
    fam = power_group_family(g, masks)
    pos = {m: i for i, m in enumerate(fam.masks())}
    # Product law: (aE)(bE) = (ab)E.  Guaranteed by commutation; verify anyway.
    for a in iter_bits(h.members):
        for b in iter_bits(h.members):
            ab = g.table[a][b]
            got = g.product_mask(translate_of[a], translate_of[b])
            assert got == translate_of[ab], f"(aE)(bE) != (ab)E at a={a}, b={b}"
            assert pos[got] == fam.abstract_table[pos[translate_of[a]]][pos[translate_of[b]]]
    return CosetGroupDescriptor(idempotent=e, carrier=h, family=fam)


@dataclass(frozen=True)
class EpimorphismReport:
    """Outcome of checking a -> aE as a surjective homomorphism with kernel K."""

    homomorphism_ok: bool
    surjective: bool
    kernel: SubgroupMask
    kernel_normal_in_carrier: bool
    quotient_order: int
    quotient_iso_pairs: tuple[tuple[int, int], ...]  # (coset-of-K mask, family index)
    ok: bool


def coset_group_epimorphism_check(d: CosetGroupDescriptor) -> EpimorphismReport:
    """Verify phi(a) = aE is an epimorphism H -> family and H/K matches the family.

    K = {a in H | aE = E}.  The induced map aK -> aE must be a well-defined
    bijective homomorphism.  A failure of the homomorphism law would mean the
    descriptor was constructed inconsistently and raises HomomorphismFailsError.
    """
    g = d.family.parent
    emask = d.idempotent.members
    fam_masks = d.family.masks()
    pos = {m: i for i, m in enumerate(fam_masks)}
    helems = list(iter_bits(d.carrier.members))
    phi = {a: pos[_left_translate(g, a, emask)] for a in helems}

    table = d.family.abstract_table
    hom_ok = all(phi[g.table[a][b]] == table[phi[a]][phi[b]] for a in helems for b in helems)
    if not hom_ok:
        raise HomomorphismFailsError("phi(ab) != phi(a)phi(b) on the carrier")
    surjective = set(phi.values()) == set(range(d.family.order))

    kmask = 0
    for a in helems:
        if phi[a] == d.family.identity_index:
            kmask |= 1 << a
    kernel = SubgroupMask(g, kmask)
    knormal = all(g.conjugate_mask(kmask, h) == kmask for h in helems)

    # Cosets of K in H pair off with family elements via aK -> aE.
    pairs = {}
    for a in helems:
        ck = _left_translate(g, a, kmask)
        idx = phi[a]
        if pairs.setdefault(ck, idx) != idx:
            raise HomomorphismFailsError("aK -> aE is not well defined")
    bijective = len(pairs) == d.family.order
    ok = hom_ok and surjective and knormal and bijective
    return EpimorphismReport(
        homomorphism_ok=hom_ok,
        surjective=surjective,
        kernel=kernel,
        kernel_normal_in_carrier=knormal,
        quotient_order=len(pairs),
        quotient_iso_pairs=tuple(sorted(pairs.items())),
        ok=ok,
    )


def is_group_of_cosets(
    g: FiniteGroup, f: PowerGroupFamily
) -> Union[CosetGroupDescriptor, NotCosetGroup]:
    """Search all subgroups H for a coset-group presentation of the family.

    Uses E = the family's identity (the only possible choice: the identity of
    {aE} is E itself).  Returns the first match in (size, mask) order of H, or
    NotCosetGroup as a value.
    """
    e = f.identity
    emask = e.members
    want = sorted(f.masks())
    for h in all_subgroups(g):
        if any(
            _left_translate(g, a, emask) != g.right_translate_mask(emask, a)
            for a in iter_bits(h.members)
        ):
            continue
        masks = sorted({_left_translate(g, a, emask) for a in iter_bits(h.members)})
        if masks == want:
            return build_coset_group(g, e, h)
    return NotCosetGroup("no subgroup H has {aE | a in H} equal to the family")
