"""Exact arithmetic on eventually periodic subsets of the integers.

Over an infinite carrier the finite theory breaks in a specific way: the
one-member family {non-negative integers} is a group under Minkowski addition
(its member is its own identity) even though that identity is not a subgroup
of the integers.  This script builds such sets exactly, adds them, checks
sums against a brute-force window, and runs the invertible-iff-translate test
that characterizes the groups living at a given idempotent.

Run:  python demos/integer_sets.py
"""

from random import Random

from powergroups.zsets import (
    additive_closure,
    bounded_below,
    build_z_coset_group,
    minkowski_window_sum,
    naturals,
    power_group_of_naturals_demo,
    theorem3_unit_test,
    zset_residual,
    zset_sum,
    zset_to_text,
    zset_translate,
    zset_window_mask,
    random_zset,
)

# Sets are stored canonically as offset + transient bits + repeating word.
nats = naturals()
evens = bounded_below(0, [], 2, [1, 0])
gapped = additive_closure([2, 3])  # 0, 2, 3, 4, ... : everything but 1
print("naturals      ", zset_to_text(nats))
print("even naturals ", zset_to_text(evens))
print("<2,3> closure ", zset_to_text(gapped))

# Sums are computed symbolically, with a proven bound on where the periodic
# part starts, so equality of sets is exact equality of representations.
s = zset_sum(evens, additive_closure([3]))
print("\nevens + multiples of 3 =", zset_to_text(s), "(equals <2,3> closure:", s == gapped, ")")

# Any window of a symbolic sum must agree with directly adding the members.
rng = Random(7)
checked = 0
for _ in range(300):
    a, b = random_zset(rng), random_zset(rng)
    try:
        c = zset_sum(a, b)
    except ValueError:
        continue  # opposite-direction infinite tails have no closed form
    assert zset_window_mask(c, -64, 65) == minkowski_window_sum(a, b, -64, 65, pad=64)
    checked += 1
print(f"\n{checked} random symbolic sums match the windowed brute force on [-64, 64]")

# At a fixed idempotent E, the sets invertible under addition-with-E are
# exactly the translates of E.  The unit side is decided through the residual
# set Q = {x : x + A inside E}, not by trusting the translate side.
e = gapped
translate = zset_translate(e, 4)
thick = zset_sum(nats, e)  # contains E but is no translate of it
for label, a in [("E + 4", translate), ("naturals + E", thick)]:
    v = theorem3_unit_test(e, a)
    q = zset_residual(e, a)
    print(f"  {label:14s} unit: {v.unit_ok!s:5s} translate: {v.translate_ok!s:5s} "
          f"residual {None if q is None else zset_to_text(q)}")

# The counterexample that needs an infinite carrier: {naturals} is a group
# whose identity fails to be a subgroup, fails inverse closure, and whose
# union is not a subgroup.
demo = power_group_of_naturals_demo()
print(f"\n{{naturals}} is a one-member group: {demo.is_power_group}")
print(f"  identity a subgroup: {demo.identity_is_subgroup} "
      f"(witness {demo.member_witness} in E, {demo.missing_inverse} not in E)")
print(f"  certifies the counterexample: {demo.certifies_counterexample}")

# Translates of naturals tile the integers into a coset-like picture, except
# the cosets overlap: it is a group of cosets that is not a quotient.
rep = build_z_coset_group(nats, 1, lo=-3, hi=3)
print(f"\ntranslates a + naturals for a in [-3, 3]: product law {rep.product_law_ok}, "
      f"structure {rep.structure}, overlap witness {rep.overlap_witness}")
