"""Open upper cuts of the rationals: a subset group that is no coset family.

The sets {x in Q : x > r}, with r ranging over numbers p + q*sqrt(2), add up
by the endpoint law cut(a) + cut(b) = cut(a+b) and form a group under
Minkowski addition.  Unlike every finite example, this family passes none of
the finite-carrier conditions: its identity is not a subgroup, negating a
member leaves the family, members overlap, and no presentation as subgroup
cosets exists.  All arithmetic below is exact -- fractions and a two-integer
representation of p + q*sqrt(2); no floats are consulted for any decision.

Run:  python demos/rational_cuts.py
"""

from fractions import Fraction

from powergroups.qcuts import (
    QuadExt,
    cut,
    cut_member,
    cut_sum,
    decompose_member,
    identity_cut,
    not_coset_group_witness,
    parse_endpoint,
    rational_between,
    sqrt2_convergents,
    sqrt2_cut,
    verify_cut_power_group,
)

# Exact comparisons against sqrt(2): the convergents alternate around it and
# obey p^2 - 2q^2 = +/-1.
print("convergents of sqrt(2):", ", ".join(str(c) for c in sqrt2_convergents(6)))
root = QuadExt.of(0, 1)
print("7/5 < sqrt2 < 17/12:",
      QuadExt.of(Fraction(7, 5)) < root < QuadExt.of(Fraction(17, 12)))

# Membership is a strict inequality, so the endpoint itself stays out.
c = cut(parse_endpoint("3/2"))
print("\ncut above 3/2 contains 3/2:", cut_member(c, Fraction(3, 2)),
      "  contains 2:", cut_member(c, Fraction(2)))

# The sum law in action: every member of cut(a) + cut(b) splits into a member
# of each summand, found exactly.
s2 = sqrt2_cut()
total = cut_sum(c, s2)
x = Fraction(3)  # 3 > 3/2 + sqrt(2), so it must decompose
u, v = decompose_member(c, s2, x)
print(f"3 in cut(3/2) + cut(sqrt2) splits as {u} + {v}")
print("parts belong to their cuts:", cut_member(c, u) and cut_member(s2, v))
print("sum endpoint:", total.endpoint)

# The full verification: group laws on a 25-cut sample, plus witnesses that
# each finite-carrier condition fails.
rep = verify_cut_power_group()
print(f"\nfamily generated by endpoints {rep.generators}: structure {rep.structure}")
print(f"  identity/inverses/associativity/commutativity: "
      f"{rep.identity_ok}/{rep.inverses_ok}/{rep.associativity_ok}/{rep.commutativity_ok}")
print(f"  0 outside the identity cut: {rep.zero_not_in_identity}")
print(f"  identity fails to be a subgroup, witness: {rep.identity_subgroup_witness}")
print(f"  negating a member leaves the family, witness: {rep.inverse_closure_witness}")
print(f"  two cuts overlap: {rep.overlap_witness}")
print(f"  {rep.decomposition_trials} random members decomposed, "
      f"{rep.decomposition_failures} failures")

# No coset presentation: the only idempotent cut sits at 0, so every coset
# would be a rational translate; an exact rational strictly between any
# rational candidate and sqrt(2) tells the two cuts apart.
w = not_coset_group_witness(trials=100, seed=0)
print(f"\nseparating rationals found for {w.separated}/{w.trials} rational candidates")
for cand, sep in w.examples:
    print(f"  candidate {cand}: separated by {sep}")
lo = QuadExt.of(Fraction(7, 5))
print("e.g. between 7/5 and sqrt2 lies", rational_between(lo, root))
