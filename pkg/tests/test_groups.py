"""Cayley-table validation, the group catalog, and subgroup machinery."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powergroups.errors import (
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    NotASubgroupError,
    NotClosedError,
    ParamOutOfRangeError,
    SizeCapExceededError,
    UnknownFamilyError,
)
from powergroups.groups import (
    all_subgroups,
    catalog,
    closure_mask,
    direct_product,
    exponent,
    group_from_name,
    is_subgroup_mask,
    iter_bits,
    load_table_file,
    normal_subgroups_of,
    subgroup_mask,
    validate_cayley,
)

S3 = catalog("symmetric", 3)
D4 = catalog("dihedral", 4)
Q8 = catalog("quaternion8")
C4 = catalog("cyclic", 4)
C6 = catalog("cyclic", 6)
C8 = catalog("cyclic", 8)
V4 = catalog("klein4")


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def naive_product_mask(g, am, bm):
    out = 0
    for a in range(g.order):
        if am >> a & 1:
            for b in range(g.order):
                if bm >> b & 1:
                    out |= 1 << g.mul(a, b)
    return out


def naive_is_subgroup(g, mask):
    elems = [i for i in range(g.order) if mask >> i & 1]
    if g.identity not in elems:
        return False
    es = set(elems)
    return all(g.mul(a, b) in es for a in elems for b in elems) and all(
        g.inv(a) in es for a in elems
    )


# ---------------------------------------------------------------------------
# validate_cayley


def test_validate_accepts_cyclic_tables():
    for n in range(1, 7):
        g = validate_cayley(cyclic_table(n))
        assert g.order == n
        assert g.identity == 0
        assert all(g.inv(k) == (n - k) % n for k in range(n))


def test_validate_relabels_identity_to_zero():
    # C3 with its elements permuted so the identity sits at index 2.
    perm = (2, 0, 1)  # old index -> new index, identity (old 0) -> 2
    base = cyclic_table(3)
    shuffled = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            shuffled[perm[i]][perm[j]] = perm[base[i][j]]
    g = validate_cayley(shuffled)
    assert g.identity == 0
    assert sorted(g.element_order(a) for a in g.elements()) == [1, 3, 3]


def test_validate_rejects_empty_table():
    with pytest.raises(NoIdentityError):
        validate_cayley([])


def test_validate_rejects_ragged_and_out_of_range():
    with pytest.raises(NotClosedError):
        validate_cayley([[0, 1], [1]])
    with pytest.raises(NotClosedError):
        validate_cayley([[0, 1], [1, 7]])
    with pytest.raises(NotClosedError):
        validate_cayley([[0, 1], [1, "x"]])


def test_validate_rejects_missing_identity():
    with pytest.raises(NoIdentityError):
        validate_cayley([[0, 0], [0, 0]])


def test_validate_rejects_missing_inverse():
    # min(i, j) on {0, 1}: associative, identity is 1, but row 0 never reaches it.
    with pytest.raises(NoInverseError):
        validate_cayley([[0, 0], [0, 1]])


def test_validate_rejects_non_associative_with_witness():
    table = [[0, 1, 2], [1, 1, 0], [2, 0, 1]]
    with pytest.raises(NotAssociativeError) as info:
        validate_cayley(table)
    a, b, c = info.value.witness
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_validate_respects_order_cap():
    with pytest.raises(SizeCapExceededError):
        validate_cayley(cyclic_table(3), max_order=2)


# ---------------------------------------------------------------------------
# Catalog


def test_catalog_orders_and_abelian_flags():
    expected = {
        "trivial": (1, True),
        "C2": (2, True),
        "C3": (3, True),
        "C5": (5, True),
        "C8": (8, True),
        "klein4": (4, True),
        "C2xC3": (6, True),
        "S3": (6, False),
        "S4": (24, False),
        "D4": (8, False),
        "D5": (10, False),
        "Q8": (8, False),
    }
    for name, (order, abelian) in expected.items():
        g = group_from_name(name)
        assert (g.order, g.is_abelian) == (order, abelian), name


def test_element_order_histograms():
    def hist(g):
        out = {}
        for a in g.elements():
            k = g.element_order(a)
            out[k] = out.get(k, 0) + 1
        return out

    assert hist(Q8) == {1: 1, 2: 1, 4: 6}
    assert hist(D4) == {1: 1, 2: 5, 4: 2}
    assert hist(V4) == {1: 1, 2: 3}
    assert hist(S3) == {1: 1, 2: 3, 3: 2}


def test_exponent():
    assert exponent(C6) == 6
    assert exponent(V4) == 2
    assert exponent(S3) == 6
    assert exponent(Q8) == 4


def test_catalog_rejects_bad_parameters():
    with pytest.raises(ParamOutOfRangeError):
        catalog("cyclic", 0)
    with pytest.raises(ParamOutOfRangeError):
        catalog("cyclic", 2, 3)
    with pytest.raises(ParamOutOfRangeError):
        catalog("symmetric", 5)
    with pytest.raises(ParamOutOfRangeError):
        catalog("quaternion8", 2)
    with pytest.raises(ParamOutOfRangeError):
        catalog("klein4", 1)
    with pytest.raises(ParamOutOfRangeError):
        catalog("direct_product", 2, 0)
    with pytest.raises(UnknownFamilyError):
        catalog("frobnicate")


def test_group_from_name_parsing():
    assert group_from_name("C2xC3").order == 6
    assert group_from_name("c2*c2").is_abelian
    for alias in ("trivial", "1", "C1", "c1"):
        assert group_from_name(alias).order == 1
    assert group_from_name("V4").table == group_from_name("klein4").table
    with pytest.raises(UnknownFamilyError):
        group_from_name("X9")
    with pytest.raises(UnknownFamilyError):
        group_from_name("")
    with pytest.raises(ParamOutOfRangeError):
        group_from_name("S5")


def test_direct_product_structure():
    g = direct_product(catalog("cyclic", 2), catalog("cyclic", 3))
    assert g.order == 6 and g.is_abelian
    assert max(g.element_order(a) for a in g.elements()) == 6  # so iso to C6
    # Pair (i1, i2) sits at index i1 * n2 + i2 and multiplies componentwise.
    c2, c3 = catalog("cyclic", 2), catalog("cyclic", 3)
    for i1 in range(2):
        for i2 in range(3):
            for j1 in range(2):
                for j2 in range(3):
                    got = g.mul(i1 * 3 + i2, j1 * 3 + j2)
                    assert got == c2.mul(i1, j1) * 3 + c3.mul(i2, j2)
    with pytest.raises(SizeCapExceededError):
        direct_product(C8, C8, max_order=32)


# ---------------------------------------------------------------------------
# Subgroups


@pytest.mark.parametrize("g", [S3, D4, C6, V4, Q8], ids=lambda g: g.name)
def test_subgroup_detection_matches_naive_definition(g):
    for mask in range(1, 1 << g.order):
        assert is_subgroup_mask(g, mask) == naive_is_subgroup(g, mask)


def test_all_subgroups_counts_and_order():
    # Classical counts: cyclic groups have one subgroup per divisor; V4 has
    # trivial + three C2 + itself; D4 has 10; Q8 has 1 + 1 + 3 + 1.
    counts = {"C6": 4, "C8": 4, "klein4": 5, "S3": 6, "D4": 10, "Q8": 6}
    for name, expected in counts.items():
        g = group_from_name(name)
        subs = all_subgroups(g)
        assert len(subs) == expected, name
        keys = [(s.size, s.members) for s in subs]
        assert keys == sorted(keys)
        assert {s.members for s in subs} == {
            m for m in range(1, 1 << g.order) if naive_is_subgroup(g, m)
        }


def test_subgroup_mask_validation():
    h = subgroup_mask(C4, [0, 2])
    assert h.size == 2 and h.elements() == (0, 2) and 2 in h and 1 not in h
    with pytest.raises(NotASubgroupError):
        subgroup_mask(C4, [0, 1])  # 1 + 1 = 2 escapes the mask
    with pytest.raises(NotASubgroupError):
        subgroup_mask(C4, [1, 2])  # misses the identity


def test_normal_subgroups_relative_to_carrier():
    full = subgroup_mask(S3, (1 << 6) - 1)
    normals = normal_subgroups_of(S3, full)
    assert sorted(n.size for n in normals) == [1, 3, 6]
    # Inside a C2 carrier the same C2 is normal even though it is not in S3.
    c2 = next(h for h in all_subgroups(S3) if h.size == 2)
    assert sorted(n.size for n in normal_subgroups_of(S3, c2)) == [1, 2]
    # Every subgroup of Q8 is normal.
    q8full = subgroup_mask(Q8, (1 << 8) - 1)
    assert len(normal_subgroups_of(Q8, q8full)) == len(all_subgroups(Q8))
    with pytest.raises(NotASubgroupError):
        normal_subgroups_of(D4, subgroup_mask(S3, [0]))


# ---------------------------------------------------------------------------
# Mask arithmetic


@given(raw_a=st.integers(min_value=0), raw_b=st.integers(min_value=0), pick=st.integers(0, 2))
def test_mask_operations_match_naive_loops(raw_a, raw_b, pick):
    g = (S3, D4, C6)[pick]
    am = 1 + raw_a % g.full_mask
    bm = 1 + raw_b % g.full_mask
    assert g.product_mask(am, bm) == naive_product_mask(g, am, bm)
    b = next(iter_bits(bm))
    assert g.right_translate_mask(am, b) == naive_product_mask(g, am, 1 << b)
    want_inv = 0
    for a in iter_bits(am):
        want_inv |= 1 << g.inv(a)
    assert g.inverse_mask(am) == want_inv
    h = next(iter_bits(bm))
    want_conj = 0
    for a in iter_bits(am):
        want_conj |= 1 << g.mul(g.mul(h, a), g.inv(h))
    assert g.conjugate_mask(am, h) == want_conj


def test_iter_bits_round_trip():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []
    mask = 0
    for i in iter_bits(0b1110010):
        mask |= 1 << i
    assert mask == 0b1110010


def test_closure_mask_generates_subgroups():
    # In D4 the rotations occupy indices 0..3; closing over one rotation
    # of order 4 yields exactly that block.
    assert closure_mask(D4.table, 0b10 | 1) == 0b1111
    assert closure_mask(S3.table, 1) == 1


# ---------------------------------------------------------------------------
# Table files


def test_load_table_file_round_trip(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({"order": 3, "table": cyclic_table(3)}))
    g = load_table_file(str(path))
    assert g.order == 3 and g.name == "c3"


def test_load_table_file_rejects_bad_documents(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"table": cyclic_table(3)}))
    with pytest.raises(NotClosedError):
        load_table_file(str(bad))
    bad.write_text(json.dumps({"order": 4, "table": cyclic_table(3)}))
    with pytest.raises(NotClosedError):
        load_table_file(str(bad))
    bad.write_text(json.dumps([1, 2, 3]))
    with pytest.raises(NotClosedError):
        load_table_file(str(bad))
