"""Census records: one JSON line per family, byte-stable across runs."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from typing import Iterable, Optional

from .classify import (
    NotSubquotient,
    check_identity_subgroup,
    check_inverse_closure,
    check_partition_union_subgroup,
    match_subquotient,
)
from .groups import FiniteGroup, iter_bits
from .iso import GroupFingerprint, fingerprint
from .search import all_power_groups

__all__ = [
    "CensusRecord",
    "build_census",
    "read_records",
    "record_from_json",
    "record_to_json",
    "write_records",
]


@dataclass(frozen=True)
class CensusRecord:
    """One power group over one carrier, with its classification flags.

    ``family`` lists each member as a sorted tuple of element indices, the
    members themselves ordered by their bitmask value, which is the canonical
    order everywhere in this package.  ``carrier``/``kernel`` hold the (H, N)
    realization when the family is a subquotient; ``witness`` names the first
    failed condition when it is not.
    """

    group: str
    order: int
    family: tuple[tuple[int, ...], ...]
    identity: tuple[int, ...]
    subquotient: bool
    identity_subgroup: bool
    inverse_closed: bool
    partition_union_subgroup: bool
    fingerprint: GroupFingerprint
    carrier: Optional[tuple[int, ...]]
    kernel: Optional[tuple[int, ...]]
    witness: Optional[str]

    @property
    def canonical_key(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        return (self.order, self.family)


def _indices(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def build_census(
    g: FiniteGroup, label: str, *, max_order: int = 16, jobs: int = 1
) -> list[CensusRecord]:
    out = []
    for fam in all_power_groups(g, max_order=max_order, jobs=jobs):
        verdict = match_subquotient(fam)
        missed = isinstance(verdict, NotSubquotient)
        abstract = fam.abstract_group()
        out.append(
            CensusRecord(
                group=label,
                order=fam.order,
                family=tuple(_indices(m) for m in fam.masks()),
                identity=_indices(fam.identity.members),
                subquotient=not missed,
                identity_subgroup=check_identity_subgroup(fam),
                inverse_closed=check_inverse_closure(fam),
                partition_union_subgroup=check_partition_union_subgroup(fam),
                fingerprint=fingerprint(abstract),
                carrier=None if missed else _indices(verdict.carrier.members),
                kernel=None if missed else _indices(verdict.kernel.members),
                witness=verdict.condition if missed else None,
            )
        )
    out.sort(key=lambda r: r.canonical_key)
    return out


def record_to_json(r: CensusRecord) -> str:
    fp = r.fingerprint
    payload = {
        "group": r.group,
        "order": r.order,
        "family": [list(m) for m in r.family],
        "identity": list(r.identity),
        "subquotient": r.subquotient,
        "identity_subgroup": r.identity_subgroup,
        "inverse_closed": r.inverse_closed,
        "partition_union_subgroup": r.partition_union_subgroup,
        "fingerprint": {
            "order": fp.order,
            "abelian": fp.abelian,
            "element_orders": list(fp.element_orders),
            "center_size": fp.center_size,
            "conjugacy_class_sizes": list(fp.conjugacy_class_sizes),
        },
        "carrier": None if r.carrier is None else list(r.carrier),
        "kernel": None if r.kernel is None else list(r.kernel),
        "witness": r.witness,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def record_from_json(line: str) -> CensusRecord:
    d = json.loads(line)
    fp = d["fingerprint"]
    return CensusRecord(
        group=d["group"],
        order=d["order"],
        family=tuple(tuple(m) for m in d["family"]),
        identity=tuple(d["identity"]),
        subquotient=d["subquotient"],
        identity_subgroup=d["identity_subgroup"],
        inverse_closed=d["inverse_closed"],
        partition_union_subgroup=d["partition_union_subgroup"],
        fingerprint=GroupFingerprint(
            order=fp["order"],
            abelian=fp["abelian"],
            element_orders=tuple((o, n) for o, n in fp["element_orders"]),
            center_size=fp["center_size"],
            conjugacy_class_sizes=tuple(fp["conjugacy_class_sizes"]),
        ),
        carrier=None if d["carrier"] is None else tuple(d["carrier"]),
        kernel=None if d["kernel"] is None else tuple(d["kernel"]),
        witness=d["witness"],
    )


def write_records(path: str, records: Iterable[CensusRecord]) -> None:
    """Write atomically: a killed run never leaves a partial final file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".census-")
    try:
        with os.fdopen(fd, "w") as fh:
            for r in records:
                fh.write(record_to_json(r) + "\n")
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def read_records(path: str) -> list[CensusRecord]:
    with open(path) as fh:
        return [record_from_json(line) for line in fh if line.strip()]
