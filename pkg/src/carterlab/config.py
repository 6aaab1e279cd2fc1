"""Size limits shared by the searches and recorded in every report."""
from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Limits:
    # exhaustive subgroup enumeration (all conjugacy classes)
    subgroups: int = 400
    # nilpotent-only search used for Carter subgroups of larger groups
    pruned: int = 10_000
    # degree of element-action realizations of simple sections
    degree: int = 2500
    # full overgroup enumeration in the Lemma 5 check
    overgroups: int = 400
    # normal-subgroup and composition-series searches
    normal: int = 10_000

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_LIMITS = Limits()
