"""Almost simple groups with conjugate Carter subgroups, by socle family.

The table is stored row by row in ``data/catalog.json``.  A query names a
socle family, its parameters ``l`` (the ``l`` of the family symbol), ``r``
(characteristic) and ``t`` (field exponent), and optionally facts about the
almost simple group ``A`` in an extension descriptor:

``A_equals_G``
    ``A`` is the socle itself.
``A_mod_A_cap_Ghat_is_2group``
    ``A/(A cap Ghat)`` is a 2-group.
``index_Ghat_over_A_cap_Ghat``
    the integer ``|Ghat : (A cap Ghat)|``.
``G_le_A_le_Ghat``
    ``G <= A <= Ghat``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import UnknownFamily

_TRANSLATE = str.maketrans({
    "₀": "0", "₁": "1", "₂": "2", "₃": "3", "₄": "4", "₅": "5", "₆": "6", "₇": "7", "₈": "8", "₉": "9",
    "²": "2", "³": "3", "ℓ": "l", "₊": "+", "^": None, "{": None, "}": None, "_": None, " ": None,
})


def _normalize(name: str) -> str:
    return name.translate(_TRANSLATE).casefold()


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    parameter_constraints: str
    condition: str
    row: int
    when: dict = field(default_factory=dict, hash=False, compare=False)


@dataclass
class CatalogResult:
    family: str
    verdict: str  # conjugate | not_guaranteed | conditional | not_listed
    conjugate: bool | str | None
    condition: str | None = None
    condition_text: str | None = None
    row: int | None = None
    parameter_constraints: str | None = None
    unevaluated: list[str] = field(default_factory=list)


@lru_cache(maxsize=None)
def load_table() -> dict:
    text = resources.files("carterlab").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return json.loads(text)


def catalog_entries() -> list[CatalogEntry]:
    """Every (row, family) pair of the table, in row order."""
    out = []
    for row in load_table()["rows"]:
        for e in row["entries"]:
            out.append(CatalogEntry(e["family"], e["parameter_constraints"], row["condition"], row["row"], e["when"]))
    return out


def families() -> list[str]:
    return list(dict.fromkeys(e.family for e in catalog_entries()))


def _resolve(family: str) -> str:
    key = _normalize(family)
    for fam in families():
        if _normalize(fam) == key:
            return fam
    raise UnknownFamily(family)


def _applies(when: dict, params: dict) -> bool | None:
    l, r, t = params.get("l"), params.get("r"), params.get("t")
    verdicts: list[bool | None] = []
    if when.get("t_even_if_r3"):
        if r is None:
            verdicts.append(None)
        elif r != 3:
            verdicts.append(True)
        else:
            verdicts.append(None if t is None else t % 2 == 0)
    if "r_in" in when:
        verdicts.append(None if r is None else r in when["r_in"])
    if "r_not_in" in when:
        verdicts.append(None if r is None else r not in when["r_not_in"])
    if when.get("t_odd"):
        verdicts.append(None if t is None else t % 2 == 1)
    if "l_gt" in when:
        verdicts.append(None if l is None else l > when["l_gt"])
    if False in verdicts:
        return False
    if None in verdicts:
        return None
    return True


def _evaluate(condition: str, desc: dict) -> bool | None:
    if condition == "none":
        return True
    if condition == "A_equals_G":
        return desc.get("A_equals_G")
    if condition == "between_G_and_Ghat":
        return desc.get("G_le_A_le_Ghat")
    if condition == "two_group_or_index_le_2":
        two = desc.get("A_mod_A_cap_Ghat_is_2group")
        idx = desc.get("index_Ghat_over_A_cap_Ghat")
        if two is True or (idx is not None and idx <= 2):
            return True
        if two is False and idx is not None:
            return False
        return None
    raise ValueError(f"unknown condition {condition!r}")


def catalog_lookup(family: str, params: dict | None = None, extension_descriptor: dict | None = None) -> CatalogResult:
    """The table's verdict for an almost simple ``A`` with the given socle."""
    params = params or {}
    desc = extension_descriptor or {}
    fam = _resolve(family)
    texts = load_table()["conditions"]
    entries = [e for e in catalog_entries() if e.family == fam]
    applicable = [e for e in entries if _applies(e.when, params) is True]
    unknown = [e for e in entries if _applies(e.when, params) is None]
    if not applicable:
        if unknown:
            needed = [f"row {e.row}: {e.parameter_constraints}" for e in unknown]
            return CatalogResult(fam, "conditional", "conditional", unevaluated=needed)
        return CatalogResult(fam, "not_listed", None)
    entry = applicable[0]
    unevaluated: list[str] = []
    holds = _evaluate(entry.condition, desc)
    verdict = {True: "conjugate", False: "not_guaranteed", None: "conditional"}[holds]
    if holds is None:
        unevaluated.append(texts[entry.condition])
    trigger = entry.when.get("unevaluable_if_l")
    if trigger and params.get("l") in trigger + [None] and holds is not False:
        # the Field(G) index predicate for D_4 cannot be evaluated here
        unevaluated.append(entry.parameter_constraints.split("and, ", 1)[-1])
        verdict = "conditional"
    conjugate: bool | str = {"conjugate": True, "not_guaranteed": False}.get(verdict, "conditional")
    return CatalogResult(fam, verdict, conjugate, entry.condition, texts[entry.condition], entry.row,
                         entry.parameter_constraints, unevaluated)


__all__ = ["CatalogEntry", "CatalogResult", "catalog_entries", "catalog_lookup", "families", "load_table"]
