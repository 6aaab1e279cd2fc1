"""The per-group verifiers behind the command line and the corpus runner.

Each command turns one group into a record (a plain mapping) and a flag
telling whether a contract was violated.  Precondition failures are not
violations; they are reported with ``status: skipped`` or
``status: not_applicable``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .carter import carter_subgroups, check_star, check_theorem, is_carter
from .config import DEFAULT_LIMITS, Limits
from .errors import CarterLabError, CentralizerNotTrivial, NoBlockSystem, NotTransitive, StarFails
from .group import FiniteGroup, Subgroup
from .io import to_record
from .lattice import minimal_normal_subgroups, normal_subgroups
from .perm import Permutation
from .lemmas import Z_K_NOTE, verify_lemma3, verify_lemma5, verify_quotient_image
from .search import center
from .series import is_abelian, is_soluble

COMMANDS = ("carter", "star", "theorem", "lemma1", "lemma3", "lemma5")


@dataclass
class CommandResult:
    record: dict
    violation: bool


def _carter(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rep = carter_subgroups(G, limits, gid)
    rec = to_record(rep)
    bad = not all(is_carter(G, c.representative) for c in rep.classes)
    if is_soluble(G) and len(rep.classes) != 1:
        bad = True
    rec["status"] = "violation" if bad else "ok"
    return CommandResult(rec, bad)


def _star(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rec = to_record(check_star(G, limits, gid))
    rec["status"] = "ok"
    return CommandResult(rec, False)


def _theorem(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rec = to_record(check_theorem(G, limits, gid))
    bad = rec["verdict"] != "consistent"
    rec["status"] = "violation" if bad else "ok"
    return CommandResult(rec, bad)


def _lemma1(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rec: dict = {"kind": "lemma1", "group_id": gid}
    if not check_star(G, limits).satisfied:
        rec["status"] = "skipped"
        rec["reason"] = "the group does not satisfy condition (*)"
        return CommandResult(rec, False)
    carter = carter_subgroups(G, limits)
    checks = []
    normals = normal_subgroups(G, limits.normal)
    for cls in carter.classes:
        for N in normals:
            checks.append({
                "carter_order": cls.order,
                "normal_order": N.order,
                "image_is_carter": verify_quotient_image(G, cls.representative, N),
            })
    bad = not all(c["image_is_carter"] for c in checks)
    rec.update({"checks": checks, "status": "violation" if bad else "ok", "limits": limits.as_dict()})
    return CommandResult(rec, bad)


def _lemma3(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rec: dict = {"kind": "lemma3", "group_id": gid}
    candidates = [M for M in minimal_normal_subgroups(G, limits.normal) if not is_abelian(M)]
    carter = carter_subgroups(G, limits)
    if not candidates or not carter.classes:
        rec["status"] = "not_applicable"
        rec["reason"] = ("no non-abelian minimal normal subgroup" if not candidates
                         else "the group has no Carter subgroup")
        return CommandResult(rec, False)
    B = candidates[0]
    H = carter.classes[0].representative
    if H.order * B.order // _meet_order(G, H, B) != G.order:
        rec["status"] = "not_applicable"
        rec["reason"] = "G is not H B for a Carter subgroup H and the minimal normal subgroup B"
        return CommandResult(rec, False)
    try:
        res = verify_lemma3(G, H, B, limits.degree, limits)
    except (NotTransitive, CentralizerNotTrivial, NoBlockSystem) as exc:
        rec["status"] = "not_applicable"
        rec["reason"] = str(exc)
        return CommandResult(rec, False)
    rec.update(to_record(res))
    rec["group_id"] = gid
    flags = [res.claim, res.h1_carter, res.bridge]
    if res.embedding is not None:
        flags.extend(res.embedding.invariants.values())
    bad = any(f is False for f in flags)
    rec["status"] = "violation" if bad else "ok"
    return CommandResult(rec, bad)


def _meet_order(G: FiniteGroup, H: Subgroup, B: Subgroup) -> int:
    return len(H.indices & B.indices)


def _lemma5(G: FiniteGroup, gid: str, limits: Limits) -> CommandResult:
    rec: dict = {"kind": "lemma5", "group_id": gid}
    carter = carter_subgroups(G, limits)
    checks = []
    for cls in carter.classes:
        K = cls.representative
        for z in sorted(center(K).element_set()):
            if all(z[i] == i for i in range(len(z))):
                continue
            entry = {"carter_order": K.order, "z": str(_perm(z))}
            try:
                r = verify_lemma5(G, K, z, limits)
            except StarFails:
                entry["status"] = "skipped"
                checks.append(entry)
                continue
            entry.update({k: v for k, v in to_record(r).items() if k not in ("kind", "note")})
            entry["status"] = "ok" if r.all_true() else "violation"
            checks.append(entry)
    bad = any(c["status"] == "violation" for c in checks)
    rec.update({"checks": checks, "status": "violation" if bad else "ok", "limits": limits.as_dict()})
    if checks:
        rec["note"] = Z_K_NOTE
    return CommandResult(rec, bad)


def _perm(z: tuple) -> Permutation:
    return Permutation._trusted(z)


_DISPATCH = {
    "carter": _carter, "star": _star, "theorem": _theorem,
    "lemma1": _lemma1, "lemma3": _lemma3, "lemma5": _lemma5,
}


def run_command(command: str, G: FiniteGroup, group_id: str = "", limits: Limits = DEFAULT_LIMITS) -> CommandResult:
    """Run one verifier; library errors become an ``error`` record."""
    if command not in _DISPATCH:
        raise ValueError(f"unknown command {command!r}")
    try:
        return _DISPATCH[command](G, group_id, limits)
    except CarterLabError as exc:
        rec = {"kind": command, "group_id": group_id, "status": "error",
               "error": type(exc).__name__, "message": str(exc)}
        return CommandResult(rec, False)


__all__ = ["COMMANDS", "CommandResult", "run_command"]
