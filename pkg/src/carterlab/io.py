"""Group files and report serialization.

A group file is either a permutation group::

    # id: Alt4
    degree 4
    (1 2)(3 4)
    (1 2 3)

or a Cayley table with 1-indexed entries whose first row and column are the
identity::

    cayley 2
    1 2
    2 1

Comment lines of the form ``# key: value`` become metadata; ``id`` names the
group in reports.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field, fields, is_dataclass
from pathlib import Path

import numpy as np
import yaml

from .errors import DegreeMismatch, MalformedPermutation, NotALatinSquare, ParseError
from .group import FiniteGroup, generate
from .perm import Permutation

_META_RE = re.compile(r"#\s*([A-Za-z_][\w-]*)\s*:\s*(.*)$")


@dataclass
class GroupFile:
    id: str
    degree: int
    generators: list[str] = field(default_factory=list)
    cayley: list[list[int]] | None = None
    metadata: dict[str, str] = field(default_factory=dict)

    def group(self) -> FiniteGroup:
        if self.cayley is not None:
            return _regular_representation(np.asarray(self.cayley) - 1)
        return generate([Permutation.parse(g, self.degree) for g in self.generators], self.degree)


def _looks_like_text(source: str) -> bool:
    return not source.strip() or "\n" in source or source.lstrip().startswith(("degree", "cayley", "#"))


def read_group_file(source: str | os.PathLike, default_id: str | None = None) -> GroupFile:
    """Parse a group file given as a path or as its text."""
    if isinstance(source, os.PathLike) or (isinstance(source, str) and not _looks_like_text(source)):
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        default_id = default_id or path.stem
    else:
        text = source
    return _parse_text(text, default_id or "stdin")


def parse_group_file(source: str | os.PathLike) -> FiniteGroup:
    """The group described by a group file (path or text)."""
    return read_group_file(source).group()


def _parse_text(text: str, default_id: str) -> GroupFile:
    metadata: dict[str, str] = {}
    header = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _META_RE.match(line)
            if m:
                metadata[m.group(1)] = m.group(2).strip()
            continue
        if header is None:
            header = (lineno, line)
        else:
            body.append((lineno, raw))
    if header is None:
        raise ParseError("missing header line ('degree N' or 'cayley N')", line=1)
    hline, htext = header
    parts = htext.split()
    if len(parts) != 2 or parts[0] not in ("degree", "cayley"):
        raise ParseError(f"expected 'degree N' or 'cayley N', got {htext!r}", line=hline, column=1)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"size {parts[1]!r} is not an integer", line=hline,
                         column=htext.index(parts[1]) + 1) from None
    if n < 1:
        raise ParseError("size must be positive", line=hline, column=htext.index(parts[1]) + 1)
    gid = metadata.get("id", default_id)
    if parts[0] == "degree":
        gens = []
        for lineno, raw in body:
            try:
                Permutation.parse(raw, n)
            except MalformedPermutation as exc:
                raise DegreeMismatch(str(exc), line=lineno, column=_first_bad_point(raw, n)) from None
            except ParseError as exc:
                raise ParseError(exc.message, line=lineno, column=exc.column) from None
            gens.append(raw.strip())
        return GroupFile(gid, n, gens, None, metadata)
    rows = []
    for lineno, raw in body:
        entries = raw.split()
        try:
            rows.append([int(x) for x in entries])
        except ValueError:
            bad = next(x for x in entries if not x.lstrip("-").isdigit())
            raise ParseError(f"non-integer entry {bad!r}", line=lineno, column=raw.index(bad) + 1) from None
        if len(entries) != n:
            raise DegreeMismatch(f"row has {len(entries)} entries, expected {n}", line=lineno)
    if len(rows) != n:
        raise DegreeMismatch(f"table has {len(rows)} rows, expected {n}", line=body[-1][0] if body else hline)
    _check_cayley(np.asarray(rows), [ln for ln, _ in body])
    return GroupFile(gid, n, [], rows, metadata)


def _first_bad_point(raw: str, n: int) -> int | None:
    for m in re.finditer(r"\d+", raw):
        if not 1 <= int(m.group(0)) <= n:
            return m.start() + 1
    return None


def _check_cayley(table: np.ndarray, linenos: list[int]) -> None:
    n = table.shape[0]
    expected = np.arange(1, n + 1)
    for i, row in enumerate(table):
        if sorted(row.tolist()) != expected.tolist():
            raise NotALatinSquare("row is not a permutation of 1..N", line=linenos[i])
    for j in range(n):
        if sorted(table[:, j].tolist()) != expected.tolist():
            raise NotALatinSquare(f"column {j + 1} is not a permutation of 1..N", line=linenos[0], column=j + 1)
    if not (table[0] == expected).all() or not (table[:, 0] == expected).all():
        raise NotALatinSquare("first row and column must be the identity", line=linenos[0])
    t = table - 1
    # left[a, b, c] = (ab)c and right[a, b, c] = a(bc)
    left = t[t[:, :, None], np.arange(n)[None, None, :]]
    right = t[np.arange(n)[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(x) + 1 for x in bad[0])
        raise ParseError(f"table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})", line=linenos[a - 1])


def _regular_representation(t: np.ndarray) -> FiniteGroup:
    """Right regular action ``a -> a*g`` of the table group, on ``n`` points."""
    n = t.shape[0]
    perms = [tuple(int(x) for x in t[:, g]) for g in range(n)]
    # greedy generating set by closure on element numbers
    gens: list[int] = []
    seen = {0}
    for g in range(1, n):
        if g in seen:
            continue
        gens.append(g)
        queue = list(seen)
        for a in queue:
            for s in gens:
                b = int(t[a, s])
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
    return generate([Permutation(perms[g]) for g in gens], n)


def format_group_file(G: FiniteGroup, group_id: str | None = None, metadata: dict | None = None) -> str:
    """A ``degree`` group file for ``G``; reading it back gives the same group."""
    lines = []
    meta = dict(metadata or {})
    if group_id is not None:
        meta = {"id": group_id, **meta}
    for k, v in meta.items():
        lines.append(f"# {k}: {v}")
    lines.append(f"degree {G.degree}")
    lines.extend(G.sorted_generator_words())
    return "\n".join(lines) + "\n"


def format_cayley_file(table: list[list[int]], group_id: str | None = None, metadata: dict | None = None) -> str:
    lines = []
    meta = dict(metadata or {})
    if group_id is not None:
        meta = {"id": group_id, **meta}
    for k, v in meta.items():
        lines.append(f"# {k}: {v}")
    lines.append(f"cayley {len(table)}")
    width = len(str(len(table)))
    lines.extend(" ".join(str(x).rjust(width) for x in row) for row in table)
    return "\n".join(lines) + "\n"


# -- reports -------------------------------------------------------------------


def _subgroup_record(H: FiniteGroup) -> dict:
    return {"order": H.order, "generators": H.sorted_generator_words()}


def to_record(report) -> dict:
    """A plain, order-stable mapping for any report object of the package."""
    from .carter import CarterReport, StarReport, TheoremVerdict
    from .catalog import CatalogResult
    from .lemmas import Lemma3Result, Lemma5Result

    if isinstance(report, dict):
        return report
    if isinstance(report, CarterReport):
        return {
            "kind": "carter",
            "group_id": report.group_id,
            "group_order": report.group_order,
            "method": report.method,
            "conjugate": report.conjugate,
            "total_count": report.total_count,
            "classes": [{**_subgroup_record(c.representative), "class_size": c.class_size}
                        for c in report.classes],
            "limits": report.limits.as_dict(),
        }
    if isinstance(report, StarReport):
        return {
            "kind": "star",
            "group_id": report.group_id,
            "satisfied": report.satisfied,
            "nonabelian_factors": list(report.factors),
            "entries": [{
                "factor": e.factor_label,
                "nilpotent": _subgroup_record(e.nilpotent_representative),
                "induced_group_order": e.induced_group_order,
                "carter_conjugate": e.carter_conjugate,
            } for e in report.entries],
            "limits": report.limits.as_dict(),
        }
    if isinstance(report, TheoremVerdict):
        rec = {
            "kind": "theorem",
            "group_id": report.group_id,
            "star": report.star,
            "carter_conjugate": report.carter_conjugate,
            "verdict": report.verdict,
        }
        if report.carter is not None:
            rec["carter_classes"] = to_record(report.carter)["classes"]
            rec["limits"] = report.carter.limits.as_dict()
        return rec
    if isinstance(report, Lemma3Result):
        rec = {"kind": "lemma3", "claim": report.claim, "h1_carter": report.h1_carter,
               "bridge": report.bridge, "k": report.k}
        emb = report.embedding
        if emb is not None:
            rec["embedding"] = {
                "p": emb.p, "l": emb.l, "A_order": emb.A.order, "A_degree": emb.A.degree,
                "N_order": emb.N.order if emb.N is not None else None,
                "H_orders": [Hi.order for Hi in emb.H_list],
                "invariants": dict(emb.invariants),
            }
        return rec
    if isinstance(report, Lemma5Result):
        return {"kind": "lemma5", **{f.name: getattr(report, f.name) for f in fields(report)}}
    if isinstance(report, CatalogResult):
        return {"kind": "catalog", **{f.name: getattr(report, f.name) for f in fields(report)}}
    if is_dataclass(report):
        return {f.name: getattr(report, f.name) for f in fields(report)}
    raise TypeError(f"cannot serialize {type(report).__name__}")


def serialize_report(report, fmt: str = "text") -> str:
    """``"structured"`` gives JSON; ``"text"`` gives the same fields as YAML-style key/value text."""
    rec = to_record(report)
    if fmt == "structured":
        return json.dumps(rec, indent=2, ensure_ascii=False) + "\n"
    if fmt == "text":
        return yaml.safe_dump(rec, sort_keys=False, default_flow_style=False, allow_unicode=True, width=100)
    raise ValueError(f"unknown format {fmt!r}")


__all__ = [
    "GroupFile", "format_cayley_file", "format_group_file", "parse_group_file", "read_group_file",
    "serialize_report", "to_record",
]
