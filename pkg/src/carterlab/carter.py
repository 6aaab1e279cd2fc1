"""Carter subgroups, condition (*) and the conjugacy theorem on concrete groups."""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import DEFAULT_LIMITS, Limits
from .errors import GroupTooLarge, NontrivialCenter
from .group import FiniteGroup, Subgroup, _ensure_subgroup
from .lattice import SubgroupClass, all_subgroup_classes, composition_series, nilpotent_classes
from .search import normalizer
from .sections import SectionRealization
from .series import is_nilpotent, is_soluble


@dataclass
class CarterReport:
    group_id: str
    group_order: int
    classes: list[SubgroupClass]
    total_count: int
    conjugate: bool
    method: str
    limits: Limits = field(default_factory=Limits)


@dataclass
class StarEntry:
    factor_label: str
    nilpotent_representative: Subgroup
    induced_group_order: int
    carter_conjugate: bool


@dataclass
class StarReport:
    group_id: str
    entries: list[StarEntry]
    satisfied: bool
    factors: list[str] = field(default_factory=list)
    limits: Limits = field(default_factory=Limits)


@dataclass
class TheoremVerdict:
    group_id: str
    star: bool
    carter_conjugate: bool
    verdict: str
    carter: CarterReport | None = None
    star_report: StarReport | None = None


def is_carter(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Nilpotent and self-normalizing in ``G``."""
    H = _ensure_subgroup(G, H)
    return is_nilpotent(H) and normalizer(G, H).order == H.order


def nilpotent_subgroup_classes(G: FiniteGroup, limits: Limits = DEFAULT_LIMITS) -> list[SubgroupClass]:
    """Nilpotent subgroups of ``G`` up to conjugacy.

    Filters the full class list when ``G`` is within the exhaustive limit,
    otherwise runs the nilpotent-only extension search.
    """
    if G.order <= limits.subgroups:
        table = G.table
        return [c for c in all_subgroup_classes(G, limits.subgroups)
                if table.is_nilpotent_set(c.representative.indices)]
    if G.order <= limits.pruned:
        return nilpotent_classes(G, limits.pruned)
    raise GroupTooLarge(f"order {G.order} exceeds the pruned search limit {limits.pruned}")


def carter_subgroups(G: FiniteGroup, limits: Limits = DEFAULT_LIMITS, group_id: str = "") -> CarterReport:
    """Conjugacy classes of Carter subgroups of ``G``.

    A nilpotent class is Carter exactly when its class size equals the
    index of its representative, i.e. ``|N_G(H)| = |H|``.
    """
    method = "exhaustive" if G.order <= limits.subgroups else "pruned"
    nil = nilpotent_subgroup_classes(G, limits)
    carter = [c for c in nil if c.class_size * c.order == G.order]
    total = sum(c.class_size for c in carter)
    # no Carter subgroups at all also counts as conjugate
    return CarterReport(group_id, G.order, carter, total, len(carter) <= 1, method, limits)


def _composition_sections(G: FiniteGroup, limits: Limits):
    series = composition_series(G, limit=limits.normal)
    return [(series.terms[i], series.terms[i + 1], f)
            for i, f in enumerate(series.factors) if not f.abelian]


def check_star(G: FiniteGroup, limits: Limits = DEFAULT_LIMITS, group_id: str = "") -> StarReport:
    """Decide condition (*) for ``G``.

    For each non-abelian factor ``A/B`` of one composition series and each
    nilpotent class representative ``N``, builds ``<Aut_N(A/B), A/B>`` and
    asks whether its Carter subgroups are conjugate.
    """
    if is_soluble(G):
        return StarReport(group_id, [], True, [], limits)
    sections = _composition_sections(G, limits)
    nil = nilpotent_subgroup_classes(G, limits)
    entries: list[StarEntry] = []
    verdicts: dict[frozenset, bool] = {}
    for A, B, factor in sections:
        try:
            real = SectionRealization(A, B, limits.degree)
        except NontrivialCenter as exc:
            raise RuntimeError("a simple composition factor reported a non-trivial center") from exc
        for cls in nil:
            N = cls.representative
            induced = real.with_induced(N)
            key = induced.element_set()
            if key not in verdicts:
                verdicts[key] = carter_subgroups(induced, limits).conjugate
            entries.append(StarEntry(factor.label, N, induced.order, verdicts[key]))
    return StarReport(group_id, entries, all(e.carter_conjugate for e in entries),
                      [f.label for _, _, f in sections], limits)


def check_theorem(G: FiniteGroup, limits: Limits = DEFAULT_LIMITS, group_id: str = "") -> TheoremVerdict:
    """If ``G`` satisfies (*), its Carter subgroups must be conjugate."""
    star = check_star(G, limits, group_id)
    carter = carter_subgroups(G, limits, group_id)
    ok = (not star.satisfied) or carter.conjugate
    return TheoremVerdict(group_id, star.satisfied, carter.conjugate,
                          "consistent" if ok else "COUNTEREXAMPLE", carter, star)


__all__ = [
    "CarterReport", "StarEntry", "StarReport", "TheoremVerdict", "carter_subgroups", "check_star",
    "check_theorem", "is_carter", "nilpotent_subgroup_classes",
]
