"""Carter subgroups of finite permutation groups and the conjugacy criterion (*)."""
from .carter import (
    CarterReport, StarEntry, StarReport, TheoremVerdict, carter_subgroups, check_star, check_theorem, is_carter,
    nilpotent_subgroup_classes,
)
from .catalog import CatalogEntry, CatalogResult, catalog_entries, catalog_lookup
from .config import DEFAULT_LIMITS, Limits
from .corpus import run_corpus
from .errors import *  # noqa: F403
from .group import FiniteGroup, StabChain, Subgroup, generate
from .io import parse_group_file, read_group_file, serialize_report
from .lattice import (
    CompositionSeries, SubgroupClass, all_subgroup_classes, are_conjugate, composition_series,
    decompose_direct_factors, minimal_normal_subgroups, normal_subgroups,
)
from .lemmas import (
    Lemma3Result, Lemma5Result, WreathEmbedding, build_wreath_embedding, verify_lemma3, verify_lemma5,
    verify_quotient_image,
)
from .perm import Permutation
from .search import center, centralizer, is_normal, normalizer
from .sections import SectionMap, SectionRealization, group_with_induced, induced_automorphisms, quotient
from .series import (
    derived_series, fitting_subgroup, is_abelian, is_nilpotent, is_soluble, lower_central_series, sylow_subgroup,
)

__version__ = "0.1.0"
