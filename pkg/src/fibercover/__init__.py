"""Branched covers of the line by branch-cycle tuples: exact
reducibility and component genuses of fiber products, Nielsen-class
enumeration, braid action, coalescing, and genus-growth screening."""

from .permcore import (
    CycleType,
    Permutation,
    dominates,
    identity,
    parse_cycles,
)
from .permgroup import (
    BlockSystem,
    CapExceededError,
    GeneratedGroup,
)
from .cover import (
    Cover,
    InvalidCoverError,
    ValidityReport,
    character_entanglement,
    equivalent_tuples,
    genus_from_tuple,
    multipliers,
)
from .fiberprod import (
    Component,
    CoverPair,
    PairedCover,
    RamPoint,
    ScreenReport,
    detect_clc,
    double_transitive_complement,
    genus0_witness,
    pair_covers_over_common_points,
    screen_g1,
)
from .nielsen import (
    EquivalenceMode,
    NielsenClassSpec,
    NielsenElement,
    braid_apply,
    braid_orbits,
    canonical_form,
    coalesce,
    coalesce_genus_check,
    enumerate_class,
    h3_structure,
    paired_enumerate,
)
from . import catalog

__version__ = "1.0.0"

__all__ = [
    "BlockSystem",
    "CapExceededError",
    "Component",
    "Cover",
    "CoverPair",
    "CycleType",
    "EquivalenceMode",
    "GeneratedGroup",
    "InvalidCoverError",
    "NielsenClassSpec",
    "NielsenElement",
    "PairedCover",
    "Permutation",
    "RamPoint",
    "ScreenReport",
    "ValidityReport",
    "braid_apply",
    "braid_orbits",
    "canonical_form",
    "catalog",
    "character_entanglement",
    "coalesce",
    "coalesce_genus_check",
    "detect_clc",
    "dominates",
    "double_transitive_complement",
    "enumerate_class",
    "equivalent_tuples",
    "genus0_witness",
    "genus_from_tuple",
    "h3_structure",
    "identity",
    "multipliers",
    "pair_covers_over_common_points",
    "paired_enumerate",
    "parse_cycles",
    "screen_g1",
]
