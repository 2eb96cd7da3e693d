"""Exact root-system combinatorics and cohomology vanishing ranges for
finite Chevalley groups in the describing characteristic."""

from .rootsystem import RootSystem, RootSystemError, build_root_system, height
from .weylgroup import (WeylGroup, WeylElement, WeylCapError, decompose_pw,
                        is_prime)
from .kostant import (PartitionTable, brute_force_partition_count,
                      weight_multiplicity)
from .regions import (REGION_KINDS, enumerate_region, in_region,
                      is_linked, is_restricted, res_iso_threshold,
                      steinberg_digits)
from .cohomology import (CohomologyCalculator, CohomologyReport,
                         G1CohDescriptor, NegativeDimensionError,
                         first_nontrivial_cohomology, published_bound)

__all__ = [
    "RootSystem", "RootSystemError", "build_root_system", "height",
    "WeylGroup", "WeylElement", "WeylCapError", "decompose_pw", "is_prime",
    "PartitionTable", "brute_force_partition_count", "weight_multiplicity",
    "REGION_KINDS", "enumerate_region", "in_region", "is_linked",
    "is_restricted", "res_iso_threshold", "steinberg_digits",
    "CohomologyCalculator", "CohomologyReport", "G1CohDescriptor",
    "NegativeDimensionError", "first_nontrivial_cohomology",
    "published_bound",
]

__version__ = "0.1.0"
