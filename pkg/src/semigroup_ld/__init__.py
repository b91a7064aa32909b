"""Length density of numerical semigroups: exact LD values, certified
periodic windows, tasty/bland classification, structured families, and
gluing scans.  Hot DP sweeps run on a compiled kernel when the extension is
available (see `KERNEL`); set SEMIGROUP_LD_PURE=1 to force the fallback.
"""
from ._kernel import KERNEL, SweepStats, sweep
from .core import NumericalSemigroup, from_generators
from .density import (
    Classification,
    PeriodicityCertificate,
    certify_periodicity,
    ld_large_n,
    ld_of_element,
    ld_of_semigroup,
    ld_profile,
    partition_lengths,
)
from .factor import (
    BettiData,
    SemigroupDelta,
    betti_elements,
    delta_of,
    delta_of_semigroup,
    factorization_graph_components,
    factorizations,
    length_set,
    length_set_table,
    minimal_presentation,
)
from .families import (
    Med4Result,
    MedBettiRecord,
    ThreegenReport,
    classify_med4,
    classify_threegen,
    med4_grid,
    med_check,
    med_composite_construct,
    med_prime_bland,
    med_small_betti_check,
    supersymmetric,
)
from .gluings import (
    GluingSpec,
    ProportionResult,
    RegionBounds,
    ScanResult,
    betti_of_gluing,
    classify_gluing,
    glue,
    glued_length_set,
    lambda_mu_length_set,
    scan_gluings,
    self_glue_region_bounds,
    tasty_proportion,
)

__version__ = "0.1.0"

__all__ = [
    "BettiData",
    "Classification",
    "GluingSpec",
    "KERNEL",
    "Med4Result",
    "MedBettiRecord",
    "NumericalSemigroup",
    "PeriodicityCertificate",
    "ProportionResult",
    "RegionBounds",
    "ScanResult",
    "SemigroupDelta",
    "SweepStats",
    "ThreegenReport",
    "__version__",
    "betti_elements",
    "betti_of_gluing",
    "certify_periodicity",
    "classify_gluing",
    "classify_med4",
    "classify_threegen",
    "delta_of",
    "delta_of_semigroup",
    "factorization_graph_components",
    "factorizations",
    "from_generators",
    "glue",
    "glued_length_set",
    "lambda_mu_length_set",
    "ld_large_n",
    "ld_of_element",
    "ld_of_semigroup",
    "ld_profile",
    "length_set",
    "length_set_table",
    "med4_grid",
    "med_check",
    "med_composite_construct",
    "med_prime_bland",
    "med_small_betti_check",
    "minimal_presentation",
    "partition_lengths",
    "scan_gluings",
    "self_glue_region_bounds",
    "supersymmetric",
    "sweep",
    "tasty_proportion",
]
