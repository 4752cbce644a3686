"""Greedy coprime permutations of the naturals.

For a seed a >= 2, f_a is the permutation with f(1) = 1, f(2) = a, and each
later term the smallest unused value coprime to its predecessor.  This
package generates the sequences, extracts their structure (turning points,
records, cycles), classifies each seed into the two observed equivalence
classes, and measures record density against the primorial numbers.
"""

from .classify import (
    C3,
    IDENTITY,
    BudgetExhaustedError,
    ClassLabel,
    ScanRow,
    classify,
    eventually_identity_by_primorial,
    eventually_identity_by_record,
    exceptional_seed_density,
    scan_identity_seeds,
)
from .cycles import (
    Cycle,
    CycleIndexMap,
    IncompleteCycleError,
    UnknownCycleValueError,
    cycle_index,
    decompose,
    twin_cycle_gaps,
)
from .primorial import (
    DensityLedger,
    DerivativeCheck,
    KappaBounds,
    PrimorialRecordReport,
    PrimorialTable,
    TranslationReport,
    build_density_ledger,
    derivative_bound_check,
    kappa_bounds,
    kappa_coarse_bounds,
    kappa_empirical,
    nth_prime,
    prime_ratio_series,
    primes_within_records_series,
    primorial,
    s_count,
    verify_primorial_records,
    verify_translation,
    w_count,
)
from .records import (
    FIRST_ETP,
    FIRST_RECORD,
    InsufficientRecordsError,
    Record,
    RecordStream,
    TurningPoint,
    find_turning_points,
    load_record_cache,
    next_etp,
    next_record,
    prime_multiple_records,
    reconstruct_f3,
    record_stream_upto,
    record_values,
    records_from_values,
    save_record_cache,
    twin_records,
)
from .sequence import (
    LimitExceededError,
    Params,
    SequenceBuffer,
    generate_prefix,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhaustedError",
    "C3",
    "ClassLabel",
    "Cycle",
    "CycleIndexMap",
    "DensityLedger",
    "DerivativeCheck",
    "FIRST_ETP",
    "FIRST_RECORD",
    "IDENTITY",
    "IncompleteCycleError",
    "InsufficientRecordsError",
    "KappaBounds",
    "LimitExceededError",
    "Params",
    "PrimorialRecordReport",
    "PrimorialTable",
    "Record",
    "RecordStream",
    "ScanRow",
    "SequenceBuffer",
    "TranslationReport",
    "TurningPoint",
    "UnknownCycleValueError",
    "build_density_ledger",
    "classify",
    "cycle_index",
    "decompose",
    "derivative_bound_check",
    "eventually_identity_by_primorial",
    "eventually_identity_by_record",
    "exceptional_seed_density",
    "find_turning_points",
    "generate_prefix",
    "kappa_bounds",
    "kappa_coarse_bounds",
    "kappa_empirical",
    "load_record_cache",
    "next_etp",
    "next_record",
    "nth_prime",
    "prime_multiple_records",
    "prime_ratio_series",
    "primes_within_records_series",
    "primorial",
    "reconstruct_f3",
    "record_stream_upto",
    "record_values",
    "records_from_values",
    "s_count",
    "save_record_cache",
    "scan_identity_seeds",
    "twin_cycle_gaps",
    "twin_records",
    "verify_primorial_records",
    "verify_translation",
    "w_count",
]
