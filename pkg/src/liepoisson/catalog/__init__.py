"""The bundled table of Lie algebras with their expected invariants, and the
verifier that replays it."""

from .entry import (
    CatalogEntry,
    CatalogError,
    catalog_bundled,
    catalog_load,
    check_manifest,
    find_entries,
    validate,
    write_manifest,
)
from .verify import (
    NO_CP_IDS,
    QUADRATIC_IDS,
    QUASI_QUADRATIC_IDS,
    ClaimResult,
    Summary,
    VerificationReport,
    cross_table_checks,
    entry_seed,
    verify_all,
    verify_entry,
)

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "ClaimResult",
    "NO_CP_IDS",
    "QUADRATIC_IDS",
    "QUASI_QUADRATIC_IDS",
    "Summary",
    "VerificationReport",
    "catalog_bundled",
    "catalog_load",
    "check_manifest",
    "cross_table_checks",
    "entry_seed",
    "find_entries",
    "validate",
    "verify_all",
    "verify_entry",
    "write_manifest",
]
