"""Catalog of edge-primitive coset graphs and the verification pipeline."""

from .manifest import CatalogEntry, ManifestError, find_entry, load_catalog, parse_manifest, read_manifest
from .report import format_report, format_summary, from_machine, to_machine
from .verify import (BLOCKED, CHECKS, FAIL, PASS, SKIPPED, CheckResult, OutOfScope,
                     VerificationReport, verify_all, verify_entry, verify_family_psl2,
                     verify_triple)

__all__ = [
    "BLOCKED", "CHECKS", "FAIL", "PASS", "SKIPPED", "CatalogEntry", "CheckResult",
    "ManifestError", "OutOfScope", "VerificationReport", "find_entry", "format_report",
    "format_summary", "from_machine", "load_catalog", "parse_manifest", "read_manifest",
    "to_machine", "verify_all", "verify_entry", "verify_family_psl2", "verify_triple",
]
