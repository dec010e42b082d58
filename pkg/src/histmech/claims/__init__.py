"""Registry of historical claims and their evaluation."""

from .config import CONFIG_ENV, RunConfig, load_config, parse_config
from .records import Check, ClaimRecord, Computed, HistoricalAssertion, Verdict
from .registry import CLAIMS, REGISTRY, ClaimSpec, Registry, Series, list_claims, run_claim

__all__ = [
    "CONFIG_ENV",
    "RunConfig",
    "load_config",
    "parse_config",
    "Check",
    "ClaimRecord",
    "Computed",
    "HistoricalAssertion",
    "Verdict",
    "CLAIMS",
    "REGISTRY",
    "ClaimSpec",
    "Registry",
    "Series",
    "list_claims",
    "run_claim",
]
