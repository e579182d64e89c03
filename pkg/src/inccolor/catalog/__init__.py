"""Configuration catalogs, discharging audit and the peel-and-repair colorer."""

from .colorer import (CatalogStats, Reduction, ReducibilityVerdict, assert_reducible,
                      color_catalog, peel, repair_extend)
from .configurations import Match, find_configuration, recheck
from .discharge import DischargeReport, apply_discharge
from .profiles import (PROFILES, ConfigPattern, DegreeBound, DischargeProfile, Rule,
                       TheoremProfile, get_profile, load_profile, profile_from_document,
                       profile_to_document)

__all__ = [
    "CatalogStats", "ConfigPattern", "DegreeBound", "DischargeProfile", "DischargeReport",
    "Match", "PROFILES", "Reduction", "ReducibilityVerdict", "Rule", "TheoremProfile",
    "apply_discharge", "assert_reducible", "color_catalog", "find_configuration",
    "get_profile", "load_profile", "peel", "profile_from_document", "profile_to_document",
    "recheck", "repair_extend",
]
