"""Bounded verification of the structure-map laws against a model."""
from .adapter import FAMILIES, FrelAdapter, ModelAdapter, Mutated, get_adapter
from .catalog import CATALOG, Equation, catalog, select
from .engine import CheckConfig, CheckReport, CheckResult, check, check_all, instances, mutation_report

__all__ = [
    "FAMILIES", "FrelAdapter", "ModelAdapter", "Mutated", "get_adapter",
    "CATALOG", "Equation", "catalog", "select",
    "CheckConfig", "CheckReport", "CheckResult", "check", "check_all", "instances",
    "mutation_report",
]
