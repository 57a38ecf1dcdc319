"""Deformed sl(2) Lie-Hamilton systems on the plane."""

from ._core import (
    ClassTag,
    ConfigError,
    DeformedSystem,
    DomainError,
    default_casimir,
    limit_scan,
    parse_class_tag,
    run_scenario,
    shc,
    verify,
)

__all__ = [
    "ClassTag",
    "ConfigError",
    "DeformedSystem",
    "DomainError",
    "default_casimir",
    "limit_scan",
    "parse_class_tag",
    "run_scenario",
    "shc",
    "verify",
]
