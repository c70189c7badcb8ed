"""Identity registry, admissible-point samplers, residual evaluation."""

from .core import IdentityCase, IdentityReport, Registry, run, run_case
from .manifest import IN_SCOPE_ANCHORS
from .registry import register_all

__all__ = [
    "IN_SCOPE_ANCHORS",
    "IdentityCase",
    "IdentityReport",
    "Registry",
    "register_all",
    "run",
    "run_case",
]
