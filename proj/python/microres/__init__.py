"""Monte Carlo resilience scoring for microgrid risk registers.

Scenario and patch documents are JSON text; ``run`` and ``compare`` return
the decoded report dictionaries.
"""

import json

from ._microres import (
    DocumentError,
    DomainError,
    Error,
    PatchError,
    ValidationError,
    builtin_new_england,
    builtin_patches,
    classify_value,
    expected_pair_risk,
    normalize_scenario,
    pair_risk_variance,
    parse_rating_label,
    percent_reduction,
    rating_to_range,
    residual_risk,
    total_resilience,
    validate_scenario,
)
from . import _microres

__all__ = [
    "DocumentError",
    "DomainError",
    "Error",
    "PatchError",
    "ValidationError",
    "builtin_new_england",
    "builtin_patches",
    "classify_value",
    "compare",
    "expected_pair_risk",
    "normalize_scenario",
    "pair_risk_variance",
    "parse_rating_label",
    "percent_reduction",
    "rating_to_range",
    "residual_risk",
    "run",
    "total_resilience",
    "validate_scenario",
]


def _as_text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def run(scenario, **config):
    """Simulate a scenario (JSON text or dict) and return the report as a dict."""
    return json.loads(_microres.run(_as_text(scenario), **config))


def compare(scenario, patches, **config):
    """Simulate the baseline and each patch with the same config and seed."""
    return json.loads(_microres.compare(_as_text(scenario), [_as_text(p) for p in patches], **config))
