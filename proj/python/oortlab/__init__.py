"""Python access to the oortlab permutation-group engine."""

import json

from ._oortlab import (
    CapExceeded,
    Group,
    OortlabError,
    ParseError,
    PreconditionFailed,
    build,
    canonical_spec,
)
from . import _oortlab

__all__ = [
    "CapExceeded",
    "Group",
    "OortlabError",
    "ParseError",
    "PreconditionFailed",
    "audit",
    "build",
    "canonical_spec",
    "check",
    "construct",
    "is_o_group",
]


def construct(spec):
    """Summary of the group named by `spec` (order, degree, predicates)."""
    text, _ = _oortlab.construct_json(spec)
    return json.loads(text)


def check(spec, p, route="both"):
    """Verdict JSON as a dict; route is "def", "crit" or "both"."""
    text, _ = _oortlab.check_json(spec, p, route)
    return json.loads(text)


def audit(spec, p):
    """Structure report and claim audit as a dict."""
    text, _ = _oortlab.audit_json(spec, p)
    return json.loads(text)


def is_o_group(group, p, route="crit"):
    """Verdict for a built Group by one route ("def" or "crit")."""
    return json.loads(_oortlab.verdict_json(group, p, route))["is_o_group"]
