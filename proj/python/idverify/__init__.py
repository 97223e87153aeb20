"""Python access to the identity verifier."""

import json

from ._idverify import (
    DomainError,
    NotFound,
    PreconditionError,
    closed_form,
    const_value,
    dilog,
    engine_version,
    eta,
    integrate,
    list_identities,
    sum_alternating,
    trigamma,
    verify,
    verify_all_json,
    zeta,
)


def verify_all(filter="", profile="full", jobs=1, seed=20240601):
    """Run every identity matching `filter` and return the report as a dict."""
    return json.loads(verify_all_json(filter, profile, jobs, seed))


__all__ = [
    "DomainError",
    "NotFound",
    "PreconditionError",
    "closed_form",
    "const_value",
    "dilog",
    "engine_version",
    "eta",
    "integrate",
    "list_identities",
    "sum_alternating",
    "trigamma",
    "verify",
    "verify_all",
    "verify_all_json",
    "zeta",
]
