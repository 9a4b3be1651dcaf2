"""Python access to the jtube library and command-line tool."""

import json

from ._jtube import (
    DomainError,
    NumericError,
    UnsupportedAlgebraError,
    ValidationError,
    __version__,
    kernel_gram_min_eigenvalue,
    run,
    tilde_mu_boundary,
    trace_h,
)
from . import _jtube


def classify(family, size, element, tol=1e-9):
    return json.loads(_jtube.classify_json(family, size, list(element), tol))


def support_report(family, size, s, parity_only=False):
    return json.loads(_jtube.support_report_json(family, size, str(s), parity_only))


def run_json(*args):
    """Runs a subcommand and parses its JSON report. Returns (exit_code, report)."""
    code, out, err = run([str(a) for a in args])
    if code == 2:
        raise ValidationError(err.strip())
    return code, json.loads(out)


__all__ = [
    "DomainError",
    "NumericError",
    "UnsupportedAlgebraError",
    "ValidationError",
    "__version__",
    "classify",
    "kernel_gram_min_eigenvalue",
    "run",
    "run_json",
    "support_report",
    "tilde_mu_boundary",
    "trace_h",
]
