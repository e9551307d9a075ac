"""Exact vanishing polynomials for unit-circle images of Laurent polynomials.

The heavy lifting happens in the compiled extension ``circim._core``; this
package re-exports its functions and adds small JSON conveniences.
"""

import json as _json

from ._core import (
    CircimError,
    InputError,
    bound_json,
    classify_json,
    compute_h_json,
    compute_hc_json,
    construct_json,
    intersection_bound,
    sample_curve,
    verify_extra_point_json,
)

__all__ = [
    "CircimError",
    "InputError",
    "bound",
    "bound_json",
    "classify",
    "classify_json",
    "compute_h",
    "compute_h_json",
    "compute_hc_json",
    "construct_json",
    "intersection_bound",
    "sample_curve",
    "verify_extra_point_json",
]

__version__ = "0.1.0"


def compute_h(p):
    """Vanishing polynomial of the circle image, as a dict.

    ``p`` is a dict (or JSON string) in the Laurent polynomial format:
    ``{"terms": [{"k": -1, "re": "1", "im": "0"}, ...]}``.
    """
    return _json.loads(compute_h_json(_dump(p)))


def classify(p, angle_tol=1e-9):
    """Gap-set classification report, as a dict."""
    return _json.loads(classify_json(_dump(p), angle_tol))


def bound(p, q, with_count=True):
    """Intersection bound report for two polynomials, as a dict."""
    return _json.loads(bound_json(_dump(p), _dump(q), with_count))


def _dump(p):
    return p if isinstance(p, str) else _json.dumps(p)
