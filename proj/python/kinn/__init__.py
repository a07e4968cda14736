"""Exact counting, enumeration and verification of polygon dissections.

All counts are exact Python ints, averages are fractions.Fraction, and
dissections cross the boundary as canonical text, one object per string.
"""

import json as _json

from ._core import (
    average_cycles_bruteforce,
    average_cycles_closed,
    binomial,
    canonicalize,
    catalan,
    convolution_lhs,
    convolution_rhs,
    count_k_cycles,
    count_k_in_n,
    diagonal_decomposition,
    f_closed,
    identities,
    k_in_n_dissections,
    lemma_pq_sum,
    render_svg,
    triangulations,
    verify_json,
    vertex_decomposition,
    weighted_catalan_sum,
)

__version__ = "0.1.0"

__all__ = [
    "average_cycles_bruteforce",
    "average_cycles_closed",
    "binomial",
    "canonicalize",
    "catalan",
    "convolution_lhs",
    "convolution_rhs",
    "count_k_cycles",
    "count_k_in_n",
    "diagonal_decomposition",
    "f_closed",
    "identities",
    "k_in_n_dissections",
    "lemma_pq_sum",
    "render_svg",
    "triangulations",
    "verify",
    "verify_json",
    "vertex_decomposition",
    "weighted_catalan_sum",
]


def verify(identity, n_max=None, k_max=None, q_max=None):
    """Check an identity on its parameter grid and return the report as a dict."""
    return _json.loads(verify_json(identity, n_max=n_max, k_max=k_max, q_max=q_max))
