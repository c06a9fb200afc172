"""Diagonal hook lengths of symmetric partitions from p-core and p-quotient.

Partitions are plain lists of positive integers in weakly decreasing order.
"""

from ._core import (
    DiaghookError,
    conjugate,
    core_and_quotient,
    d_of,
    delta_empty_core,
    delta_general,
    delta_oracle,
    diagonal_hooks,
    from_core_and_quotient,
    is_p_core,
    is_symmetric,
    is_symmetric_p_core,
    p_core,
    p_quotient,
    partitions,
    render_ascii,
    symmetric_from_delta,
)

__all__ = [
    "DiaghookError",
    "conjugate",
    "core_and_quotient",
    "d_of",
    "delta_empty_core",
    "delta_general",
    "delta_oracle",
    "diagonal_hooks",
    "from_core_and_quotient",
    "is_p_core",
    "is_symmetric",
    "is_symmetric_p_core",
    "p_core",
    "p_quotient",
    "partitions",
    "render_ascii",
    "symmetric_from_delta",
]
