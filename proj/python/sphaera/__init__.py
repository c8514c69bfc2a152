from ._core import (
    ClosureError,
    InvariantError,
    ParameterError,
    Pentagon,
    Tiling,
    count_table3,
    enumerate_vertices,
    generate,
    is_isomorphic,
    make_pentagon,
    parse_angle,
    table3_search_counts,
    to_obj,
    verify,
)

__all__ = [
    "ClosureError",
    "InvariantError",
    "ParameterError",
    "Pentagon",
    "Tiling",
    "count_table3",
    "enumerate_vertices",
    "generate",
    "is_isomorphic",
    "make_pentagon",
    "parse_angle",
    "table3_search_counts",
    "to_obj",
    "verify",
]
