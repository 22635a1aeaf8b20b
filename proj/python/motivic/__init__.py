from ._motivic import (
    Expr,
    MotivicClass,
    blowup_p3_points,
    birational_difference,
    count,
    l_equivalent,
    normalize,
    parse,
    rationality_witness,
    stable_birational_class,
    to_dsl,
)

__all__ = [
    "Expr",
    "MotivicClass",
    "blowup_p3_points",
    "birational_difference",
    "count",
    "l_equivalent",
    "normalize",
    "parse",
    "rationality_witness",
    "stable_birational_class",
    "to_dsl",
]
