from app.barnatan.bn import (
    BNTable,
    StableIsoReport,
    bn_homology,
    column_homology,
    default_window,
    filtered_complex,
    filtered_homology,
    stable_iso_check,
    stable_threshold,
    u_action,
    window_columns,
)
from app.barnatan.lee import (
    LeeGenerator,
    OrientationClass,
    all_lee_generators,
    harmonic_dims,
    lee_class_rank,
    lee_generators,
    orientation_classes,
    theorem31_dims,
)

__all__ = [
    "BNTable",
    "LeeGenerator",
    "OrientationClass",
    "StableIsoReport",
    "all_lee_generators",
    "bn_homology",
    "column_homology",
    "default_window",
    "filtered_complex",
    "filtered_homology",
    "harmonic_dims",
    "lee_class_rank",
    "lee_generators",
    "orientation_classes",
    "stable_iso_check",
    "stable_threshold",
    "theorem31_dims",
    "u_action",
    "window_columns",
]
