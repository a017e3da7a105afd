"""Exon prediction from tracking-differentiator smoothed 3-base periodicity walks."""

from ._core import (
    Error,
    InputFormatError,
    ParameterError,
    UndefinedBackgroundError,
    UndefinedMetricError,
    UsageError,
    dft_power_at_third,
    evaluate,
    f_alpha,
    f_sign,
    fst,
    generate_synthetic,
    integrate_continuous,
    parse_fasta,
    predict,
    ps_n3,
    remove_short_segments,
    td_track,
    walk,
)

__all__ = [
    "Error",
    "InputFormatError",
    "ParameterError",
    "UndefinedBackgroundError",
    "UndefinedMetricError",
    "UsageError",
    "dft_power_at_third",
    "evaluate",
    "f_alpha",
    "f_sign",
    "fst",
    "generate_synthetic",
    "integrate_continuous",
    "parse_fasta",
    "predict",
    "ps_n3",
    "remove_short_segments",
    "td_track",
    "walk",
]
