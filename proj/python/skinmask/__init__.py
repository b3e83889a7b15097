"""Pixel-level skin detection with combined RGB/HSV/YCbCr thresholds."""

from ._core import (
    ClassificationStats,
    ConfusionMatrix,
    Hsv,
    NormalizedRgb,
    Rgba,
    SkinDecision,
    SkinmaskError,
    ThresholdConfig,
    YCbCr,
    YCbCrMode,
    accuracy,
    binarize_ground_truth,
    classify_image,
    classify_pixel,
    confusion,
    hsv_rule,
    load_image,
    normalize_rgb,
    pack_argb,
    precision,
    rgb_rule,
    rgb_to_hsv,
    rgb_to_ycbcr,
    run_cli,
    unpack_argb,
    write_mask,
    ycbcr_rule,
)

__all__ = [name for name in dir() if not name.startswith("_")]
