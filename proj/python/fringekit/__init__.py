"""Interferometric fringe models, intensity products and resolution metrics."""

from ._core import (
    FringeError,
    SweepError,
    detuning,
    equivalent_reflectivity,
    figure,
    figure_csv,
    fpi_fwhm,
    fpi_transmission,
    frequency_from_detuning,
    fwhm,
    kth_order_correlation,
    line_peak_phase,
    mzi_intensity,
    nslit_fwhm,
    nslit_intensity,
    resolution_curve,
    resolve_scene,
    single_line_fwhm,
    superresolution_fringe,
)

__all__ = [name for name in dir() if not name.startswith("_")]
