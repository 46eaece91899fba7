import math
import os
import subprocess

import pytest

import fringekit as fk


def test_fringe_values():
    assert fk.mzi_intensity(0.0) == 1.0
    assert fk.mzi_intensity(0.3, 2.0, "A") + fk.mzi_intensity(0.3, 2.0, "B") == pytest.approx(2.0, abs=1e-12)
    assert fk.nslit_intensity(0.0, 7) == 49.0
    assert fk.fpi_transmission(math.pi / 2, 0.999) == pytest.approx(1.00100024949925e-6, rel=1e-10)
    assert fk.superresolution_fringe(math.pi / 20, 10) == pytest.approx(0.5)
    log_value, normalized = fk.kth_order_correlation(0.0, 1.0, 100)
    assert normalized == 1.0 and math.isfinite(log_value)


def test_widths():
    ratio = fk.fwhm("mzi", order=100)["width"] / fk.fwhm("mzi")["width"]
    assert ratio == pytest.approx(4 * math.acos(2 ** (-1 / 200)) / math.pi, abs=1e-8)
    assert fk.nslit_fwhm(2) == pytest.approx(math.pi / 2, abs=1e-9)
    width, low = fk.fpi_fwhm(0.999)
    assert width == pytest.approx(2.00100133483524e-3, rel=1e-12) and not low
    curve = fk.resolution_curve("gaussian", values=[4, 16])
    assert curve["parameters"] == [1, 4, 16]
    assert curve["ratios"][2] == pytest.approx(0.25, abs=1e-9)


def test_equivalence_and_spectrometer():
    eq = fk.equivalent_reflectivity(1000)
    assert 0.998 <= eq["r"] <= 0.9995
    assert eq["relative_mismatch"] <= 1e-9
    f = fk.frequency_from_detuning(fk.detuning(0.999, 1.0), 1.0)
    assert f == pytest.approx(0.999, rel=1e-12)
    report = fk.resolve_scene([1.0, 0.9995], n_slits=1000, order=100)
    assert report["pairs"][0]["resolvable"]
    assert not fk.resolve_scene([1.0, 0.9995], n_slits=1000, order=1)["pairs"][0]["resolvable"]


def test_figure_bundle():
    bundle = fk.figure(2, samples=101)
    assert len(bundle["series"]) == 9
    assert bundle["scalars"]["fwhm_K1"] == pytest.approx(math.pi, abs=1e-9)
    assert fk.figure_csv(4, samples=101) == fk.figure_csv(4, samples=101)


def test_errors():
    with pytest.raises(ValueError):
        fk.fpi_transmission(0.0, 1.5)
    with pytest.raises(ValueError):
        fk.figure(9)
    with pytest.raises(fk.FringeError):
        fk.fwhm("gaussian", window=(-0.5, 0.5))
    with pytest.raises(fk.SweepError):
        fk.resolution_curve("gaussian", values=[2], window=(-0.5, 0.5))


CLI = os.environ.get("FRINGEKIT_CLI")


@pytest.mark.skipif(not CLI, reason="FRINGEKIT_CLI not set")
def test_cli_exit_codes(tmp_path):
    out = tmp_path / "eq.csv"
    ok = subprocess.run([CLI, "equivalence", "--n-slits", "1000", "--out", str(out)])
    assert ok.returncode == 0 and "# scalar.r: 0.998609410687" in out.read_text()
    assert subprocess.run([CLI, "figure", "9"], capture_output=True).returncode == 1
    assert subprocess.run([CLI, "fwhm", "--model", "gaussian", "--window", "-0.5", "0.5"],
                          capture_output=True).returncode == 2
    assert subprocess.run([CLI, "equivalence", "--out", "/nonexistent/dir/x.csv"],
                          capture_output=True).returncode == 3
