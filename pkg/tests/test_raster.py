import numpy as np
import pytest

from chebtwo.chebmap import build_map, extraneous_points
from chebtwo.dynamics import Verdict
from chebtwo.errors import EmptyJulia, NoCrossing
from chebtwo.raster import BasinRaster, Window, colorize, emit_ppm, hausdorff_to_L, ppm_bytes, probe_boundary, render


def _raster(verdicts, iters):
    v = np.array(verdicts, dtype=np.int8)
    return BasinRaster(None, 1, 1, v, np.array(iters, dtype=np.int32))


def test_ppm_two_pixel_example():
    r = _raster([[Verdict.TO_ROOT0, Verdict.UNDECIDED]], [[0, 5]])
    assert ppm_bytes(r) == b"P6\n2 1\n255\n" + bytes([0x1E, 0x3C, 0xC8, 0, 0, 0])


def test_ppm_colour_ramp():
    r = _raster([[Verdict.TO_ROOT1, Verdict.TO_ROOT1, Verdict.TO_ROOT0]], [[30, 600, 60]])
    img = colorize(r)[0]
    assert tuple(img[0]) == (161, 140, 28)  # 70% of (230, 200, 40), rounded half up
    assert tuple(img[1]) == (92, 80, 16)
    assert tuple(img[2]) == (12, 24, 80)


def test_all_undecided_is_black(tmp_path):
    r = _raster(np.full((3, 4), Verdict.UNDECIDED), np.zeros((3, 4)))
    path = tmp_path / "u.ppm"
    emit_ppm(r, path)
    data = path.read_bytes()
    assert data.startswith(b"P6\n4 3\n255\n") and set(data[len(b"P6\n4 3\n255\n"):]) == {0}
    with pytest.raises(FileNotFoundError):
        emit_ppm(r, "")


def test_window_validation_and_parse():
    w = Window.parse("-1:2:-1.5:1.5", "30x20")
    assert (w.width, w.height, w.dx, w.dy) == (30, 20, 0.1, 0.15)
    assert w.row_centres()[0] > w.row_centres()[-1]
    for bounds, size in (("1:0:0:1", "8x8"), ("0:1:0:1", "4x8"), ("0:1:0", "8x8"), ("0:1:0:1", "8"), ("0:1:0:nan", "8x8")):
        with pytest.raises(ValueError):
            Window.parse(bounds, size)


def test_small_render_invariants():
    w = Window(-1, 2, -1.5, 1.5, 8, 8)
    r = render(build_map(3, 1), w)
    assert r.verdicts.shape == (8, 8) and r.iterations.shape == (8, 8)
    assert set(np.unique(r.verdicts)) <= {0, 1, 2}
    assert sum(r.fractions().values()) == pytest.approx(1.0)


def test_left_half_plane_goes_to_zero():
    r = render(build_map(1, 1), Window(-3, -0.01, -2, 2, 40, 40))
    assert np.all(r.verdicts == Verdict.TO_ROOT0)


def test_render_2_2_split():
    w = Window(-1, 2, -1.5, 1.5, 300, 300)
    r = render(build_map(2, 2), w)
    left = w.column_centres() < 0.5
    v = r.verdicts
    # decided pixels are overwhelmingly on their own side of the line
    assert np.mean(v[:, left] == Verdict.TO_ROOT0) > 0.9
    assert np.mean(v[:, ~left] == Verdict.TO_ROOT1) > 0.9
    assert np.array_equal(v[:, ::-1], np.where(v == 2, 2, 1 - v))


def test_pole_column_is_undecided():
    # dyadic window whose column 299 is centred exactly on Re = 1/2
    w = Window(-0.669921875, 1.673828125, -1.171875, 1.171875, 600, 600)
    assert w.column_centres()[299] == 0.5
    r = render(build_map(2, 2), w)
    assert np.all(r.verdicts[:, 299] == Verdict.UNDECIDED)


def test_render_deterministic_and_conjugate_symmetric():
    w = Window(-1, 2, -1.5, 1.5, 64, 48)
    c = build_map(6, 4)
    a, b = render(c, w), render(c, w)
    assert ppm_bytes(a) == ppm_bytes(b)
    assert np.array_equal(a.verdicts, a.verdicts[::-1, :])


def test_6_4_root0_basin_dominates_left_of_pole():
    w = Window(-1, 2, -1.5, 1.5, 200, 200)
    r = render(build_map(6, 4), w)
    left = w.column_centres() < 0.6
    assert np.mean(r.verdicts[:, left] == Verdict.TO_ROOT0) > 0.8


def test_probe_boundary_symmetric():
    est = probe_boundary(build_map(3, 3), [0.7], 1e-10)
    assert abs(est.points[0].real - 0.5) <= 1e-10
    assert '"max_deviation_from_L"' in est.to_json()


def test_probe_boundary_6_4_real_axis():
    e1, e2 = extraneous_points(6, 4)
    est = probe_boundary(build_map(6, 4), [0.0], 1e-10)
    assert e1 <= est.points[0].real <= e2


def test_probe_boundary_errors():
    with pytest.raises(NoCrossing):
        probe_boundary(build_map(2, 2), [0.0], 1e-6, re_left=-2.0, re_right=-1.0)
    with pytest.raises(ValueError):
        probe_boundary(build_map(2, 2), [0.0], 0.0)


def test_hausdorff_small_cases():
    w = Window(0.0, 1.0, -1, 1, 9, 8)  # column 4 centred on 0.5
    v = np.zeros((8, 9), dtype=np.int8)
    v[:, 4] = Verdict.UNDECIDED
    v[:, 5:] = Verdict.TO_ROOT1
    r = BasinRaster(w, 2, 2, v, np.zeros_like(v, dtype=np.int32))
    assert hausdorff_to_L(r) <= w.dx / 2
    with pytest.raises(EmptyJulia):
        hausdorff_to_L(BasinRaster(w, 2, 2, np.zeros((8, 9), np.int8), np.zeros((8, 9), np.int32)))
    with pytest.raises(ValueError):
        hausdorff_to_L(BasinRaster(w, 2, 3, v, np.zeros_like(v, dtype=np.int32)))


def test_farthest_julia_pixel_near_real_axis():
    w = Window(-0.5, 1.5, -1, 1, 600, 600)
    r = render(build_map(2, 2), w)
    mask = r.julia_mask()
    dist = np.abs(w.column_centres() - 0.5)[None, :] * mask
    row, _ = np.unravel_index(np.argmax(dist), dist.shape)
    assert abs(w.row_centres()[row]) < 0.2
