import re
import xml.etree.ElementTree as ET

import pytest

from trisum import figures
from trisum.configurations import CentralScene
from trisum.figures import FIGURES, Drawing, FigureError, FigureSpec, emit_figure
from trisum.projective import HomLine, HomPoint

SVG = "{http://www.w3.org/2000/svg}"

DEGENERATE_CENTRAL = CentralScene(
    HomPoint(0, 0),
    (HomPoint(3, 2), HomPoint(-3, 1), HomPoint(-3, 3)),
    (HomPoint(-3, -2), HomPoint(3, -1), HomPoint(3, -3)),
).to_json()


def labels(svg):
    root = ET.fromstring(svg)
    return {t.text for t in root.iter(f"{SVG}text")}


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_every_figure_is_valid_svg(name):
    result = emit_figure(FigureSpec(name))
    assert result.ok
    root = ET.fromstring(result.svg)
    assert root.tag == f"{SVG}svg" and root.get("version") == "1.1"
    assert result.svg.startswith('<?xml version="1.0"')


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_figures_are_byte_identical(name):
    assert emit_figure(FigureSpec(name)).svg == emit_figure(FigureSpec(name)).svg


def test_desargues_label_roster():
    got = labels(emit_figure(FigureSpec("fig1_desargues")).svg)
    expected = {"S", "A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3", "S1", "S2", "S3"}
    expected |= {f"P{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3) if i != j}
    assert expected <= got


def test_zero_triangle_figure_shows_reflection():
    svg = emit_figure(FigureSpec("fig5_boxplus_zero")).svg
    got = labels(svg)
    assert {"A1", "A2", "A3", "C1", "C2", "C3", "G", "Z1", "Z2", "Z3"} <= got
    # the zero pseudo-triangle is three directions: drawn as arrows
    assert svg.count('marker-end="url(#arrow)"') >= 3


def test_axis_at_infinity_draws_directions_as_arrows():
    svg = emit_figure(FigureSpec("fig4_axis_infinity")).svg
    assert svg.count('marker-end="url(#arrow)"') == 3
    assert {"L1", "L2", "L3"} <= labels(svg)


def test_coordinates_use_fixed_precision():
    svg = emit_figure(FigureSpec("fig1_desargues")).svg
    nums = re.findall(r'(?:x|y|x1|y1|x2|y2|cx|cy)="(-?[0-9.]+)"', svg)
    assert nums and all(re.fullmatch(r"-?\d+\.\d\d", n) for n in nums if "." in n)


def test_degenerate_scene_gives_warning_figure():
    result = emit_figure(FigureSpec("fig1_desargues", DEGENERATE_CENTRAL))
    assert not result.ok and "C1" in result.warning
    assert "WARNING" in result.svg
    ET.fromstring(result.svg)


def test_custom_scene_changes_figure():
    from trisum.configurations import random_central_scene
    svg = emit_figure(FigureSpec("fig1_desargues", random_central_scene(3).to_json())).svg
    assert svg != emit_figure(FigureSpec("fig1_desargues")).svg


def test_incidences_checked_before_rendering():
    d = Drawing("t")
    d.point("P", HomPoint(1, 1))
    d.require(HomLine(1, 0, 0), ("P",))
    with pytest.raises(FigureError):
        d.render()


def test_unknown_figure():
    with pytest.raises(ValueError):
        FigureSpec("fig9")


def test_element_figures_accept_inputs():
    scene = {"A": {"kind": "geometric", "delta": ["2", "1", "0"]}}
    for name in ("fig5_boxplus_zero", "fig6_degenerate", "fig7_a_boxplus_a"):
        assert emit_figure(FigureSpec(name, scene)).ok
    bad = {"A": {"kind": "pseudo", "delta": ["1", "-1", "0"]}}
    assert not emit_figure(FigureSpec("fig7_a_boxplus_a", bad)).ok


def test_default_scenes_are_valid():
    figures.DEFAULT_CENTRAL.check()
    figures.DEFAULT_AXIS.check()
    figures.DEFAULT_AXIS_INFINITY.check()
