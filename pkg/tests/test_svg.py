import pytest

from stressmatroid.errors import DegenerateEdge, LengthMismatch
from stressmatroid.framework import make_framework
from stressmatroid.stress_kernel import stress_basis
from stressmatroid.svg import emit_svg


def test_plain_render(k4):
    svg = emit_svg(k4)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")
    assert svg.count("<line ") == 6
    assert svg.count("<circle ") == 4
    assert svg.count("<text ") == 4


def test_stress_render_colors(k4):
    s = stress_basis(k4).vectors[0]
    if s[0] < 0:
        s = tuple(-x for x in s)
    svg = emit_svg(k4, s)
    assert svg.count('stroke="#c0392b"') == 3  # triangle under tension
    assert svg.count('stroke="#2471a3"') == 3  # spokes opposed
    zero = emit_svg(k4, [0] * 6)
    assert zero.count("stroke-dasharray") == 6


def test_render_is_deterministic(k4):
    s = stress_basis(k4).vectors[0]
    assert emit_svg(k4, s) == emit_svg(k4, s)


def test_render_errors(k4):
    with pytest.raises(LengthMismatch):
        emit_svg(k4, [1, 2, 3])
    collapsed = make_framework([("a", (0, 0)), ("b", (0, 0))], [("a", "b")])
    with pytest.raises(DegenerateEdge):
        emit_svg(collapsed)
