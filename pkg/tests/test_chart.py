import io
import xml.etree.ElementTree as ET

import pytest

import oracles
from netvuln import InvalidArgumentError
from netvuln.attack import ALL_STRATEGIES, run_attack
from netvuln.chart import PALETTE, render_chart, strategy_color
from netvuln.graph import from_edges

NS = {"svg": "http://www.w3.org/2000/svg"}
G = from_edges(oracles.path(9)[1])


def render(traces, **kw):
    buf = io.StringIO()
    render_chart(traces, buf, **kw)
    return ET.fromstring(buf.getvalue())


def test_single_trace():
    root = render([run_attack(G, "RB")])
    assert len(root.findall(".//svg:polyline", NS)) == 1
    legend = root.find(".//svg:g[@class='legend']", NS)
    assert [t.text for t in legend.findall("svg:text", NS)] == ["RB"]


def test_eight_traces_legend():
    traces = [run_attack(G, s) for s in reversed(ALL_STRATEGIES)]
    root = render(traces, title="P9 <demo>")
    assert len(root.findall(".//svg:polyline", NS)) == 8
    legend = root.find(".//svg:g[@class='legend']", NS)
    assert [t.text for t in legend.findall("svg:text", NS)] == [s.code for s in ALL_STRATEGIES]
    colors = [ln.get("stroke") for ln in legend.findall("svg:line", NS)]
    assert colors == PALETTE


def test_tick_labels():
    root = render([run_attack(G, "ID")])
    ticks = root.find(".//svg:g[@class='ticks']", NS)
    labels = [t.text for t in ticks.findall("svg:text", NS)]
    expected = ["0.0", "0.2", "0.4", "0.6", "0.8", "1.0"]
    assert labels[0::2] == expected and labels[1::2] == expected


def test_colors_follow_strategy():
    for s, c in zip(ALL_STRATEGIES, PALETTE):
        assert strategy_color(s) == c
    root = render([run_attack(G, "RM"), run_attack(G, "IB")])
    strokes = [p.get("stroke") for p in root.findall(".//svg:polyline", NS)]
    assert strokes == [PALETTE[7], PALETTE[0]]


def test_step_shape():
    tr = run_attack(G, "RB")
    root = render([tr])
    pts = root.find(".//svg:polyline", NS).get("points").split()
    # every removal adds a horizontal and a vertical segment
    assert len(pts) == 2 * len(tr.rows) - 1


def test_needs_a_trace():
    with pytest.raises(InvalidArgumentError):
        render_chart([], io.StringIO())
