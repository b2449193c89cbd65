"""Static SVG plots of LCC' against the removed fraction f."""
from xml.sax.saxutils import escape

from .attack import ALL_STRATEGIES
from .errors import InvalidArgumentError

# one colour per strategy, in ALL_STRATEGIES order (IB IC ID IM RB RC RD RM)
PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"]

WIDTH, HEIGHT = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 60, 110, 30, 50
TICKS = [i / 5 for i in range(6)]


def strategy_color(strategy):
    return PALETTE[ALL_STRATEGIES.index(strategy)]


def _x(f):
    return LEFT + f * (WIDTH - LEFT - RIGHT)


def _y(v):
    return HEIGHT - BOTTOM - v * (HEIGHT - TOP - BOTTOM)


def _step_points(trace):
    pts = []
    prev = None
    for f, lcc in trace.curve():
        if prev is not None:
            pts.append((f, prev))
        pts.append((f, lcc))
        prev = lcc
    return " ".join(f"{_x(f):.2f},{_y(v):.2f}" for f, v in pts)


def render_chart(traces, stream, title=None):
    """Write one step polyline per trace, with axes, ticks and a strategy legend."""
    traces = list(traces)
    if not traces:
        raise InvalidArgumentError("render_chart needs at least one trace")
    x0, x1 = _x(0), _x(1)
    y0, y1 = _y(0), _y(1)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<g class="axes" stroke="black" fill="none">'
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}"/>'
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{y1:.2f}"/></g>',
    ]
    ticks = ['<g class="ticks">']
    for t in TICKS:
        ticks.append(f'<line x1="{_x(t):.2f}" y1="{y0:.2f}" x2="{_x(t):.2f}" y2="{y0 + 5:.2f}" stroke="black"/>')
        ticks.append(f'<text x="{_x(t):.2f}" y="{y0 + 18:.2f}" text-anchor="middle">{t:.1f}</text>')
        ticks.append(f'<line x1="{x0 - 5:.2f}" y1="{_y(t):.2f}" x2="{x0:.2f}" y2="{_y(t):.2f}" stroke="black"/>')
        ticks.append(f'<text x="{x0 - 8:.2f}" y="{_y(t) + 4:.2f}" text-anchor="end">{t:.1f}</text>')
    ticks.append("</g>")
    out.extend(ticks)
    out.append(f'<text x="{(x0 + x1) / 2:.2f}" y="{HEIGHT - 10}" text-anchor="middle">f</text>')
    out.append(f'<text x="15" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 15 {(y0 + y1) / 2:.2f})">LCC\'</text>')
    if title:
        out.append(f'<text x="{(x0 + x1) / 2:.2f}" y="18" text-anchor="middle">{escape(title)}</text>')

    out.append('<g class="traces" fill="none" stroke-width="1.5">')
    for tr in traces:
        out.append(f'<polyline stroke="{strategy_color(tr.strategy)}" points="{_step_points(tr)}"/>')
    out.append("</g>")

    present = {tr.strategy for tr in traces}
    legend = ['<g class="legend">']
    for i, s in enumerate(s for s in ALL_STRATEGIES if s in present):
        y = TOP + 10 + 18 * i
        lx = WIDTH - RIGHT + 15
        legend.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 20}" y2="{y}" stroke="{strategy_color(s)}" stroke-width="2"/>')
        legend.append(f'<text x="{lx + 26}" y="{y + 4}">{s.code}</text>')
    legend.append("</g>")
    out.extend(legend)
    out.append("</svg>")
    stream.write("\n".join(out) + "\n")
