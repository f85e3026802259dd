"""Static SVG line charts without plotting dependencies."""

from pathlib import Path

_W, _H = 640, 420
_ML, _MR, _MT, _MB = 72, 20, 36, 52


def _ticks(lo, hi, count=5):
    if hi == lo:
        pad = 1.0 if lo == 0 else abs(lo) * 0.1
        lo, hi = lo - pad, hi + pad
    step = (hi - lo) / (count - 1)
    return lo, hi, [lo + i * step for i in range(count)]


def render_line_chart(xs, ys, title="", xlabel="", ylabel=""):
    """Render one polyline with axes and tick labels; returns the SVG text."""
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(xs) != len(ys) or not xs:
        raise ValueError("xs and ys must be equal-length and nonempty")
    x0, x1, xticks = _ticks(min(xs), max(xs))
    y0, y1, yticks = _ticks(min(ys), max(ys))
    pw = _W - _ML - _MR
    ph = _H - _MT - _MB

    def sx(x):
        return _ML + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return _MT + ph - (y - y0) / (y1 - y0) * ph

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (_W, _H, _W, _H),
        '<rect width="%d" height="%d" fill="white"/>' % (_W, _H),
    ]
    if title:
        parts.append(
            '<text x="%d" y="22" text-anchor="middle" font-family="sans-serif" '
            'font-size="15">%s</text>' % (_W // 2, title)
        )
    for tx in xticks:
        px = sx(tx)
        parts.append(
            '<line x1="%.2f" y1="%d" x2="%.2f" y2="%d" stroke="#ddd"/>'
            % (px, _MT, px, _MT + ph)
        )
        parts.append(
            '<text x="%.2f" y="%d" text-anchor="middle" font-family="sans-serif" '
            'font-size="11">%g</text>' % (px, _MT + ph + 18, tx)
        )
    for ty in yticks:
        py = sy(ty)
        parts.append(
            '<line x1="%d" y1="%.2f" x2="%d" y2="%.2f" stroke="#ddd"/>'
            % (_ML, py, _ML + pw, py)
        )
        parts.append(
            '<text x="%d" y="%.2f" text-anchor="end" font-family="sans-serif" '
            'font-size="11">%.4g</text>' % (_ML - 6, py + 4, ty)
        )
    parts.append(
        '<rect x="%d" y="%d" width="%d" height="%d" fill="none" stroke="#333"/>'
        % (_ML, _MT, pw, ph)
    )
    if xlabel:
        parts.append(
            '<text x="%d" y="%d" text-anchor="middle" font-family="sans-serif" '
            'font-size="13">%s</text>' % (_ML + pw // 2, _H - 12, xlabel)
        )
    if ylabel:
        parts.append(
            '<text x="16" y="%d" text-anchor="middle" font-family="sans-serif" '
            'font-size="13" transform="rotate(-90 16 %d)">%s</text>'
            % (_MT + ph // 2, _MT + ph // 2, ylabel)
        )
    pts = " ".join("%.2f,%.2f" % (sx(x), sy(y)) for x, y in zip(xs, ys))
    parts.append(
        '<polyline points="%s" fill="none" stroke="#1f6fb2" stroke-width="1.8"/>' % pts
    )
    for x, y in zip(xs, ys):
        parts.append(
            '<circle cx="%.2f" cy="%.2f" r="3" fill="#1f6fb2"/>' % (sx(x), sy(y))
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def save_line_chart(path, xs, ys, title="", xlabel="", ylabel=""):
    """Write render_line_chart output to path."""
    Path(path).write_text(render_line_chart(xs, ys, title, xlabel, ylabel))
