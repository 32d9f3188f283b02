"""CSV and SVG writers for scan tables."""

import csv
import io
import xml.etree.ElementTree as ET

WIDTH, HEIGHT = 720, 460
MARGIN = {"left": 80, "right": 200, "top": 30, "bottom": 60}
COLORS = ("#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")
DASHES = ("", "6,4")


def format_value(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def csv_text(table):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def emit_csv(table, path):
    """Write ``table`` as CSV (header plus one line per row, 12 significant digits)."""
    try:
        with open(path, "w", newline="") as fh:
            fh.write(csv_text(table))
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc.strerror or exc}") from exc


def _ticks(lo, hi, n=5):
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _curves(table):
    """``[(label, xs, ys)]`` with one curve per family value and series column."""
    xi = table.columns.index(table.sweep)
    fi = table.columns.index(table.family) if table.family else None
    families = []
    for row in table.rows:
        key = row[fi] if fi is not None else None
        if key not in families:
            families.append(key)
    curves = []
    for key in families:
        rows = [row for row in table.rows if fi is None or row[fi] == key]
        for name in table.series:
            si = table.columns.index(name)
            pts = [(row[xi], row[si]) for row in rows if row[si] is not None]
            label = name if key is None else f"{name} ({table.family}={format_value(key)})"
            curves.append((label, [p[0] for p in pts], [p[1] for p in pts]))
    return curves


def svg_text(table, y_label="zeta"):
    curves = _curves(table)
    xs = [x for _, cx, _ in curves for x in cx]
    ys = [y for _, _, cy in curves for y in cy]
    if len(table.rows) < 2 or not xs:
        raise ValueError("an SVG plot needs at least two rows")
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = (y1 - y0) * 0.05 or 1e-3
    y0, y1 = y0 - pad, y1 + pad
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def sx(x):
        return MARGIN["left"] + (x - x0) / ((x1 - x0) or 1) * pw

    def sy(y):
        return MARGIN["top"] + (y1 - y) / (y1 - y0) * ph

    svg = ET.Element(
        "svg",
        {"xmlns": "http://www.w3.org/2000/svg", "width": str(WIDTH), "height": str(HEIGHT),
         "viewBox": f"0 0 {WIDTH} {HEIGHT}", "font-family": "sans-serif", "font-size": "12"},
    )
    ET.SubElement(svg, "rect", {"x": str(MARGIN["left"]), "y": str(MARGIN["top"]), "width": str(pw),
                                "height": str(ph), "fill": "none", "stroke": "#444444"})
    for t in _ticks(x0, x1):
        ET.SubElement(svg, "line", {"x1": f"{sx(t):.2f}", "x2": f"{sx(t):.2f}", "y1": str(MARGIN["top"] + ph),
                                    "y2": str(MARGIN["top"] + ph + 5), "stroke": "#444444"})
        label = ET.SubElement(svg, "text", {"x": f"{sx(t):.2f}", "y": str(MARGIN["top"] + ph + 18), "text-anchor": "middle"})
        label.text = f"{t:.3g}"
    for t in _ticks(y0, y1):
        ET.SubElement(svg, "line", {"x1": str(MARGIN["left"] - 5), "x2": str(MARGIN["left"]), "y1": f"{sy(t):.2f}",
                                    "y2": f"{sy(t):.2f}", "stroke": "#444444"})
        label = ET.SubElement(svg, "text", {"x": str(MARGIN["left"] - 8), "y": f"{sy(t) + 4:.2f}", "text-anchor": "end"})
        label.text = f"{t:.4f}"
    xlab = ET.SubElement(svg, "text", {"x": f"{MARGIN['left'] + pw / 2:.1f}", "y": str(HEIGHT - 15), "text-anchor": "middle"})
    xlab.text = table.sweep
    ylab = ET.SubElement(svg, "text", {"x": "18", "y": f"{MARGIN['top'] + ph / 2:.1f}", "text-anchor": "middle",
                                       "transform": f"rotate(-90 18 {MARGIN['top'] + ph / 2:.1f})"})
    ylab.text = y_label

    n_series = max(len(table.series), 1)
    legend_x = MARGIN["left"] + pw + 15
    for i, (label, cx, cy) in enumerate(curves):
        color = COLORS[(i // n_series) % len(COLORS)]
        dash = DASHES[(i % n_series) % len(DASHES)]
        attrs = {"points": " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(cx, cy)),
                 "fill": "none", "stroke": color, "stroke-width": "1.5"}
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(svg, "polyline", attrs)
        ly = MARGIN["top"] + 10 + 18 * i
        line_attrs = {"x1": str(legend_x), "x2": str(legend_x + 25), "y1": str(ly), "y2": str(ly),
                      "stroke": color, "stroke-width": "1.5"}
        if dash:
            line_attrs["stroke-dasharray"] = dash
        ET.SubElement(svg, "line", line_attrs)
        text = ET.SubElement(svg, "text", {"x": str(legend_x + 30), "y": str(ly + 4)})
        text.text = label
    return ET.tostring(svg, encoding="unicode") + "\n"


def emit_svg(table, path, y_label="zeta"):
    """Write a line plot of ``table.series`` against ``table.sweep``, one polyline per curve."""
    text = svg_text(table, y_label)
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc.strerror or exc}") from exc
