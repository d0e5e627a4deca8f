"""Text, JSON and LaTeX renderings of an InvariantReport.

Bigraded tables are drawn with j rows descending and i columns ascending.
"""

import json
from typing import Callable, Dict, List, Optional, Tuple

from app.exceptions import TheoryConfigError
from app.service.models import InvariantReport
from app.tables import DimTable

FORMATS = ("table", "json", "latex")


def _axes(table: DimTable) -> Tuple[List[int], List[int]]:
    i_min, i_max, j_min, j_max = table.bounds()
    parity = {j % 2 for _, j in table.entries} or {0}
    step = 2 if len(parity) == 1 else 1
    return list(range(i_min, i_max + 1)), list(range(j_max, j_min - 1, -step))


def _stable_row(report: InvariantReport, name: str) -> Optional[Tuple[str, Dict[int, int]]]:
    if name != "bn" or "stable_threshold" not in report.details:
        return None
    return f"<={report.details['stable_threshold']}", report.degrees.get("stable_column", {})


def _grid(table: DimTable, stable: Optional[Tuple[str, Dict[int, int]]] = None) -> List[List[str]]:
    i_values, j_values = _axes(table)
    if stable is not None:
        i_values = sorted(set(i_values) | set(stable[1]))
    rows = [["j\\i"] + [str(i) for i in i_values]]
    for j in j_values:
        rows.append([str(j)] + [str(table[(i, j)]) if table[(i, j)] else "." for i in i_values])
    if stable is not None:
        label, column = stable
        rows.append([label] + [str(column.get(i, 0)) if column.get(i) else "." for i in i_values])
    return rows


def _degree_line(dims: Dict[int, int]) -> str:
    return "  ".join(f"{i}:{v}" for i, v in sorted(dims.items())) or "0"


def render_table(report: InvariantReport) -> str:
    lines = [f"theory: {report.theory}", f"diagram: {report.diagram}"]
    if report.diagram2:
        lines.append(f"diagram2: {report.diagram2}")
    lines.append(f"components: {report.components}  crossings: {report.crossings}  writhe: {report.writhe}")
    if report.reduced:
        lines.append(f"reduced at arc {report.basepoint}")

    for name, table in report.tables.items():
        lines.append("")
        lines.append(f"[{name}]")
        if table.is_zero:
            lines.append("  (zero)")
            continue
        grid = _grid(table, _stable_row(report, name))
        widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
        for row in grid:
            lines.append("  " + " ".join(cell.rjust(w) for cell, w in zip(row, widths)))

    if report.degrees:
        lines.append("")
        for name, dims in report.degrees.items():
            lines.append(f"{name}: {_degree_line(dims)}")
    if report.polynomials:
        lines.append("")
        for name, text in report.polynomials.items():
            lines.append(f"{name} = {text}")
    plain = {k: v for k, v in report.details.items() if not isinstance(v, dict)}
    if plain:
        lines.append("")
        for name, value in plain.items():
            lines.append(f"{name}: {value}")
    if report.checks:
        lines.append("")
        for check in report.checks:
            mark = "PASS" if check.passed else ("NOTE" if check.informational else "FAIL")
            suffix = f": {check.detail}" if check.detail else ""
            lines.append(f"[{mark}] {check.name}{suffix}")
    if report.timing_ms is not None:
        lines.append("")
        lines.append(f"time: {report.timing_ms} ms")
    return "\n".join(lines) + "\n"


def render_json(report: InvariantReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2) + "\n"


def _latex_escape(text: str) -> str:
    return text.replace("_", r"\_")


def render_latex(report: InvariantReport) -> str:
    out = [f"% {report.theory}: {report.diagram}"]
    for name, table in report.tables.items():
        if table.is_zero:
            continue
        grid = _grid(table, _stable_row(report, name))
        header, body = grid[0], grid[1:]
        out.append(f"% {_latex_escape(name)}")
        out.append(r"\begin{tabular}{r|" + "c" * (len(header) - 1) + "}")
        out.append(r"$j \backslash i$ & " + " & ".join(f"${i}$" for i in header[1:]) + r" \\")
        out.append(r"\hline")
        for row in body:
            label = row[0].replace("<=", r"\le ")
            cells = ["" if c == "." else f"${c}$" for c in row[1:]]
            out.append(f"${label}$ & " + " & ".join(cells) + r" \\")
        out.append(r"\end{tabular}")
    for name, text in report.polynomials.items():
        out.append(f"% {_latex_escape(name)} = {text}")
    return "\n".join(out) + "\n"


RENDERERS: Dict[str, Callable[[InvariantReport], str]] = {
    "table": render_table,
    "json": render_json,
    "latex": render_latex,
}


def render(report: InvariantReport, fmt: str = "table") -> str:
    renderer = RENDERERS.get(fmt)
    if renderer is None:
        raise TheoryConfigError(f"Unknown output format '{fmt}'. Use one of {list(FORMATS)}")
    return renderer(report)
