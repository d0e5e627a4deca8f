from app.report.render import FORMATS, render, render_json, render_latex, render_table

__all__ = ["FORMATS", "render", "render_json", "render_latex", "render_table"]
