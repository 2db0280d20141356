"""Instance files, traces, tables, pictures and the command line."""
from .instance import Instance, ParseError, emit_instance, instance_hash, load_instance, parse_instance
from .render import RenderOptions, render_svg
from .tables import comparison_csv, convergence_csv
from .trace import emit_trace, read_trace, trace_text

__all__ = [
    "Instance",
    "ParseError",
    "RenderOptions",
    "comparison_csv",
    "convergence_csv",
    "emit_instance",
    "emit_trace",
    "instance_hash",
    "load_instance",
    "parse_instance",
    "read_trace",
    "render_svg",
    "trace_text",
]
