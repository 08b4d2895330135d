"""revmap: space-time visualization of a document's full revision history.

The pipeline: ingest revisions, reduce consecutive pairs to minimal
add/delete token runs, fold those into a cumulative graph whose alive chain
always spells the latest revision, lay the graph out in document-position ×
revision coordinates, and render it as SVG or as an interactive viewer
bundle.
"""

from .bundle import ViewerBundle, export_bundle, load_bundle, save_bundle
from .delta import Delta, DeltaScript, EditOp, apply_script, compute_delta, lcs_align
from .document import (Revision, SectionSpan, Token, TokenSeq, detect_sections,
                       tokenize)
from .errors import (BundleError, EmptyHistoryError, IngestError,
                     MalformedDeltaError, MalformedScriptError, RevmapError)
from .graph import CRMGraph, Node, build, compute_scripts, new_graph, reconstruct
from .historyflow import HFModel, Segment, to_history_flow
from .ingest import SourceSpec, ingest
from .layout import (ChangeBars, LayoutModel, LayoutRect, assign_author_bands,
                     compute_change_bars, layout)
from .render import StyleConfig, render_history_flow_svg, render_svg

__version__ = "0.1.0"

__all__ = [
    "Token", "TokenSeq", "Revision", "SectionSpan", "tokenize", "detect_sections",
    "EditOp", "Delta", "DeltaScript", "lcs_align", "compute_delta", "apply_script",
    "CRMGraph", "Node", "new_graph", "build", "compute_scripts", "reconstruct",
    "LayoutRect", "ChangeBars", "LayoutModel", "layout", "compute_change_bars",
    "assign_author_bands",
    "StyleConfig", "render_svg", "render_history_flow_svg",
    "HFModel", "Segment", "to_history_flow",
    "ViewerBundle", "export_bundle", "save_bundle", "load_bundle",
    "SourceSpec", "ingest",
    "RevmapError", "MalformedScriptError", "MalformedDeltaError", "IngestError",
    "EmptyHistoryError", "BundleError",
    "__version__",
]
