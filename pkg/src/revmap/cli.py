"""Command line entry point: source → deltas → graph → layout → outputs.

Exit codes: 0 success, 1 usage error, 2 data/ingestion error.  Progress and
diagnostics go to stderr; stdout carries one machine-parseable summary line.
Output files are written atomically (temp file + rename), so a failing run
never leaves partial outputs behind.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .bundle import export_bundle, save_bundle
from .document import GRANULARITIES, SECTION_FORMATS, detect_sections
from .errors import RevmapError
from .graph import build, compute_scripts
from .historyflow import to_history_flow
from .ingest import SourceSpec, ingest
from .layout import HEAT_SCALES, layout
from .render import StyleConfig, render_history_flow_svg, render_svg


@dataclass
class RunConfig:
    source: SourceSpec
    svg_out: Path | None
    bundle_out: Path | None
    hf_svg_out: Path | None
    compact: bool
    buckets: int | None
    heat_scale: str
    verbose: int


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    p = _Parser(prog="revmap",
                description="Visualize a document's entire revision history as "
                            "a space-time map of its additions and deletions.")
    src = p.add_argument_group("source (choose one)")
    src.add_argument("--git", metavar="REPO", help="read history from a git repository")
    src.add_argument("--path", metavar="FILE", help="file inside the git repository")
    src.add_argument("--files", metavar="DIR", help="directory of snapshot files, one revision each")
    src.add_argument("--wiki-xml", metavar="FILE", help="MediaWiki Special:Export XML file")

    p.add_argument("--granularity", choices=GRANULARITIES, default="word")
    p.add_argument("--sections", choices=SECTION_FORMATS, default="none",
                   help="heading syntax for the vertical section bands")
    out = p.add_argument_group("outputs (at least one)")
    out.add_argument("--svg", metavar="OUT", help="write the revision-map figure")
    out.add_argument("--bundle", metavar="OUT", help="write the interactive viewer bundle")
    out.add_argument("--hf-svg", metavar="OUT", help="write the History-Flow comparison figure")

    p.add_argument("--compact", action="store_true",
                   help="drop horizontal gaps; connectors become vertical lines")
    p.add_argument("--buckets", type=int, metavar="N",
                   help="bucket count for the top change bar")
    p.add_argument("--heat", choices=HEAT_SCALES, default="linear",
                   help="normalization of the change bars")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def _parse(args: list[str]) -> RunConfig:
    p = _build_parser()
    ns = p.parse_args(args)

    sources = [s for s in ("git", "files", "wiki_xml") if getattr(ns, s)]
    if len(sources) != 1:
        raise _UsageError("exactly one of --git/--files/--wiki-xml is required")
    if ns.git:
        if not ns.path:
            raise _UsageError("--git requires --path FILE")
        spec = SourceSpec("git", Path(ns.git), Path(ns.path),
                          ns.granularity, ns.sections)
    elif ns.files:
        spec = SourceSpec("files", Path(ns.files), None, ns.granularity, ns.sections)
    else:
        spec = SourceSpec("mediawiki-xml", Path(ns.wiki_xml), None,
                          ns.granularity, ns.sections)
    if ns.path and not ns.git:
        raise _UsageError("--path only applies to --git sources")

    if not (ns.svg or ns.bundle or ns.hf_svg):
        raise _UsageError("at least one of --svg/--bundle/--hf-svg is required")
    if ns.buckets is not None and ns.buckets < 1:
        raise _UsageError("--buckets must be >= 1")

    return RunConfig(
        source=spec,
        svg_out=Path(ns.svg) if ns.svg else None,
        bundle_out=Path(ns.bundle) if ns.bundle else None,
        hf_svg_out=Path(ns.hf_svg) if ns.hf_svg else None,
        compact=ns.compact,
        buckets=ns.buckets,
        heat_scale=ns.heat,
        verbose=ns.verbose,
    )


def _styled(text: str, code: str) -> str:
    if os.environ.get("CRM_COLORS") == "none" or not sys.stderr.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _progress(cfg: RunConfig, message: str) -> None:
    if cfg.verbose:
        print(_styled(message, "2"), file=sys.stderr)


def _write_text_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(f"{path.name}.tmp-{os.getpid()}")
    try:
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, path)
    except OSError:
        tmp.unlink(missing_ok=True)
        raise


def run(args: list[str]) -> int:
    try:
        cfg = _parse(args)
    except _UsageError as e:
        print(f"revmap: error: {e}", file=sys.stderr)
        return 1

    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if cfg.verbose > 1 else logging.WARNING,
                        format="revmap: %(levelname)s: %(message)s")
    started = time.perf_counter()
    try:
        _progress(cfg, f"ingesting {cfg.source.kind} source {cfg.source.location}")
        revisions = ingest(cfg.source)
        _progress(cfg, f"computing deltas for {len(revisions)} revisions")
        scripts = compute_scripts(revisions)
        graph = build(revisions, scripts=scripts)
        sections = detect_sections(graph.project_latest(), cfg.source.section_format)
        model = layout(graph, sections, compact=cfg.compact,
                       buckets=cfg.buckets, heat_scale=cfg.heat_scale)
        style = StyleConfig()

        if cfg.svg_out:
            _write_text_atomic(cfg.svg_out, render_svg(model, style))
            _progress(cfg, f"wrote {cfg.svg_out}")
        if cfg.bundle_out:
            save_bundle(export_bundle(graph, model), cfg.bundle_out)
            _progress(cfg, f"wrote {cfg.bundle_out}")
        if cfg.hf_svg_out:
            hf = to_history_flow(graph, scripts)
            _write_text_atomic(cfg.hf_svg_out, render_history_flow_svg(hf, style))
            _progress(cfg, f"wrote {cfg.hf_svg_out}")
    except (RevmapError, OSError) as e:
        print(f"revmap: error: {e}", file=sys.stderr)
        return 2

    alive = len(graph.chain)
    dead = len(graph.nodes) - alive
    tokens = sum(len(n.tokens) for n in graph.nodes.values())
    elapsed = time.perf_counter() - started
    print(f"revisions={graph.revision_count} alive={alive} dead={dead} "
          f"tokens={tokens} elapsed={elapsed:.3f}s")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
