"""Revision sources: git file histories, snapshot directories, MediaWiki
exports.

Every adapter produces the same thing: revisions ordered oldest-first with
indices reassigned 1..R, tokenized at the requested granularity.  History
order is authoritative; a timestamp that goes backwards only warns.
"""

from __future__ import annotations

import logging
import subprocess
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .document import Revision, tokenize
from .errors import EmptyHistoryError, IngestError

log = logging.getLogger(__name__)

SOURCE_KINDS = ("git", "files", "mediawiki-xml")


@dataclass(frozen=True)
class SourceSpec:
    kind: str
    location: Path
    target: Path | None = None  # path within the repository (git only)
    granularity: str = "word"
    section_format: str = "none"

    def __post_init__(self) -> None:
        if self.kind not in SOURCE_KINDS:
            raise ValueError(f"unknown source kind {self.kind!r} (expected one of {SOURCE_KINDS})")
        if self.kind == "git" and self.target is None:
            raise ValueError("git sources need a target path within the repository")


def ingest(spec: SourceSpec) -> list[Revision]:
    """Read a revision history from disk.

    Raises EmptyHistoryError when the source holds no revisions and
    IngestError when it cannot be read at all.
    """
    if not Path(spec.location).exists():
        raise IngestError(f"source location does not exist: {spec.location}")
    if spec.kind == "git":
        raws = _read_git(Path(spec.location), Path(spec.target))
    elif spec.kind == "files":
        raws = _read_files(Path(spec.location))
    else:
        raws = _read_mediawiki(Path(spec.location))
    if not raws:
        raise EmptyHistoryError(f"no revisions found in {spec.kind} source {spec.location}")

    _warn_on_backward_timestamps(raws)
    return [
        Revision(index=k + 1, author=author, timestamp=stamp, comment=comment,
                 content=tokenize(text, spec.granularity))
        for k, (author, stamp, comment, text) in enumerate(raws)
    ]


RawRevision = tuple[str, str, str, str]  # author, timestamp, comment, text


def _git(repo: Path, *args: str) -> str:
    proc = subprocess.run(["git", "-C", str(repo), *args],
                          capture_output=True, text=True)
    if proc.returncode != 0:
        raise IngestError(f"git {args[0]} failed in {repo}: {proc.stderr.strip()}")
    return proc.stdout


def _read_git(repo: Path, target: Path) -> list[RawRevision]:
    """Walk first-parent history of commits touching the target file,
    oldest first.  Commits where the file is absent are skipped with a
    warning (e.g. the commit deleting it)."""
    sep = "\x1f"
    listing = _git(repo, "log", "--first-parent", "--reverse",
                   f"--format=%H{sep}%an{sep}%aI{sep}%s", "--", str(target))
    raws: list[RawRevision] = []
    for line in listing.splitlines():
        if not line.strip():
            continue
        commit, author, stamp, subject = line.split(sep, 3)
        show = subprocess.run(["git", "-C", str(repo), "show", f"{commit}:{target}"],
                              capture_output=True)
        if show.returncode != 0:
            log.warning("skipping revision %s: %s not present", commit[:12], target)
            continue
        raws.append((author, stamp, subject, show.stdout.decode("utf-8", errors="replace")))
    return raws


def _read_files(directory: Path) -> list[RawRevision]:
    """Snapshot files in lexicographic filename order, one revision each."""
    if not directory.is_dir():
        raise IngestError(f"files source must be a directory: {directory}")
    raws = []
    for path in sorted(directory.iterdir()):
        if not path.is_file() or path.name.startswith("."):
            continue
        stamp = datetime.fromtimestamp(path.stat().st_mtime, tz=timezone.utc).isoformat()
        raws.append((_file_owner(path), stamp, path.name,
                     path.read_text(encoding="utf-8", errors="replace")))
    return raws


def _file_owner(path: Path) -> str:
    try:
        import pwd
        return pwd.getpwuid(path.stat().st_uid).pw_name
    except (ImportError, KeyError, OSError):
        return "unknown"


def _localname(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _read_mediawiki(path: Path) -> list[RawRevision]:
    """Parse a standard MediaWiki export: page > revision elements with
    timestamp, contributor, comment and text children.  Deleted or
    suppressed revisions are skipped with a warning."""
    raws: list[RawRevision] = []
    try:
        with open(path, "rb") as fp:
            for _, elem in ET.iterparse(fp, events=("end",)):
                if _localname(elem.tag) != "revision":
                    continue
                raw = _mediawiki_revision(elem)
                if raw is not None:
                    raws.append(raw)
                elem.clear()
    except ET.ParseError as e:
        raise IngestError(
            f"malformed MediaWiki XML in {path} at byte offset "
            f"{_byte_offset(path, e.position)} (line {e.position[0]}, "
            f"column {e.position[1]}): {e.msg if hasattr(e, 'msg') else e}") from e
    return raws


def _mediawiki_revision(elem: ET.Element) -> RawRevision | None:
    stamp = comment = ""
    author = "unknown"
    text: str | None = None
    for child in elem:
        name = _localname(child.tag)
        if name == "timestamp":
            stamp = (child.text or "").strip()
        elif name == "comment":
            comment = child.text or ""
        elif name == "contributor":
            if child.get("deleted"):
                author = "unknown"
                continue
            for sub in child:
                if _localname(sub.tag) in ("username", "ip") and sub.text:
                    author = sub.text.strip()
                    break
        elif name == "text":
            if child.get("deleted"):
                log.warning("skipping deleted revision at %s", stamp or "<no timestamp>")
                return None
            text = child.text or ""
    if text is None:
        log.warning("skipping revision without text element at %s", stamp or "<no timestamp>")
        return None
    return (author, stamp, comment, text)


def _byte_offset(path: Path, position: tuple[int, int]) -> int:
    """Approximate byte offset of a (line, column) parse-error position."""
    line, column = position
    offset = 0
    try:
        with open(path, "rb") as fp:
            for _ in range(line - 1):
                chunk = fp.readline()
                if not chunk:
                    break
                offset += len(chunk)
    except OSError:
        return column
    return offset + column


def _warn_on_backward_timestamps(raws: list[RawRevision]) -> None:
    previous = None
    for author, stamp, _, _ in raws:
        parsed = _parse_instant(stamp)
        if parsed is None:
            continue
        if previous is not None and parsed < previous:
            log.warning("timestamp goes backwards at %s (%s); keeping history order",
                        stamp, author)
        previous = parsed


def _parse_instant(stamp: str) -> datetime | None:
    try:
        return datetime.fromisoformat(stamp.replace("Z", "+00:00"))
    except ValueError:
        return None
