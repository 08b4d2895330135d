"""Cumulative revision graph.

Every token ever added to the document lives in exactly one node.  Nodes are
token subsequences tagged with the revision (and author) that introduced
them; an addition splits the covering node to make room, a deletion splits
out the removed run, marks those nodes dead, and attaches them to a surviving
neighbor.  Alive nodes stay linked in a chain whose concatenation is always
the latest revision, so the graph accumulates the entire edit history without
ever losing the current document.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .delta import Delta, DeltaScript, EditOp, application_order, apply_script, compute_delta
from .document import Revision, TokenSeq
from .errors import MalformedDeltaError

NodeId = int


@dataclass
class Node:
    """A token subsequence with its birth revision and alive/dead state.

    ``death_rev`` is None while the tokens survive; once deleted, ``attach``
    names the anchor node the dead node hangs off (None only when the whole
    document was wiped and no anchor exists).
    """

    id: NodeId
    tokens: TokenSeq
    birth_rev: int
    author: str
    death_rev: int | None = None
    attach: NodeId | None = None

    @property
    def alive(self) -> bool:
        return self.death_rev is None


@dataclass
class RevisionMeta:
    """Per-revision metadata kept on the graph (content lives in the nodes)."""

    index: int
    author: str
    timestamp: str
    comment: str


@dataclass
class CRMGraph:
    """Cumulative revision map graph: all nodes ever created plus the alive
    chain.  Construction is sequential (one writer applying revisions in
    order); a finished graph is treated as read-only."""

    nodes: dict[NodeId, Node] = field(default_factory=dict)
    chain: list[NodeId] = field(default_factory=list)
    revisions: list[RevisionMeta] = field(default_factory=list)
    _next_id: int = 0

    @property
    def revision_count(self) -> int:
        return len(self.revisions)

    def node(self, node_id: NodeId) -> Node:
        return self.nodes[node_id]

    def alive_nodes(self) -> list[Node]:
        return [self.nodes[i] for i in self.chain]

    def dead_nodes(self) -> list[Node]:
        return [n for n in sorted(self.nodes.values(), key=lambda n: n.id) if not n.alive]

    def project_latest(self) -> TokenSeq:
        """Concatenate the alive chain: exactly the latest revision's content."""
        out: tuple = ()
        for node_id in self.chain:
            out += self.nodes[node_id].tokens.tokens
        return TokenSeq(out)

    def add_revision_meta(self, rev: Revision) -> None:
        self.revisions.append(RevisionMeta(rev.index, rev.author, rev.timestamp, rev.comment))

    def _author_of(self, revision: int) -> str:
        if 1 <= revision <= len(self.revisions):
            return self.revisions[revision - 1].author
        return "unknown"

    def _new_node(self, tokens: TokenSeq, birth_rev: int, author: str) -> Node:
        node = Node(self._next_id, tokens, birth_rev, author)
        self._next_id += 1
        self.nodes[node.id] = node
        return node

    def _locate(self, position: int) -> tuple[int, int]:
        """Map an alive-concatenation token position to (chain index, offset).

        Returns (len(chain), 0) for the end-of-document position.
        """
        cum = 0
        for ci, node_id in enumerate(self.chain):
            width = len(self.nodes[node_id].tokens)
            if position < cum + width:
                return ci, position - cum
            cum += width
        if position == cum:
            return len(self.chain), 0
        raise MalformedDeltaError(
            f"position {position} outside alive content of length {cum}")

    def _split_at(self, position: int) -> int:
        """Force a node boundary at the given position; return the chain index
        of that boundary.  Both halves keep the original birth revision and
        author; the left half keeps the node id."""
        ci, offset = self._locate(position)
        if offset == 0:
            return ci
        node = self.nodes[self.chain[ci]]
        right = self._new_node(node.tokens[offset:], node.birth_rev, node.author)
        node.tokens = node.tokens[:offset]
        self.chain.insert(ci + 1, right.id)
        return ci + 1

    def apply_addition(self, d: Delta) -> "CRMGraph":
        """Insert the payload as a new alive node, splitting the covering node
        unless the insertion point is already a boundary."""
        if d.op is not EditOp.ADD:
            raise MalformedDeltaError(f"apply_addition got a {d.op.value} delta")
        ci = self._split_at(d.position)
        node = self._new_node(d.payload, d.revision, self._author_of(d.revision))
        self.chain.insert(ci, node.id)
        return self

    def apply_deletion(self, d: Delta) -> "CRMGraph":
        """Split out the deleted run, mark its nodes dead, and attach them to
        the alive node just before the span (just after it when the span
        starts the document; None when nothing survives at all)."""
        if d.op is not EditOp.DELETE:
            raise MalformedDeltaError(f"apply_deletion got a {d.op.value} delta")
        start_ci = self._split_at(d.position)
        end_ci = self._split_at(d.position + len(d.payload))
        doomed = self.chain[start_ci:end_ci]
        removed: tuple = ()
        for node_id in doomed:
            removed += self.nodes[node_id].tokens.tokens
        if removed != d.payload.tokens:
            raise MalformedDeltaError(
                f"delete payload mismatch at position {d.position} (revision {d.revision})")
        if start_ci > 0:
            anchor = self.chain[start_ci - 1]
        elif end_ci < len(self.chain):
            anchor = self.chain[end_ci]
        else:
            anchor = None
        for node_id in doomed:
            node = self.nodes[node_id]
            node.death_rev = d.revision
            node.attach = anchor
        del self.chain[start_ci:end_ci]
        return self


def new_graph() -> CRMGraph:
    return CRMGraph()


def compute_scripts(revisions: list[Revision]) -> list[DeltaScript]:
    """Delta scripts for a revision history, one per revision.

    Revision 1 is expressed as a single Add of its full content against an
    empty reference, so the graph build has no special first-revision path.
    """
    _check_indices(revisions)
    scripts = []
    reference = TokenSeq()
    for rev in revisions:
        scripts.append(compute_delta(reference, rev.content, rev.index))
        reference = rev.content
    return scripts


def build(revisions: list[Revision], scripts: list[DeltaScript] | None = None) -> CRMGraph:
    """Fold a revision history into its cumulative graph.

    Each revision's deltas are applied in descending reference position
    (deletions before additions at equal positions) so positions computed
    against the previous revision stay valid throughout.
    """
    _check_indices(revisions)
    if scripts is None:
        scripts = compute_scripts(revisions)
    if len(scripts) != len(revisions):
        raise ValueError("need exactly one script per revision")
    g = CRMGraph()
    for rev, script in zip(revisions, scripts):
        g.add_revision_meta(rev)
        for d in application_order(script):
            if d.op is EditOp.DELETE:
                g.apply_deletion(d)
            else:
                g.apply_addition(d)
    return g


def reconstruct(scripts: list[DeltaScript], r: int) -> TokenSeq:
    """Recover the content of revision r by replaying scripts 1..r from an
    empty document."""
    if not 1 <= r <= len(scripts):
        raise ValueError(f"revision {r} out of range 1..{len(scripts)}")
    content = TokenSeq()
    for script in scripts[:r]:
        content = apply_script(content, script)
    return content


def _check_indices(revisions: list[Revision]) -> None:
    if not revisions:
        raise ValueError("revision list must be non-empty")
    for k, rev in enumerate(revisions):
        if rev.index != k + 1:
            raise ValueError(
                f"revision indices must run 1..{len(revisions)}, got {rev.index} at slot {k}")
