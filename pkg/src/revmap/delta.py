"""Minimal edit scripts between consecutive revisions.

Each revision pair (reference = previous content, proposal = new content) is
reduced to the smallest set of token runs that were added or deleted, found
by solving a longest-common-subsequence problem.  An edit is a 4-tuple of
operation, payload, reference position, and revision number; replaying a
revision's script against the reference reproduces the proposal exactly.

Positions are always indices into the *reference* (pre-edit) sequence: an Add
names the insertion index 0..len(reference), a Delete names the start of the
deleted run.  Replacements are normalized to a Delete plus an Add at the same
position, so downstream consumers only ever see two operation kinds.

Alignment tie-break: the common prefix and suffix are matched in place, and
within the remaining window the maximal alignment matching earliest in the
reference is chosen.  The choice among equally minimal scripts is otherwise
arbitrary; this rule exists to make outputs deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .document import TokenSeq
from .errors import MalformedScriptError

# Exact LCS runs in O(n*m); pairs whose post-trim window exceeds this many DP
# cells fall back to a coarser block-granularity pass (still a valid script,
# not guaranteed minimal).
DEFAULT_CELL_CAP = 1_000_000


class EditOp(enum.Enum):
    ADD = "add"
    DELETE = "delete"


@dataclass(frozen=True)
class Delta:
    """One edit event: operation, payload tokens, reference position, revision."""

    op: EditOp
    payload: TokenSeq
    position: int
    revision: int

    def __post_init__(self) -> None:
        if len(self.payload) == 0:
            raise ValueError("delta payload must be non-empty")
        if self.position < 0:
            raise ValueError(f"delta position must be >= 0, got {self.position}")


@dataclass(frozen=True)
class DeltaScript:
    """All deltas of one revision, ordered by ascending reference position
    with Delete before Add at equal positions."""

    revision: int
    deltas: tuple[Delta, ...] = ()

    def __post_init__(self) -> None:
        for d in self.deltas:
            if d.revision != self.revision:
                raise ValueError("all deltas in a script must share its revision index")

    def __len__(self) -> int:
        return len(self.deltas)

    def __iter__(self):
        return iter(self.deltas)

    def edit_size(self) -> int:
        """Total number of tokens added plus tokens deleted."""
        return sum(len(d.payload) for d in self.deltas)


def _token_ids(a: TokenSeq, b: TokenSeq) -> tuple[np.ndarray, np.ndarray]:
    # Interning keyed by Token compares content hash first, text on collision,
    # so hash collisions can never conflate distinct tokens.
    ids: dict = {}
    def encode(seq: TokenSeq) -> np.ndarray:
        out = np.empty(len(seq), dtype=np.int64)
        for i, tok in enumerate(seq.tokens):
            out[i] = ids.setdefault(tok, len(ids))
        return out
    return encode(a), encode(b)


def _suffix_lcs_table(xa: np.ndarray, xb: np.ndarray) -> np.ndarray:
    """C[i, j] = LCS length of xa[i:] vs xb[j:], computed row by row."""
    n, m = len(xa), len(xb)
    C = np.zeros((n + 1, m + 1), dtype=np.int32)
    f = np.zeros(m + 1, dtype=np.int32)
    for i in range(n - 1, -1, -1):
        nxt = C[i + 1]
        eq = xb == xa[i]
        # when tokens are equal, taking the match is always optimal
        np.add(nxt[1:], 1, out=f[:m], where=eq)
        f[:m] *= eq
        np.maximum(f, nxt, out=f)
        C[i] = np.maximum.accumulate(f[::-1])[::-1]
    return C


def _trace_earliest(C: np.ndarray, xa: np.ndarray, xb: np.ndarray) -> list[tuple[int, int]]:
    """Walk the table front-to-back, matching each reference token at the
    earliest proposal position that still yields a maximal alignment."""
    pairs: list[tuple[int, int]] = []
    n, m = len(xa), len(xb)
    i, j = 0, 0
    while i < n and j < m and C[i, j] > 0:
        target = C[i, j]
        row = C[i, j:m]
        # C[i, :] is non-increasing; only the leading run still equal to the
        # target can host a maximality-preserving match
        width = int(np.searchsorted(-row, -target, side="right"))
        hits = np.nonzero(xb[j : j + width] == xa[i])[0]
        matched = False
        for off in hits:
            jj = j + int(off)
            if C[i + 1, jj + 1] == target - 1:
                pairs.append((i, jj))
                i += 1
                j = jj + 1
                matched = True
                break
        if not matched:
            i += 1
    return pairs


def _block_align(xa: np.ndarray, xb: np.ndarray, cell_cap: int) -> list[tuple[int, int]]:
    """Coarse pass for oversized windows: align fixed-size token blocks
    instead of tokens, then expand matched blocks pairwise."""
    n, m = len(xa), len(xb)
    k = 2
    while ((n + k - 1) // k) * ((m + k - 1) // k) > cell_cap:
        k *= 2
    blocks: dict = {}
    def coarsen(x: np.ndarray) -> np.ndarray:
        chunks = [x[p : p + k].tobytes() for p in range(0, len(x), k)]
        return np.array([blocks.setdefault(c, len(blocks)) for c in chunks], dtype=np.int64)
    ca, cb = coarsen(xa), coarsen(xb)
    C = _suffix_lcs_table(ca, cb)
    pairs: list[tuple[int, int]] = []
    for p, q in _trace_earliest(C, ca, cb):
        span = min(k, n - p * k)  # equal blocks have equal length
        pairs.extend((p * k + t, q * k + t) for t in range(span))
    return pairs


def lcs_align(a: TokenSeq, b: TokenSeq, cell_cap: int = DEFAULT_CELL_CAP) -> list[tuple[int, int]]:
    """Align two token sequences on a longest common subsequence.

    Returns matched (index-in-a, index-in-b) pairs, strictly increasing in
    both coordinates, with paired tokens equal.  The pair count equals the
    LCS length whenever the trimmed alignment window fits within ``cell_cap``
    DP cells; larger windows degrade to a block-coarsened (still valid, not
    necessarily maximal) alignment.
    """
    xa, xb = _token_ids(a, b)
    n, m = len(xa), len(xb)
    k = min(n, m)
    if k == 0:
        return []

    neq = xa[:k] != xb[:k]
    pre = int(np.argmax(neq)) if neq.any() else k
    rest = min(n, m) - pre
    neq_tail = xa[n - rest : n][::-1] != xb[m - rest : m][::-1] if rest else np.array([], bool)
    suf = (int(np.argmax(neq_tail)) if neq_tail.any() else rest) if rest else 0

    mid_a = xa[pre : n - suf]
    mid_b = xb[pre : m - suf]
    if len(mid_a) == 0 or len(mid_b) == 0:
        mid_pairs: list[tuple[int, int]] = []
    elif len(mid_a) * len(mid_b) <= cell_cap:
        C = _suffix_lcs_table(mid_a, mid_b)
        mid_pairs = _trace_earliest(C, mid_a, mid_b)
    else:
        mid_pairs = _block_align(mid_a, mid_b, cell_cap)

    pairs = [(i, i) for i in range(pre)]
    pairs.extend((i + pre, j + pre) for i, j in mid_pairs)
    pairs.extend((n - suf + t, m - suf + t) for t in range(suf))
    return pairs


def compute_delta(reference: TokenSeq, proposal: TokenSeq, revision: int,
                  cell_cap: int = DEFAULT_CELL_CAP) -> DeltaScript:
    """Reduce one revision step to its minimal add/delete runs.

    Unmatched reference runs become Delete deltas, unmatched proposal runs
    become Add deltas at their reference insertion index.  Replaying the
    script against the reference yields the proposal exactly.
    """
    if revision < 1:
        raise ValueError(f"revision must be >= 1, got {revision}")
    pairs = lcs_align(reference, proposal, cell_cap=cell_cap)
    deltas: list[Delta] = []
    ri = pi = 0
    for ai, bj in pairs + [(len(reference), len(proposal))]:
        if ai > ri:
            deltas.append(Delta(EditOp.DELETE, reference[ri:ai], ri, revision))
        if bj > pi:
            deltas.append(Delta(EditOp.ADD, proposal[pi:bj], ri, revision))
        ri, pi = ai + 1, bj + 1
    return DeltaScript(revision, tuple(deltas))


def application_order(deltas) -> list[Delta]:
    """Order deltas for replay: descending reference position so earlier
    positions stay valid, Delete before Add at equal positions."""
    return sorted(deltas, key=lambda d: (-d.position, 0 if d.op is EditOp.DELETE else 1))


def apply_script(reference: TokenSeq, script: DeltaScript) -> TokenSeq:
    """Replay an edit script against its reference sequence.

    Raises MalformedScriptError if any position falls outside the reference
    or a Delete payload does not match the tokens it claims to remove.
    """
    out = list(reference.tokens)
    for d in application_order(script):
        if d.op is EditOp.DELETE:
            end = d.position + len(d.payload)
            if end > len(out):
                raise MalformedScriptError(
                    f"delete span [{d.position}, {end}) exceeds sequence length {len(out)}")
            if tuple(out[d.position:end]) != d.payload.tokens:
                raise MalformedScriptError(
                    f"delete payload mismatch at position {d.position} (revision {d.revision})")
            del out[d.position:end]
        else:
            if d.position > len(out):
                raise MalformedScriptError(
                    f"add position {d.position} exceeds sequence length {len(out)}")
            out[d.position:d.position] = d.payload.tokens
    return TokenSeq(tuple(out))
