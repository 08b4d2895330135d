"""Three authors editing one short document, and the two figures side by side.

The snapshots in fixtures/synthetic follow a classic collaboration: bob adds
a closing block near the end, carol replaces most of it with something
shorter, and bob comes back to insert a line at about the quarter mark.  The
revision map shows those edits at their final document positions; the
History-Flow transform shows the whole document at every revision instead.

Run:  python demos/02_three_authors.py
"""

from pathlib import Path

from revmap import (Revision, TokenSeq, build, compute_scripts, layout,
                    render_history_flow_svg, render_svg, to_history_flow)
from revmap.ingest import SourceSpec, ingest

ROOT = Path(__file__).parent.parent
OUT = Path(__file__).parent / "out"

# the files adapter can't know who wrote each snapshot, so re-tag the
# revisions with the authors the history is meant to have
snapshots = ingest(SourceSpec("files", ROOT / "fixtures" / "synthetic"))
authors = ["alice", "bob", "carol", "bob"]
revisions = [
    Revision(rev.index, author, rev.timestamp, rev.comment, rev.content)
    for rev, author in zip(snapshots, authors)
]

scripts = compute_scripts(revisions)
graph = build(revisions, scripts=scripts)

print("edited token counts per revision:")
for script in scripts:
    print(f"  rev {script.revision} ({revisions[script.revision - 1].author}): "
          f"{script.edit_size()} tokens")

model = layout(graph)
rev4 = next(r for r in model.rects if r.row == 4 and r.kind == "persistent")
print(f"\nbob's final insertion sits at tokens [{rev4.x0}, {rev4.x1}) "
      f"of {model.latest_len} = "
      f"{rev4.x0 / model.latest_len:.0%}..{rev4.x1 / model.latest_len:.0%} "
      f"of the document width")

OUT.mkdir(exist_ok=True)
(OUT / "three_authors.svg").write_text(render_svg(model))
hf = to_history_flow(graph, scripts)
(OUT / "three_authors_hf.svg").write_text(render_history_flow_svg(hf))
print(f"wrote {OUT / 'three_authors.svg'} (revision map) and "
      f"{OUT / 'three_authors_hf.svg'} (History Flow)")
