"""Walk the 4-revision example document through the whole pipeline.

The document starts as (1 2 3 4 5); revision 2 inserts 6, revision 3 deletes
1, revision 4 inserts 7 and deletes 4.  Watch the deltas come out of the diff
engine, the graph split nodes to absorb them, and the alive chain end up
spelling the final text (2 7 3 6 5) exactly.

Run:  python demos/01_walkthrough.py
"""

from pathlib import Path

from revmap import Revision, build, compute_scripts, export_bundle, layout, render_svg, save_bundle, tokenize

OUT = Path(__file__).parent / "out"

contents = ["1 2 3 4 5", "1 2 3 6 4 5", "2 3 6 4 5", "2 7 3 6 5"]
revisions = [
    Revision(i + 1, "alice", f"2011-03-0{i + 1}T10:00:00+00:00", f"edit {i + 1}",
             tokenize(text))
    for i, text in enumerate(contents)
]

print("== deltas per revision ==")
scripts = compute_scripts(revisions)
for script in scripts:
    for d in script:
        print(f"  rev {d.revision}: {d.op.value:6s} {d.payload.text()!r} at position {d.position}")

print("\n== cumulative graph ==")
graph = build(revisions, scripts=scripts)
for node_id in graph.chain:
    node = graph.nodes[node_id]
    print(f"  alive {node.tokens.text()!r:8s} born rev {node.birth_rev}")
for node in graph.dead_nodes():
    anchor = graph.nodes[node.attach].tokens.text()
    print(f"  dead  {node.tokens.text()!r:8s} born rev {node.birth_rev}, "
          f"deleted rev {node.death_rev}, attached to {anchor!r}")

print(f"\nprojection of the alive chain: {graph.project_latest().text()!r}")
assert graph.project_latest() == revisions[-1].content

OUT.mkdir(exist_ok=True)
model = layout(graph)
(OUT / "walkthrough.svg").write_text(render_svg(model))
save_bundle(export_bundle(graph, model), OUT / "walkthrough.crm.json")
print(f"wrote {OUT / 'walkthrough.svg'} and {OUT / 'walkthrough.crm.json'}")
