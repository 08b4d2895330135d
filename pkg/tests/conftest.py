"""Shared fixtures: the golden 4-revision document, the 3-author synthetic
document, random history generation, and a deterministic git repo builder."""

from __future__ import annotations

import random
import subprocess
from pathlib import Path

import pytest

from revmap import Revision, TokenSeq, tokenize

REPO_ROOT = Path(__file__).resolve().parent.parent

# the 4-revision walkthrough document: rev 2 adds 6, rev 3 deletes 1,
# rev 4 adds 7 and deletes 4
GOLDEN_CONTENTS = ("1 2 3 4 5", "1 2 3 6 4 5", "2 3 6 4 5", "2 7 3 6 5")

_BASE_40 = (
    "the archive charter describes how records enter the collection and "
    "how they are reviewed before publication each entry keeps its full "
    "history so readers can trace every change made along the way by any "
    "contributor notes and sources appear below"
)
_BOB_12 = "a closing summary lists open questions raised during review and next steps"
_CAROL_4 = "remaining items move elsewhere"
_BOB_4 = "sorted by submission date"


def golden_revisions() -> list[Revision]:
    return [
        Revision(i + 1, "alice", f"2011-03-0{i + 1}T10:00:00+00:00",
                 f"edit {i + 1}", tokenize(text))
        for i, text in enumerate(GOLDEN_CONTENTS)
    ]


def synthetic_revisions() -> list[Revision]:
    """Four revisions, three authors: bob appends near the end, carol
    replaces most of bob's addition with something shorter, bob inserts
    again at about the 25% position."""
    w = _BASE_40.split()
    assert len(w) == 40
    rev1 = list(w)
    rev2 = rev1[:37] + _BOB_12.split() + rev1[37:]
    rev3 = rev2[:39] + _CAROL_4.split() + rev2[47:]
    rev4 = rev3[:13] + _BOB_4.split() + rev3[13:]
    rows = [("alice", rev1), ("bob", rev2), ("carol", rev3), ("bob", rev4)]
    return [
        Revision(i + 1, author, f"2011-04-{10 + i}T09:00:00+00:00",
                 f"pass {i + 1}", TokenSeq.from_texts(words))
        for i, (author, words) in enumerate(rows)
    ]


def random_history(rng: random.Random, max_revs: int = 30, max_len: int = 200) -> list[Revision]:
    """A linear edit history: random base content, then random localized
    insert/delete runs per revision (occasionally none, so identical
    consecutive revisions occur too)."""
    vocab = [f"w{k}" for k in range(rng.randint(2, 50))]
    content = [rng.choice(vocab) for _ in range(rng.randint(0, max_len))]
    authors = ("ann", "ben", "cat", "dia")
    revisions = []
    for r in range(1, rng.randint(1, max_revs) + 1):
        if r > 1:
            for _ in range(rng.randint(0, 4)):
                roll = rng.random()
                if roll < 0.5 and content:
                    start = rng.randrange(len(content))
                    run = rng.randint(1, min(12, len(content) - start))
                    del content[start:start + run]
                elif roll < 0.95:
                    pos = rng.randint(0, len(content))
                    content[pos:pos] = [rng.choice(vocab)
                                        for _ in range(rng.randint(1, 12))]
        revisions.append(Revision(r, rng.choice(authors),
                                  f"2020-01-{min(r, 28):02d}T00:00:00+00:00",
                                  f"edit {r}", TokenSeq.from_texts(content)))
    return revisions


def scale_history(revs: int = 150, length: int = 5000, seed: int = 7) -> list[Revision]:
    """A large history with substantial activity: every revision makes a few
    clustered edits around a drifting focus position, the way real documents
    are worked over section by section."""
    rng = random.Random(seed)
    words = [f"tok{k}" for k in range(2000)]
    content = [rng.choice(words) for _ in range(length)]
    authors = [f"dev{k}" for k in range(6)]
    revisions = []
    focus = length // 2
    for r in range(1, revs + 1):
        if r > 1:
            focus = min(max(focus + rng.randint(-400, 400), 0), max(len(content) - 1, 0))
            for _ in range(rng.randint(1, 3)):
                pos = min(max(focus + rng.randint(-100, 100), 0), len(content))
                if rng.random() < 0.48 and len(content) > 100:
                    del content[pos:pos + rng.randint(1, 28)]
                else:
                    content[pos:pos] = [rng.choice(words)
                                        for _ in range(rng.randint(2, 30))]
        revisions.append(Revision(r, rng.choice(authors),
                                  f"2022-03-01T{r % 24:02d}:00:00+00:00",
                                  f"pass {r}", TokenSeq.from_texts(content)))
    return revisions


@pytest.fixture
def golden():
    return golden_revisions()


@pytest.fixture
def synthetic():
    return synthetic_revisions()


def _git(repo: Path, *args: str, env: dict | None = None) -> None:
    subprocess.run(["git", "-C", str(repo), *args], check=True,
                   capture_output=True, env=env)


@pytest.fixture
def make_git_repo(tmp_path):
    """Build a repository with one commit per given content, with pinned
    authors and dates so runs are reproducible."""

    def make(contents: list[str], filename: str = "doc.txt",
             authors: list[str] | None = None) -> Path:
        repo = tmp_path / "repo"
        repo.mkdir()
        subprocess.run(["git", "init", "-q", "-b", "main", str(repo)],
                       check=True, capture_output=True)
        _git(repo, "config", "user.email", "test@example.invalid")
        _git(repo, "config", "user.name", "tester")
        for k, text in enumerate(contents):
            (repo / filename).write_text(text, encoding="utf-8")
            _git(repo, "add", filename)
            author = (authors or ["tester"] * len(contents))[k]
            import os
            env = dict(os.environ)
            stamp = f"2021-06-{k + 1:02d}T12:00:00+00:00"
            env.update({
                "GIT_AUTHOR_NAME": author,
                "GIT_AUTHOR_EMAIL": "test@example.invalid",
                "GIT_AUTHOR_DATE": stamp,
                "GIT_COMMITTER_DATE": stamp,
            })
            _git(repo, "commit", "-q", "-m", f"commit {k + 1}", env=env)
        return repo

    return make
