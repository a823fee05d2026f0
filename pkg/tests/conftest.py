from __future__ import annotations

import pytest

from zebra import corpus
from zebra.model import Mechanism, validate
from zebra.textfmt import parse


def load(name: str):
    """Validated mechanism (or counts record) for a corpus source file stem."""
    doc = parse((corpus.CORPUS_DIR / f"{name}.mech").read_text())
    return validate(doc) if isinstance(doc, Mechanism) else doc


@pytest.fixture(scope="session")
def entries():
    return corpus.entries()


@pytest.fixture(scope="session")
def topology_entries(entries):
    return [e for e in entries if e.mode == "topology"]


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
