"""Shared fixtures: example scripts and their parsed forms."""

from __future__ import annotations

import pathlib
import sys

import pytest

from seqcalc import parse_document


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Surface one PASS/FAIL line per acceptance criterion, capture or not."""
    mod = sys.modules.get("test_acceptance")
    if mod is not None and getattr(mod, "VERDICTS", None):
        terminalreporter.section("acceptance criteria")
        for line in mod.VERDICTS:
            terminalreporter.write_line(line)

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT / "corpus"
GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"

CORPUS_NAMES = (
    "excluded_middle.secav",
    "instantiate_twice.secav",
    "exists_monotone.secav",
)


@pytest.fixture(scope="session")
def corpus_texts() -> dict[str, str]:
    return {name: (CORPUS_DIR / name).read_text(encoding="utf-8") for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def corpus_docs(corpus_texts):
    docs = {}
    for name, text in corpus_texts.items():
        doc = parse_document(text)
        assert not doc.diagnostics, (name, doc.diagnostics)
        assert len(doc.proofs) == 1
        docs[name] = doc
    return docs


@pytest.fixture(scope="session")
def corpus_proofs(corpus_docs):
    return {name: doc.proofs[0] for name, doc in corpus_docs.items()}
