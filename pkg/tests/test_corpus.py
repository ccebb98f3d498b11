"""Regression check: every shipped presentation reproduces its frozen report."""

import json
import pathlib

import pytest

from quiverhh.analysis import AnalysisOptions, run_analyze
from quiverhh.dsl import load_presentation

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"
FILES = sorted(CORPUS.glob("*.dsl"))


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_report_matches_frozen_expectation(path):
    expected = json.loads((CORPUS / (path.stem + ".expected.json")).read_text())
    p = load_presentation(path.read_text())
    report = run_analyze(p, AnalysisOptions(oracle=True))
    assert report.to_dict() == expected


def test_corpus_is_complete():
    assert len(FILES) == 15
    for path in FILES:
        assert (CORPUS / (path.stem + ".expected.json")).exists()
