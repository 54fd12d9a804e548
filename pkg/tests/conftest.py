import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def corpus_dir() -> pathlib.Path:
    path = ROOT / "corpus"
    assert path.is_dir(), "run scripts/gen_corpus.py first"
    return path
