"""Shared fixtures: the bundled fixture dataset and a CSV-text loader."""

from __future__ import annotations

import io
from pathlib import Path

import pytest

from careerpath.dataset import Dataset, load_dataset

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def table1_path() -> Path:
    return REPO_ROOT / "data" / "table1.csv"


@pytest.fixture(scope="session")
def table1_dataset(table1_path: Path) -> Dataset:
    return load_dataset(table1_path)


@pytest.fixture
def load_csv_text():
    """Load a dataset from inline CSV text (header included)."""

    def loader(text: str) -> Dataset:
        return load_dataset(io.StringIO(text))

    return loader
