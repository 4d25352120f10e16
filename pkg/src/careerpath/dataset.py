"""Career-record dataset: CSV ingestion, validation, and stage extraction.

Each record describes one person's path through up to three education stages
(bachelors, masters, doctoral) followed by a work position. A stage exists
exactly when its Stream column is non-empty; rows without a work position are
rejected with a warning instead of aborting the load.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterator, Union

__all__ = [
    "CareerRecord",
    "Dataset",
    "DatasetError",
    "DatasetStats",
    "Education",
    "EducationStage",
    "REQUIRED_COLUMNS",
    "StageLevel",
    "dataset_stats",
    "dump_dataset",
    "iter_warnings",
    "load_dataset",
    "stages_after",
]

REQUIRED_COLUMNS = (
    "Bachelors Stream",
    "Bachelors University",
    "Bachelors Duration",
    "Masters Stream",
    "Masters University",
    "Masters Duration",
    "Doctoral Stream",
    "Doctoral University",
    "Doctoral Duration",
    "Work Position",
    "Work Organization",
)

Source = Union[str, Path, IO[str]]


class DatasetError(Exception):
    """The source cannot be interpreted as a career dataset."""


class StageLevel(Enum):
    """Education stage levels, in career order."""

    BACHELORS = "Bachelors"
    MASTERS = "Masters"
    DOCTORAL = "Doctoral"


class Education(Enum):
    """Current education level of a person asking for suggestions."""

    HIGH_SCHOOL = "high_school"
    BACHELORS = "bachelors"


@dataclass(frozen=True)
class EducationStage:
    """One completed degree: level, stream, and optional details."""

    level: StageLevel
    stream: str
    university: str | None = None
    duration_years: float | None = None


@dataclass(frozen=True)
class CareerRecord:
    """One person's education stages and the job they ended up in."""

    id: str
    work_position: str
    bachelors: EducationStage | None = None
    masters: EducationStage | None = None
    doctoral: EducationStage | None = None
    work_organization: str | None = None

    def stages(self) -> tuple[EducationStage, ...]:
        """Present stages in bachelors -> masters -> doctoral order."""
        present = (self.bachelors, self.masters, self.doctoral)
        return tuple(stage for stage in present if stage is not None)


@dataclass(frozen=True)
class Dataset:
    """Loaded records plus the load's rejection count and row warnings."""

    records: tuple[CareerRecord, ...]
    rejected_count: int = 0
    warnings: tuple[tuple[int, str], ...] = ()


@dataclass(frozen=True)
class DatasetStats:
    """Summary counts over a dataset."""

    records: int
    bachelors: int
    masters: int
    doctoral: int
    distinct_work_positions: int


_DURATION_PATTERN = re.compile(r"^(\d+(?:\.\d+)?)(?:\s*[A-Za-z]+\.?)?$")


def _parse_duration(text: str) -> float | None:
    """Parse a duration in years, tolerating one trailing unit word."""
    match = _DURATION_PATTERN.match(text)
    if match is None:
        return None
    return float(match.group(1))


def _open_source(source: Source) -> tuple[IO[str], bool]:
    if isinstance(source, (str, Path)):
        return open(source, newline="", encoding="utf-8"), True
    return source, False


def load_dataset(source: Source) -> Dataset:
    """Load a career dataset from a CSV path or open text stream.

    The header must contain all eleven required columns (matched without
    regard to case or order). Rows with an empty Work Position are rejected
    and counted; other per-row problems produce warnings but keep the record.

    Raises DatasetError when the header is unusable; I/O errors propagate.
    """
    stream, owned = _open_source(source)
    try:
        reader = csv.reader(stream)
        header = next(reader, None)
        if header is None:
            missing = ", ".join(REQUIRED_COLUMNS)
            raise DatasetError(f"source has no header row; missing columns: {missing}")

        column_index: dict[str, int] = {}
        seen = set()
        for index, name in enumerate(header):
            key = name.strip().casefold()
            if key not in seen:
                seen.add(key)
                column_index[key] = index
        missing_columns = [
            name for name in REQUIRED_COLUMNS if name.casefold() not in column_index
        ]
        if missing_columns:
            raise DatasetError(
                "header is missing required columns: " + ", ".join(missing_columns)
            )

        records: list[CareerRecord] = []
        warnings: list[tuple[int, str]] = []
        rejected = 0
        for row_number, row in enumerate(reader, start=2):
            record = _parse_row(row, row_number, column_index, warnings)
            if record is None:
                rejected += 1
            else:
                records.append(record)
        return Dataset(
            records=tuple(records),
            rejected_count=rejected,
            warnings=tuple(warnings),
        )
    finally:
        if owned:
            stream.close()


def _parse_row(
    row: list[str],
    row_number: int,
    column_index: dict[str, int],
    warnings: list[tuple[int, str]],
) -> CareerRecord | None:
    def cell(column: str) -> str:
        index = column_index[column.casefold()]
        return row[index].strip() if index < len(row) else ""

    work_position = cell("Work Position")
    if not work_position:
        warnings.append((row_number, "work position is empty; row rejected"))
        return None

    stages: dict[StageLevel, EducationStage | None] = {}
    for level in StageLevel:
        word = level.value
        stream_text = cell(f"{word} Stream")
        university = cell(f"{word} University")
        duration_text = cell(f"{word} Duration")
        if not stream_text:
            if university or duration_text:
                warnings.append(
                    (
                        row_number,
                        f"{word.lower()} university/duration ignored: stage has no stream",
                    )
                )
            stages[level] = None
            continue
        duration = None
        if duration_text:
            duration = _parse_duration(duration_text)
            if duration is None:
                warnings.append(
                    (
                        row_number,
                        f"{word.lower()} duration {duration_text!r} is not a number of years; dropped",
                    )
                )
        stages[level] = EducationStage(
            level=level,
            stream=stream_text,
            university=university or None,
            duration_years=duration,
        )

    return CareerRecord(
        id=str(row_number),
        work_position=work_position,
        bachelors=stages[StageLevel.BACHELORS],
        masters=stages[StageLevel.MASTERS],
        doctoral=stages[StageLevel.DOCTORAL],
        work_organization=cell("Work Organization") or None,
    )


def dump_dataset(dataset: Dataset, target: Union[str, Path, IO[str]]) -> None:
    """Write the dataset back out in the canonical eleven-column CSV format."""
    if isinstance(target, (str, Path)):
        with open(target, "w", newline="", encoding="utf-8") as stream:
            _write_rows(dataset, stream)
    else:
        _write_rows(dataset, target)


def _write_rows(dataset: Dataset, stream: IO[str]) -> None:
    writer = csv.writer(stream)
    writer.writerow(REQUIRED_COLUMNS)
    for record in dataset.records:
        cells: list[str] = []
        for level in StageLevel:
            stage = {
                StageLevel.BACHELORS: record.bachelors,
                StageLevel.MASTERS: record.masters,
                StageLevel.DOCTORAL: record.doctoral,
            }[level]
            if stage is None:
                cells.extend(["", "", ""])
            else:
                duration = "" if stage.duration_years is None else f"{stage.duration_years:g}"
                cells.extend([stage.stream, stage.university or "", duration])
        cells.append(record.work_position)
        cells.append(record.work_organization or "")
        writer.writerow(cells)


def stages_after(record: CareerRecord, education: Education) -> tuple[EducationStage, ...]:
    """Stages the person still has ahead of them, in career order.

    High-school holders see every present stage; bachelor's holders see only
    masters and doctoral stages. The work position is never included.
    """
    if education is Education.HIGH_SCHOOL:
        candidates = (record.bachelors, record.masters, record.doctoral)
    elif education is Education.BACHELORS:
        candidates = (record.masters, record.doctoral)
    else:
        allowed = ", ".join(member.value for member in Education)
        raise ValueError(f"education must be one of: {allowed}")
    return tuple(stage for stage in candidates if stage is not None)


def dataset_stats(dataset: Dataset) -> DatasetStats:
    """Exact counts of records, per-level stages, and distinct work positions."""
    return DatasetStats(
        records=len(dataset.records),
        bachelors=sum(1 for r in dataset.records if r.bachelors is not None),
        masters=sum(1 for r in dataset.records if r.masters is not None),
        doctoral=sum(1 for r in dataset.records if r.doctoral is not None),
        distinct_work_positions=len({r.work_position for r in dataset.records}),
    )


def iter_warnings(dataset: Dataset) -> Iterator[str]:
    """Warnings formatted as ``row N: message`` lines."""
    for row_number, message in dataset.warnings:
        yield f"row {row_number}: {message}"
