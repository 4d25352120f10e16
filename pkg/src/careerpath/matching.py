"""Gestalt string similarity: simple ratio and best-window partial ratio.

Scores are percentages in [0, 100]. The simple ratio between two strings is
200 * M / T, where M is the number of matched characters found by recursive
longest-common-block decomposition and T is the sum of both lengths. The
partial ratio slides the shorter string over the longer one and keeps the
best simple ratio among all equal-length windows.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "MatchComputation",
    "WindowAlignment",
    "best_window_alignment",
    "longest_common_block",
    "match_count",
    "normalize",
    "partial_ratio",
    "simple_ratio",
]


def normalize(raw: str) -> str:
    """Lowercase ``raw``, trim it, and collapse whitespace runs to one space.

    Idempotent; the empty string maps to itself.
    """
    return " ".join(raw.casefold().split())


def longest_common_block(a: str, b: str) -> tuple[int, int, int]:
    """Find the longest contiguous substring common to ``a`` and ``b``.

    Returns ``(start_a, start_b, length)``. Ties on length go to the smallest
    start in ``a``, then the smallest start in ``b``. A zero length means the
    strings share no character.
    """
    positions: dict[str, list[int]] = {}
    for j, ch in enumerate(b):
        positions.setdefault(ch, []).append(j)

    best_a = best_b = best_len = 0
    # run_lengths[j] = length of the common block ending at a[i-1], b[j]
    run_lengths: dict[int, int] = {}
    for i, ch in enumerate(a):
        new_runs: dict[int, int] = {}
        for j in positions.get(ch, ()):
            length = run_lengths.get(j - 1, 0) + 1
            new_runs[j] = length
            # Strict > keeps the earliest-starting block among equals: a
            # block of maximal length ends (and is recorded) earliest when
            # it starts earliest in a, then in b.
            if length > best_len:
                best_a, best_b, best_len = i - length + 1, j - length + 1, length
        run_lengths = new_runs
    return best_a, best_b, best_len


@dataclass(frozen=True)
class MatchComputation:
    """The (matched, total) character counts behind one similarity score."""

    m_count: int
    t_total: int


def match_count(a: str, b: str) -> MatchComputation:
    """Count characters matched by recursive longest-common-block splitting.

    The longest common block is found first; the regions to its left in both
    strings and the regions to its right are then matched independently, and
    all block lengths are summed. The pair is put in a canonical order before
    matching so the count does not depend on argument order (the block
    tie-break alone would).
    """
    first, second = sorted((a, b))
    total = 0
    pending = [(first, second)]
    while pending:
        x, y = pending.pop()
        start_x, start_y, length = longest_common_block(x, y)
        if length == 0:
            continue
        total += length
        pending.append((x[:start_x], y[:start_y]))
        pending.append((x[start_x + length :], y[start_y + length :]))
    return MatchComputation(m_count=total, t_total=len(a) + len(b))


def simple_ratio(a: str, b: str) -> float:
    """Similarity percentage 200 * M / T between two strings.

    100.0 for identical strings (including two empty ones), 0.0 when they
    share no character or exactly one of them is empty.
    """
    if not a and not b:
        return 100.0
    if not a or not b:
        return 0.0
    counts = match_count(a, b)
    return 200.0 * counts.m_count / counts.t_total


@dataclass(frozen=True)
class WindowAlignment:
    """Best placement of the shorter string over the longer one."""

    shorter_len: int
    longer_len: int
    best_offset: int
    best_score: float


def best_window_alignment(a: str, b: str) -> WindowAlignment:
    """Score every equal-length window of the longer string against the shorter.

    Both strings must be non-empty. Among windows with equal scores the
    smallest offset wins.
    """
    if not a or not b:
        raise ValueError("window alignment requires two non-empty strings")
    shorter, longer = (a, b) if len(a) <= len(b) else (b, a)
    best_offset = 0
    best_score = 0.0
    for offset in range(len(longer) - len(shorter) + 1):
        window = longer[offset : offset + len(shorter)]
        score = simple_ratio(shorter, window)
        if score > best_score:
            best_offset, best_score = offset, score
    return WindowAlignment(
        shorter_len=len(shorter),
        longer_len=len(longer),
        best_offset=best_offset,
        best_score=best_score,
    )


def partial_ratio(a: str, b: str) -> float:
    """Best simple ratio between the shorter string and any window of the longer.

    Equal-length inputs reduce to ``simple_ratio``; 100.0 when the shorter
    string occurs contiguously in the longer one; 0.0 when exactly one input
    is empty; 100.0 when both are.
    """
    if not a or not b:
        return simple_ratio(a, b)
    return best_window_alignment(a, b).best_score
