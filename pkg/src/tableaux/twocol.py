"""Fast machinery for tableaux with at most two columns (or two rows).

Repeatedly deleting the corner that holds the current maximum of a
two-column tableau emits one value per step; read in emission order these
values form the canonical word of the tableau.  The canonical word maps
back to the tableau under RS insertion and is the unique weak-order
maximum of its cell, which turns tableau comparison into a single word
comparison, with a membership criterion that avoids even that:

    T below S  iff  the second column of S is contained in the second
    column of T, and every second-column entry x of S pushes out (at the
    deletion step of x in S's trace) a value lying in T's first column.

On this family, the chain order and the induced weak order coincide, and
the cover of a tableau is given explicitly: move the top of a maximal run
of consecutive second-column entries into the first column, whenever the
trace snapshot at that entry agrees with the straight projection.

Two-row tableaux are handled through transposition, which reverses the
orders, so the comparison swaps its arguments.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidTableauError
from .rsjdt import delete_corner, insert, project_tableau
from .tableau import (
    Tableau,
    map_entries,
    relabel_tableau,
    row_text,
)
from .words import Word, reverse, weak_leq


class TraceStep(NamedTuple):
    index: int    # step number, from n down to 1
    largest: int  # maximum entry of the snapshot at this step
    emitted: int  # value pushed out by deleting its corner


@dataclass(frozen=True)
class DeletionTrace:
    """Full record of the maximal-entry deletion sequence of a tableau.

    ``snapshots[i]`` is the i-box tableau seen before step i runs;
    ``snapshots[n]`` is the input.  ``second_column[x]`` holds, for each
    second-column entry x of the input, the snapshot in which x is the
    maximum and still sits in column 2, together with the first-column
    value its deletion pushes out.
    """

    steps: tuple[TraceStep, ...]
    snapshots: dict[int, Tableau]
    second_column: dict[int, tuple[Tableau, int]]


class CanonicalWord(NamedTuple):
    word: Word
    trace: DeletionTrace


def _require_two_columns(t: Tableau) -> None:
    if len(t.columns) > 2:
        raise InvalidTableauError(
            f"more than two columns: shape {t.shape}"
        )
    if not t.is_standard:
        raise InvalidTableauError("two-column machinery needs standard tableaux")


def _require_two_rows(t: Tableau) -> None:
    if t.columns and len(t.columns[0]) > 2:
        raise InvalidTableauError(f"more than two rows: shape {t.shape}")
    if not t.is_standard:
        raise InvalidTableauError("two-row machinery needs standard tableaux")


@functools.lru_cache(maxsize=None)
def canonical_word(t: Tableau) -> CanonicalWord:
    """The canonical cell representative of a two-column tableau, with its
    deletion trace.  RS insertion of the word reproduces the tableau."""
    _require_two_columns(t)
    n = t.n
    snapshots: dict[int, Tableau] = {n: t}
    steps: list[TraceStep] = []
    second: dict[int, tuple[Tableau, int]] = {}
    current = t
    emitted: list[int] = []
    for i in range(n, 0, -1):
        z = max(current.bottom(c) for c in range(1, len(current.columns) + 1))
        col = current.col_of(z)
        smaller, a = delete_corner(current, col)
        if col == 2:
            second[z] = (current, a)
        steps.append(TraceStep(index=i, largest=z, emitted=a))
        emitted.append(a)
        if i > 1:
            snapshots[i - 1] = smaller
        current = smaller
    word = Word(emitted, check=False)
    return CanonicalWord(word=word, trace=DeletionTrace(
        steps=tuple(steps), snapshots=snapshots, second_column=second,
    ))


def fast_leq_words(t: Tableau, s: Tableau) -> bool:
    """Comparison through canonical words; decides both the chain order and
    the induced weak order on the two-column family."""
    if t.n != s.n:
        raise InvalidTableauError(f"size mismatch: {t.n} vs {s.n}")
    return weak_leq(canonical_word(t).word, canonical_word(s).word)


def fast_leq_criterion(t: Tableau, s: Tableau) -> bool:
    """Membership criterion equivalent to ``fast_leq_words`` but needing
    only s's deletion trace and t's column sets."""
    if t.n != s.n:
        raise InvalidTableauError(f"size mismatch: {t.n} vs {s.n}")
    _require_two_columns(t)
    s_trace = canonical_word(s).trace
    t2 = set(t.column(2))
    if not set(s.column(2)) <= t2:
        return False
    t1 = set(t.column(1))
    return all(pushed in t1 for _, pushed in s_trace.second_column.values())


def fast_leq(t: Tableau, s: Tableau) -> bool:
    """Comparison entry point: the criterion, cross-checked against the
    word comparison when assertions are enabled."""
    result = fast_leq_criterion(t, s)
    assert result == fast_leq_words(t, s), (row_text(t), row_text(s))
    return result


def runs(t: Tableau) -> list[tuple[int, int]]:
    """Maximal consecutive runs of the second column's entries, ascending,
    as (start, extra) pairs covering {start, ..., start + extra}."""
    _require_two_columns(t)
    out: list[tuple[int, int]] = []
    for x in t.column(2):
        if out and out[-1][0] + out[-1][1] + 1 == x:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((x, 0))
    return out


def move_to_first_column(t: Tableau, x: int) -> Tableau:
    """Move the second-column entry x into the first column at its ordered
    position; always yields a tableau."""
    _require_two_columns(t)
    col2 = t.column(2)
    if x not in col2:
        raise InvalidTableauError(f"entry {x} not in the second column")
    col1 = tuple(sorted(t.column(1) + (x,)))
    rest = tuple(v for v in col2 if v != x)
    return Tableau((col1, rest) if rest else (col1,))


def cover(t: Tableau) -> list[Tableau]:
    """Immediate successors in the (coincident) order on the two-column
    family, by the explicit run-top description."""
    _require_two_columns(t)
    trace = canonical_word(t).trace
    out = []
    for start, extra in runs(t):
        x = start + extra
        snapshot, _ = trace.second_column[x]
        if project_tableau(t, 1, x) == snapshot:
            out.append(move_to_first_column(t, x))
    return sorted(out, key=row_text)


def cover_recursive(t: Tableau) -> list[Tableau]:
    """The same cover by the recursive description; kept as an independent
    implementation for cross-checking."""
    _require_two_columns(t)
    return sorted(_cover_rec(t), key=row_text)


def _cover_rec(t: Tableau) -> set[Tableau]:
    n = t.n
    if n <= 1:
        return set()
    if t.col_of(n) == 1:
        # n sits at the bottom of column 1, so restriction just drops it.
        inner = Tableau((t.column(1)[:-1], t.column(2)), check=False)
        return {insert(n, s) for s in _cover_rec(inner)}
    omega1 = t.bottom(1)
    core = Tableau(
        (t.column(1)[:-1], tuple(v for v in t.column(2) if v != n)),
        check=False,
    )
    alphabet = sorted(core.entry_set())
    back = {k: v for k, v in enumerate(alphabet, start=1)}
    found = {
        insert(omega1, insert(n, map_entries(s, back)))
        for s in _cover_rec(relabel_tableau(core))
    }
    found.add(move_to_first_column(t, n))
    return found


def two_row_canonical_word(s: Tableau) -> Word:
    """Canonical word of a two-row tableau: the reverse of the transposed
    tableau's canonical word.  RS insertion reproduces the tableau."""
    _require_two_rows(s)
    return reverse(canonical_word(s.transpose()).word)


def two_row_leq(t: Tableau, s: Tableau) -> bool:
    """Order on two-row tableaux; transposition reverses the comparison."""
    _require_two_rows(t)
    _require_two_rows(s)
    if t.n != s.n:
        raise InvalidTableauError(f"size mismatch: {t.n} vs {s.n}")
    return fast_leq_words(s.transpose(), t.transpose())
