"""The order relations at full generality, poset construction, and exports.

Chain order: T is below S when every jeu-de-taquin projection of T has a
shape dominance-below the matching projection of S.

Duflo order: the relation induced on tableaux from the weak right order on
words through their cells.  The definition forces a closure step: the base
relation ("some word of the first cell is below some word of the second")
is not transitive, and from n = 6 on its closure is strictly larger, so a
poset is built by closing the base relation and verifying antisymmetry.

The base relation is computed from per-word reachability bitsets over the
cover graph of the weak order (an ascent swap adds exactly one inversion),
which the tests check against a direct word-pair scan at small n.
"""

from __future__ import annotations

import enum
import functools
import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .config import CHAIN_DEFAULT, DUFLO_CEILING, DUFLO_DEFAULT, check_limit
from .errors import InvalidTableauError, InvalidWordError
from .rsjdt import all_cells, jdt_remove
from .tableau import (
    ColumnShape,
    Tableau,
    dominance_leq,
    enumerate_tableaux,
    row_text,
)
from .words import Word


class Verdict(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


def verdict(leq_ab: bool, leq_ba: bool, identical: bool) -> Verdict:
    """Fold two boolean comparisons into a 4-way verdict."""
    if identical:
        return Verdict.EQUAL
    if leq_ab and leq_ba:
        raise RuntimeError("antisymmetry violation: distinct elements below each other")
    if leq_ab:
        return Verdict.LESS
    if leq_ba:
        return Verdict.GREATER
    return Verdict.INCOMPARABLE


def compare(t: Tableau, s: Tableau, leq: Callable[[Tableau, Tableau], bool]) -> Verdict:
    return verdict(leq(t, s), leq(s, t), t == s)


def _pop_max(cols: list[tuple[int, ...]]) -> None:
    # The largest entry of a tableau always sits at a corner, so removing it
    # never slides anything.
    best = max(range(len(cols)), key=lambda c: cols[c][-1])
    cols[best] = cols[best][:-1]
    if not cols[best]:
        cols.pop(best)


@functools.lru_cache(maxsize=None)
def chain_profile(t: Tableau) -> dict[tuple[int, int], ColumnShape]:
    """Shapes of all projections onto value windows i..j, 1 <= i < j <= n."""
    if not t.is_standard:
        raise InvalidTableauError("chain profiles are defined for standard tableaux")
    n = t.n
    diagrams: dict[tuple[int, int], ColumnShape] = {}
    lower = t
    for i in range(1, n):
        cols = list(lower.columns)
        for j in range(n, i, -1):
            diagrams[(i, j)] = tuple(len(c) for c in cols)
            _pop_max(cols)
        lower = jdt_remove(lower, [i])
    return diagrams


def chain_leq(t: Tableau, s: Tableau) -> bool:
    """Dominance of every projected shape of t by the matching shape of s."""
    if t.n != s.n:
        raise InvalidTableauError(f"size mismatch: {t.n} vs {s.n}")
    pt, ps = chain_profile(t), chain_profile(s)
    return all(dominance_leq(pt[key], ps[key]) for key in pt)


def root_position_set(w: Word) -> frozenset[tuple[int, int]]:
    """Pairs (i, j), i < j, with i placed before j; the complement of the
    inversion set.  Encodes which upper-triangular root spaces survive."""
    pos = w.positions
    return frozenset(
        (i, j)
        for j in range(2, w.n + 1)
        for i in range(1, j)
        if pos[i - 1] < pos[j - 1]
    )


def subspace_leq(w: Word, y: Word) -> bool:
    """Containment of generating subspaces; equivalent to the weak order."""
    if w.n != y.n:
        raise InvalidWordError(f"size mismatch: {w.n} vs {y.n}")
    return root_position_set(y) <= root_position_set(w)


def _check_partial_order(rows: Sequence[int]) -> None:
    m = len(rows)
    for i in range(m):
        if not rows[i] >> i & 1:
            raise InvalidTableauError(f"relation not reflexive at {i}")
    for i in range(m):
        for j in range(i + 1, m):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise InvalidTableauError(f"relation not antisymmetric at ({i}, {j})")
    for i in range(m):
        reach = rows[i]
        rest = reach
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if rows[k] & ~reach:
                raise InvalidTableauError(f"relation not transitive at ({i}, {k})")


def hasse_reduce(rows: Sequence[int]) -> list[tuple[int, int]]:
    """Transitive reduction of a finite partial order given as row bitmasks."""
    _check_partial_order(rows)
    edges: list[tuple[int, int]] = []
    for i, row in enumerate(rows):
        strict = row & ~(1 << i)
        covered = 0
        rest = strict
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            covered |= rows[k] & ~(1 << k)
        covers = strict & ~covered
        while covers:
            j = (covers & -covers).bit_length() - 1
            covers &= covers - 1
            edges.append((i, j))
    edges.sort()
    return edges


@dataclass(eq=False)
class TableauPoset:
    """A finite poset of same-size tableaux with its Hasse reduction.

    ``leq_rows[i]`` has bit j set when node i is below node j.  ``base_rows``
    keeps the pre-closure relation for the Duflo kind (None otherwise).
    """

    kind: str
    n: int
    nodes: tuple[Tableau, ...]
    leq_rows: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]
    base_rows: tuple[int, ...] | None = None
    _index: dict[Tableau, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {t: i for i, t in enumerate(self.nodes)}

    def index_of(self, t: Tableau) -> int:
        try:
            return self._index[t]
        except KeyError:
            raise InvalidTableauError(f"tableau not a node: {row_text(t)}") from None

    def leq(self, t: Tableau, s: Tableau) -> bool:
        return bool(self.leq_rows[self.index_of(t)] >> self.index_of(s) & 1)

    def cover_of(self, t: Tableau) -> list[Tableau]:
        i = self.index_of(t)
        return [self.nodes[b] for a, b in self.hasse if a == i]

    def restrict(self, predicate: Callable[[Tableau], bool]) -> "TableauPoset":
        """Sub-poset on the nodes satisfying ``predicate``; the Hasse
        diagram is recomputed from the restricted relation."""
        keep = [i for i, t in enumerate(self.nodes) if predicate(t)]
        rows = []
        for a in keep:
            bits = 0
            for new_b, b in enumerate(keep):
                if self.leq_rows[a] >> b & 1:
                    bits |= 1 << new_b
            rows.append(bits)
        return TableauPoset(
            kind=self.kind,
            n=self.n,
            nodes=tuple(self.nodes[i] for i in keep),
            leq_rows=tuple(rows),
            hasse=tuple(hasse_reduce(rows)),
        )


def cover_of(poset: TableauPoset, t: Tableau) -> list[Tableau]:
    return poset.cover_of(t)


def _inversion_count(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


def _word_reach_masks(n: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """Per-word reachability in the weak order, as bitmasks over the
    lexicographic word index.  Swapping an ascent adds one inversion, so
    processing words by decreasing inversion count closes the cover graph."""
    perms = list(itertools.permutations(range(1, n + 1)))
    index = {p: k for k, p in enumerate(perms)}
    reach = [0] * len(perms)
    order = sorted(range(len(perms)), key=lambda k: -_inversion_count(perms[k]))
    for k in order:
        p = perms[k]
        mask = 1 << k
        for a in range(n - 1):
            if p[a] < p[a + 1]:
                swapped = p[:a] + (p[a + 1], p[a]) + p[a + 2:]
                mask |= reach[index[swapped]]
        reach[k] = mask
    return perms, reach


def _closure(rows: list[int]) -> list[int]:
    rows = list(rows)
    for k in range(len(rows)):
        bit = 1 << k
        rk = rows[k]
        for i in range(len(rows)):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def duflo_poset(n: int, limit: int | None = None) -> TableauPoset:
    """The induced weak-order poset on all standard tableaux of size n."""
    check_limit(n, "Duflo poset", limit, DUFLO_DEFAULT, ceiling=DUFLO_CEILING)
    return _duflo_poset(n)


@functools.lru_cache(maxsize=None)
def _duflo_poset(n: int) -> TableauPoset:
    nodes = tuple(enumerate_tableaux(n, limit=max(n, DUFLO_CEILING)))
    node_index = {t: i for i, t in enumerate(nodes)}
    perms, reach = _word_reach_masks(n)

    cell_mask = [0] * len(nodes)
    reach_mask = [0] * len(nodes)
    cells = all_cells(n)
    word_index = {p: k for k, p in enumerate(perms)}
    for t, ws in cells.items():
        i = node_index[t]
        for w in ws:
            k = word_index[w.entries]
            cell_mask[i] |= 1 << k
            reach_mask[i] |= reach[k]

    base = []
    for i in range(len(nodes)):
        bits = 0
        for j in range(len(nodes)):
            if reach_mask[i] & cell_mask[j]:
                bits |= 1 << j
        base.append(bits)

    rows = _closure(base)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise RuntimeError(
                    "antisymmetry violation in the induced order "
                    f"({row_text(nodes[i])} / {row_text(nodes[j])})"
                )
    return TableauPoset(
        kind="duflo",
        n=n,
        nodes=nodes,
        leq_rows=tuple(rows),
        hasse=tuple(hasse_reduce(rows)),
        base_rows=tuple(base),
    )


def duflo_base_by_scan(n: int) -> tuple[int, ...]:
    """Direct word-pair scan for the base relation; the slow oracle used to
    check the reachability construction at small n."""
    nodes = tuple(enumerate_tableaux(n, limit=max(n, DUFLO_CEILING)))
    node_index = {t: i for i, t in enumerate(nodes)}
    cells = all_cells(n)
    rows = [0] * len(nodes)
    from .words import weak_leq

    for t, ws in cells.items():
        i = node_index[t]
        for s, ys in cells.items():
            j = node_index[s]
            if any(weak_leq(w, y) for w in ws for y in ys):
                rows[i] |= 1 << j
    return tuple(rows)


def chain_poset(n: int, limit: int | None = None) -> TableauPoset:
    """The chain-order poset on all standard tableaux of size n."""
    check_limit(n, "chain poset", limit, CHAIN_DEFAULT)
    return _chain_poset(n)


@functools.lru_cache(maxsize=None)
def _chain_poset(n: int) -> TableauPoset:
    nodes = tuple(enumerate_tableaux(n, limit=max(n, CHAIN_DEFAULT + 1)))
    profiles = [chain_profile(t) for t in nodes]
    keys = list(profiles[0]) if profiles else []
    rows = []
    for i, pi in enumerate(profiles):
        bits = 0
        for j, pj in enumerate(profiles):
            if all(dominance_leq(pi[key], pj[key]) for key in keys):
                bits |= 1 << j
        rows.append(bits)
    return TableauPoset(
        kind="chain",
        n=n,
        nodes=nodes,
        leq_rows=tuple(rows),
        hasse=tuple(hasse_reduce(rows)),
    )


def poset_to_json(poset: TableauPoset) -> str:
    """Byte-stable JSON export: {"n", "kind", "nodes", "hasse"}."""
    doc = {
        "n": poset.n,
        "kind": poset.kind,
        "nodes": [row_text(t) for t in poset.nodes],
        "hasse": [[a, b] for a, b in poset.hasse],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def poset_to_dot(poset: TableauPoset) -> str:
    """Byte-stable DOT export of the Hasse diagram."""
    lines = [f'digraph "{poset.kind}_n{poset.n}" {{', "  node [shape=box];"]
    for i, t in enumerate(poset.nodes):
        lines.append(f'  {i} [label="{row_text(t)}"];')
    for a, b in poset.hasse:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
