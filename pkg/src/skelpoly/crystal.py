"""Type-A crystal operators on SSYT, bounded crystal graphs, and evacuation.

The operators act through the row word (rows read bottom to top, left to
right) by the signature rule: for color i, occurrences of i+1 open a bracket
and occurrences of i close one.  The lowering operator f_i turns the
rightmost unmatched i into i+1; the raising operator e_i turns the leftmost
unmatched i+1 into i.  Vertices standardizing to the same SYT form a
quasi-crystal; the common standardizations make up the crystal skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Composition, Partition
from .rsk import rsk
from .tableaux import (
    Tableau,
    descent_composition,
    semistandard_tableaux,
    standardize,
    weight,
)


def row_word(t: Tableau) -> tuple[int, ...]:
    """Rows concatenated from the bottom row up."""
    if not t.rows:
        raise ValueError("empty tableau has no row word")
    return tuple(value for row in reversed(t.rows) for value in row)


def _word_cells(t: Tableau) -> list[tuple[int, int]]:
    return [(r, c) for r in range(len(t.rows) - 1, -1, -1) for c in range(len(t.rows[r]))]


def _unmatched(word: tuple[int, ...], color: int) -> tuple[list[int], list[int]]:
    """Word positions of the unmatched letters color and color+1."""
    open_stack: list[int] = []
    low: list[int] = []
    for idx, letter in enumerate(word):
        if letter == color + 1:
            open_stack.append(idx)
        elif letter == color:
            if open_stack:
                open_stack.pop()
            else:
                low.append(idx)
    return low, open_stack


def _replace(t: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    rows = [list(row) for row in t.rows]
    rows[cell[0]][cell[1]] = value
    return Tableau.of(rows)


def lowering_operator(t: Tableau, color: int) -> Tableau | None:
    """f_i: change the rightmost unmatched i to i+1, or None if none exists."""
    if color < 1:
        raise ValueError(f"color must be >= 1, got {color}")
    if not t.rows:
        return None
    low, _ = _unmatched(row_word(t), color)
    if not low:
        return None
    return _replace(t, _word_cells(t)[low[-1]], color + 1)


def raising_operator(t: Tableau, color: int) -> Tableau | None:
    """e_i: change the leftmost unmatched i+1 to i, or None if none exists."""
    if color < 1:
        raise ValueError(f"color must be >= 1, got {color}")
    if not t.rows:
        return None
    _, high = _unmatched(row_word(t), color)
    if not high:
        return None
    return _replace(t, _word_cells(t)[high[0]], color)


@dataclass(frozen=True)
class CrystalGraph:
    """All SSYT of one shape with bounded entries, with colored f-edges."""

    shape: Partition
    bound: int
    vertices: tuple[Tableau, ...]
    edges: tuple[tuple[int, int, int], ...]  # (from, color, to)


def build_crystal(shape: Partition, bound: int) -> CrystalGraph:
    """The crystal on SSYT of `shape` with entries <= `bound`.

    Empty when the bound is below the number of rows.
    """
    vertices = tuple(semistandard_tableaux(shape, bound))
    index = {t: i for i, t in enumerate(vertices)}
    edges = []
    for i, t in enumerate(vertices):
        for color in range(1, bound):
            image = lowering_operator(t, color)
            if image is not None:
                edges.append((i, color, index[image]))
    return CrystalGraph(tuple(shape), bound, vertices, tuple(sorted(edges)))


@dataclass(frozen=True)
class QuasiCrystal:
    """A class of vertices sharing one standardization."""

    representative: Tableau
    members: tuple[Tableau, ...]
    descent: Composition


def quasi_crystals(graph: CrystalGraph) -> tuple[QuasiCrystal, ...]:
    """Partition of the vertices by standardization, sorted by representative row word."""
    groups: dict[Tableau, list[Tableau]] = {}
    for t in graph.vertices:
        groups.setdefault(standardize(t), []).append(t)
    classes = [
        QuasiCrystal(rep, tuple(members), descent_composition(rep))
        for rep, members in groups.items()
    ]
    classes.sort(key=lambda qc: row_word(qc.representative))
    return tuple(classes)


def fundamental_system(graph: CrystalGraph, alpha: Composition) -> tuple[QuasiCrystal, ...]:
    """All quasi-crystals with the given descent composition."""
    alpha = tuple(alpha)
    return tuple(qc for qc in quasi_crystals(graph) if qc.descent == alpha)


def inner_crystal(graph: CrystalGraph) -> tuple[Tableau, ...]:
    """Skeleton representatives whose descent composition is as short as possible.

    With the entry bound at least the maximal descent length, there are as
    many of these as SSYT with entries bounded by the number of rows.
    """
    ell = len(graph.shape)
    return tuple(
        qc.representative for qc in quasi_crystals(graph) if len(qc.descent) == ell
    )


def evacuation(t: Tableau) -> Tableau:
    """Reverse-complement the row word and reinsert.

    With n the number of boxes, the word w maps to
    (n+1-w_n, ..., n+1-w_1); the result is the insertion tableau of that
    word.  Requires entries at most n so the complement stays positive.
    """
    n = t.size
    if n == 0:
        return t
    if t.max_entry > n:
        raise ValueError(f"entries must be at most the box count {n}: {t.rows}")
    word = row_word(t)
    complemented = tuple(n + 1 - x for x in reversed(word))
    p, _ = rsk(complemented)
    return p


def _word_label(t: Tableau) -> str:
    word = row_word(t)
    if all(x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return "-".join(str(x) for x in word)


def _comp_label(alpha: Composition) -> str:
    if all(part <= 9 for part in alpha):
        return "".join(str(part) for part in alpha)
    return ",".join(str(part) for part in alpha)


def to_dot(graph: CrystalGraph, inner_only: bool = False) -> str:
    """Graphviz source: quasi-crystal clusters with colored crystal edges.

    Edges inside one cluster are solid; edges joining distinct clusters are
    dotted.  With `inner_only`, only the minimal-descent-length clusters and
    the edges between their members are rendered.
    """
    classes = quasi_crystals(graph)
    if inner_only:
        ell = len(graph.shape)
        classes = tuple(qc for qc in classes if len(qc.descent) == ell)
    vertex_index = {t: i for i, t in enumerate(graph.vertices)}
    cluster_of = {}
    for k, qc in enumerate(classes):
        for t in qc.members:
            cluster_of[vertex_index[t]] = k

    lines = ["digraph crystal {", "  node [shape=box];"]
    for k, qc in enumerate(classes):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="des {_comp_label(qc.descent)}";')
        for t in sorted(qc.members, key=lambda u: vertex_index[u]):
            i = vertex_index[t]
            lines.append(f'    v{i} [label="{_word_label(t)}"];')
        lines.append("  }")
    for u, color, v in graph.edges:
        if u not in cluster_of or v not in cluster_of:
            continue
        style = "" if cluster_of[u] == cluster_of[v] else ", style=dotted"
        lines.append(f'  v{u} -> v{v} [label="{color}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(graph: CrystalGraph, inner_only: bool = False) -> dict:
    """JSON-ready dict mirroring the graph fields plus the class partition."""
    classes = quasi_crystals(graph)
    if inner_only:
        ell = len(graph.shape)
        classes = tuple(qc for qc in classes if len(qc.descent) == ell)
    vertex_index = {t: i for i, t in enumerate(graph.vertices)}
    return {
        "shape": list(graph.shape),
        "bound": graph.bound,
        "vertices": [t.to_json() for t in graph.vertices],
        "weights": [list(weight(t)) for t in graph.vertices],
        "edges": [[u, color, v] for u, color, v in graph.edges],
        "classes": [
            {
                "representative": qc.representative.to_json(),
                "descent": list(qc.descent),
                "members": [vertex_index[t] for t in qc.members],
            }
            for qc in classes
        ],
    }
