"""Exhaustive enumeration of everything reachable by Kohnert moves.

The moves generate a finite DAG: each move strictly lowers the sum of cell
rows, and all diagrams share the start's column weights, so only finitely
many diagrams are reachable. Enumeration is the ground truth the closed-form
counts are verified against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .diagram import Chain, Diagram, apply_chain, empty_positions, kohnert_move


class LimitExceeded(RuntimeError):
    """Enumeration would grow past the configured node cap."""

    def __init__(self, limit: int):
        super().__init__(f"poset enumeration exceeded {limit} nodes")
        self.limit = limit


@dataclass(frozen=True)
class PosetGraph:
    """Reachability graph of a diagram under single nontrivial moves.

    nodes[0] is the start; nodes appear in BFS discovery order, expanding
    move rows in ascending order, so indices are deterministic. Each edge
    (parent, child, row) records one nontrivial move; parallel edges between
    the same pair collapse to the smallest row. minimal holds the indices of
    nodes admitting no nontrivial move.
    """

    nodes: tuple[Diagram, ...]
    edges: tuple[tuple[int, int, int], ...]
    minimal: frozenset[int]

    @property
    def root(self) -> Diagram:
        return self.nodes[0]

    @cached_property
    def children(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """children[i] lists (child index, move row) pairs in edge order."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for parent, child, row in self.edges:
            out[parent].append((child, row))
        return tuple(tuple(lst) for lst in out)


def enumerate_poset(diagram: Diagram, node_limit: int = 1_000_000) -> PosetGraph:
    """Breadth-first enumeration of all diagrams reachable from the start.

    Raises LimitExceeded as soon as the node count would pass node_limit;
    partial results are never returned.
    """
    if node_limit < 1:
        raise LimitExceeded(node_limit)
    index = {diagram: 0}
    nodes = [diagram]
    edges: list[tuple[int, int, int]] = []
    minimal = []
    queue = deque([0])
    while queue:
        parent = queue.popleft()
        d = nodes[parent]
        seen_children = set()
        for row in range(1, d.max_row + 1):
            child, record = kohnert_move(d, row)
            if record.trivial:
                continue
            child_index = index.get(child)
            if child_index is None:
                if len(nodes) >= node_limit:
                    raise LimitExceeded(node_limit)
                child_index = len(nodes)
                index[child] = child_index
                nodes.append(child)
                queue.append(child_index)
            if child_index not in seen_children:
                seen_children.add(child_index)
                edges.append((parent, child_index, row))
        if not seen_children:
            minimal.append(parent)
    return PosetGraph(tuple(nodes), tuple(edges), frozenset(minimal))


def longest_chain(graph: PosetGraph) -> tuple[int, Chain]:
    """A longest chain of moves from the root, with its length.

    Node indices are processed in an order compatible with the DAG (moves
    strictly decrease the sum of cell rows; BFS discovery order does not
    sort by that). Ties prefer smaller node indices, keeping the witness
    deterministic.
    """
    order = sorted(range(len(graph.nodes)), key=lambda i: (-graph.nodes[i].row_sum, i))
    dist = [-1] * len(graph.nodes)
    back: list[tuple[int, int] | None] = [None] * len(graph.nodes)
    dist[0] = 0
    for i in order:
        if dist[i] < 0:
            continue
        for child, row in graph.children[i]:
            if dist[i] + 1 > dist[child]:
                dist[child] = dist[i] + 1
                back[child] = (i, row)
    best = max(range(len(graph.nodes)), key=lambda i: (dist[i], -i))
    return dist[best], _walk_back(graph, back, best)


def shortest_to_minimal(graph: PosetGraph) -> tuple[int, Chain]:
    """A shortest chain from the root to any minimal node, with its length.

    BFS distances; among minimal nodes at the least distance the smallest
    index wins.
    """
    dist = {0: 0}
    back: dict[int, tuple[int, int]] = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for child, row in graph.children[i]:
            if child not in dist:
                dist[child] = dist[i] + 1
                back[child] = (i, row)
                queue.append(child)
    best = min(graph.minimal, key=lambda i: (dist[i], i))
    walk = _walk_back(graph, [back.get(i) for i in range(len(graph.nodes))], best)
    return dist[best], walk


def _walk_back(graph: PosetGraph, back: list[tuple[int, int] | None], end: int) -> Chain:
    rows = []
    node = end
    while node != 0:
        parent, row = back[node]
        rows.append(row)
        node = parent
    rows.reverse()
    chain = apply_chain(graph.root, rows)
    assert chain.end == graph.nodes[end]
    return chain


def max_empty_over_minimal(graph: PosetGraph) -> int:
    """Largest empty-position count among the minimal nodes."""
    return max(len(empty_positions(graph.nodes[i])) for i in graph.minimal)


def export_dot(graph: PosetGraph) -> str:
    """Graphviz source: byte-deterministic given the graph.

    Nodes are named d<index> and labeled with their ASCII grids (newlines
    escaped); minimal nodes get a double border; edges carry the move row.
    """
    from .diagram import render_grid

    lines = ["digraph kohnert {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    for i, node in enumerate(graph.nodes):
        grid = render_grid(node) or "(empty)"
        label = grid.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        extra = ", peripheries=2" if i in graph.minimal else ""
        lines.append(f'  d{i} [label="{label}"{extra}];')
    for parent, child, row in graph.edges:
        lines.append(f'  d{parent} -> d{child} [label="{row}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
