# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import gzip
import hashlib
import os
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

import numpy as np
from scipy import sparse

from .errors import EdgeListParseError, GraphError
from .models import LoadStats

NODE_LABELS_DIRECTIVE = "node-labels:"


class Graph:
    """Immutable undirected simple graph over dense ids ``0..N-1``.

    ``labels[i]`` is the original dataset identifier of internal node ``i``.
    Edges are stored once as ``(u, v)`` with ``u < v`` in lexicographic order,
    and the adjacency is kept in CSR form with sorted neighbor lists.
    """

    def __init__(self, labels: Sequence[int], edges: Iterable[Sequence[int]] = ()) -> None:
        labels = tuple(int(label) for label in labels)
        if len(set(labels)) != len(labels):
            raise GraphError("Node labels must be unique")
        edge_array = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        edge_array = edge_array.reshape(-1, 2)
        if edge_array.size and (edge_array.min() < 0 or edge_array.max() >= len(labels)):
            raise GraphError("Edge endpoint outside the node range")
        self._init(labels, _canonical_edges(edge_array))

    @classmethod
    def _from_canonical(cls, labels: Tuple[int, ...], edges: np.ndarray) -> "Graph":
        graph = cls.__new__(cls)
        graph._init(labels, edges)
        return graph

    def _init(self, labels: Tuple[int, ...], edges: np.ndarray) -> None:
        node_count = len(labels)
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((cols, rows))
        indices = cols[order]
        counts = np.bincount(rows, minlength=node_count) if node_count else np.zeros(0, dtype=np.int64)
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        for array in (edges, indices, indptr):
            array.setflags(write=False)
        self._labels = labels
        self._edges = edges
        self._indices = indices
        self._indptr = indptr

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return int(self._edges.shape[0])

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @cached_property
    def degrees(self) -> np.ndarray:
        degrees = np.diff(self._indptr)
        degrees.setflags(write=False)
        return degrees

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Plain Python neighbor tuples for the interpreter-bound kernels."""
        flat = self._indices.tolist()
        bounds = self._indptr.tolist()
        return tuple(tuple(flat[bounds[v]:bounds[v + 1]]) for v in range(self.node_count))

    @cached_property
    def digest(self) -> str:
        """SHA-256 over labels and canonical edges; equal graphs share it."""
        content = hashlib.sha256()
        content.update(np.asarray(self._labels, dtype=np.int64).tobytes())
        content.update(np.ascontiguousarray(self._edges, dtype=np.int64).tobytes())
        return content.hexdigest()

    @cached_property
    def csr(self) -> sparse.csr_matrix:
        data = np.ones(self._indices.shape[0], dtype=np.float64)
        return sparse.csr_matrix(
            (data, self._indices, self._indptr),
            shape=(self.node_count, self.node_count),
        )

    def neighbors(self, node: int) -> np.ndarray:
        self._check_node(node)
        return self._indices[self._indptr[node]:self._indptr[node + 1]]

    def degree(self, node: int) -> int:
        self._check_node(node)
        return int(self._indptr[node + 1] - self._indptr[node])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        self._check_node(v)
        position = int(np.searchsorted(row, v))
        return position < row.shape[0] and int(row[position]) == v

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    def labeled_edges(self) -> List[Tuple[int, int]]:
        labels = self._labels
        pairs = []
        for u, v in self._edges.tolist():
            a, b = labels[u], labels[v]
            pairs.append((a, b) if a < b else (b, a))
        pairs.sort()
        return pairs

    def _check_node(self, node: int) -> None:
        if not 0 <= int(node) < self.node_count:
            raise GraphError(f"Unknown node id {node} (graph has {self.node_count} nodes)")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self._edges, other._edges)

    __hash__ = None  # type: ignore[assignment]

    def __reduce__(self):
        # derived views are rebuilt lazily on the receiving side
        return (Graph._from_canonical, (self._labels, np.array(self._edges)))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def _canonical_edges(edges: np.ndarray) -> np.ndarray:
    if edges.shape[0] == 0:
        return np.zeros((0, 2), dtype=np.int64)
    low = np.minimum(edges[:, 0], edges[:, 1])
    high = np.maximum(edges[:, 0], edges[:, 1])
    keep = low != high
    pairs = np.stack([low[keep], high[keep]], axis=1)
    if pairs.shape[0] == 0:
        return np.zeros((0, 2), dtype=np.int64)
    return np.unique(pairs, axis=0).astype(np.int64)


def read_edge_list(stream: Iterable[str]) -> Tuple[Graph, LoadStats]:
    index: Dict[int, int] = {}
    seen: set[Tuple[int, int]] = set()
    edges: List[Tuple[int, int]] = []
    duplicates = 0
    self_loops = 0

    def node_id(label: int) -> int:
        node = index.get(label)
        if node is None:
            node = len(index)
            index[label] = node
        return node

    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith(NODE_LABELS_DIRECTIVE):
                for token in body[len(NODE_LABELS_DIRECTIVE):].split():
                    node_id(_parse_label(token, line_number))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two integer node labels, got {len(tokens)} tokens",
                line_number,
            )
        u = node_id(_parse_label(tokens[0], line_number))
        v = node_id(_parse_label(tokens[1], line_number))
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)

    if not edges and not index:
        raise EdgeListParseError("no edges")
    labels = tuple(index)
    graph = Graph(labels, np.asarray(edges, dtype=np.int64).reshape(-1, 2))
    stats = LoadStats(
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        duplicates_dropped=duplicates,
        self_loops_dropped=self_loops,
    )
    return graph, stats


def parse_edge_list(stream: Iterable[str]) -> Graph:
    graph, _ = read_edge_list(stream)
    return graph


def load_edge_list(path: str) -> Tuple[Graph, LoadStats]:
    try:
        if str(path).endswith(".gz"):
            with gzip.open(path, "rt", encoding="ascii") as handle:
                return read_edge_list(handle)
        with open(path, "r", encoding="ascii") as handle:
            return read_edge_list(handle)
    except UnicodeDecodeError as exc:
        raise EdgeListParseError(f"{path} is not an ASCII edge list: {exc.reason}") from None


def _parse_label(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise EdgeListParseError(f"node label {token!r} is not a non-negative integer", line_number)
    return int(token)


def write_edge_list(graph: Graph, stream: TextIO, *, comment: Optional[str] = None) -> None:
    stream.write("# Undirected graph\n")
    if comment:
        for line in comment.splitlines():
            stream.write(f"# {line}\n")
    stream.write(f"# Nodes: {graph.node_count} Edges: {graph.edge_count}\n")
    stream.write(f"# {NODE_LABELS_DIRECTIVE} {' '.join(str(label) for label in graph.labels)}\n")
    for u, v in graph.labeled_edges():
        stream.write(f"{u} {v}\n")


def save_edge_list(graph: Graph, path: str, *, comment: Optional[str] = None) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="ascii") as handle:
        write_edge_list(graph, handle, comment=comment)


def _node_mask(graph: Graph, keep: Iterable[int]) -> np.ndarray:
    ids = np.asarray(sorted({int(node) for node in keep}), dtype=np.int64)
    if ids.size and (ids[0] < 0 or ids[-1] >= graph.node_count):
        bad = ids[0] if ids[0] < 0 else ids[-1]
        raise GraphError(f"Unknown node id {bad} (graph has {graph.node_count} nodes)")
    mask = np.zeros(graph.node_count, dtype=bool)
    mask[ids] = True
    return mask


def _restrict(graph: Graph, mask: np.ndarray, edges: np.ndarray) -> Graph:
    # Kept ids are renumbered in ascending order, which keeps edges canonical.
    new_ids = np.cumsum(mask) - 1
    kept = np.flatnonzero(mask).tolist()
    labels = tuple(graph.labels[node] for node in kept)
    remapped = new_ids[edges] if edges.shape[0] else np.zeros((0, 2), dtype=np.int64)
    return Graph._from_canonical(labels, np.ascontiguousarray(remapped, dtype=np.int64))


def induced_subgraph(graph: Graph, keep: Iterable[int]) -> Graph:
    mask = _node_mask(graph, keep)
    edges = graph.edges
    inside = mask[edges[:, 0]] & mask[edges[:, 1]] if edges.shape[0] else np.zeros(0, dtype=bool)
    return _restrict(graph, mask, edges[inside])


def edge_subgraph(graph: Graph, edge_ids: Iterable[int]) -> Graph:
    """Graph made of the chosen edges and exactly their endpoints."""
    chosen = np.unique(np.asarray(list(edge_ids), dtype=np.int64))
    if chosen.size and (chosen[0] < 0 or chosen[-1] >= graph.edge_count):
        raise GraphError(f"Edge index out of range (graph has {graph.edge_count} edges)")
    edges = graph.edges[chosen]
    mask = np.zeros(graph.node_count, dtype=bool)
    mask[edges.reshape(-1)] = True
    return _restrict(graph, mask, edges)
