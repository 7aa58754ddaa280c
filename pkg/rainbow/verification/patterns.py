"""Small pattern graphs searched for as rainbow copies."""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from rainbow.verification.exceptions import PatternInvalid

_CLIQUE = re.compile(r"k(\d+)")
_CYCLE = re.compile(r"c(\d+)")
_COPIES = re.compile(r"(\d+)k(\d+)")
_EDGE = re.compile(r"(\d+)-(\d+)")


@dataclass(frozen=True)
class PatternGraph:
    """Simple graph on vertices 1..m in which every vertex has an edge."""

    m: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.edges:
            msg = "a pattern needs at least one edge"
            raise PatternInvalid(msg)
        seen: set[tuple[int, int]] = set()
        for a, b in self.edges:
            if a == b:
                msg = f"loop at pattern vertex {a}"
                raise PatternInvalid(msg)
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                msg = f"edge {a}-{b} leaves pattern vertices 1..{self.m}"
                raise PatternInvalid(msg)
            key = (min(a, b), max(a, b))
            if key in seen:
                msg = f"duplicate pattern edge {key[0]}-{key[1]}"
                raise PatternInvalid(msg)
            seen.add(key)
        covered = {v for edge in self.edges for v in edge}
        isolated = sorted(set(range(1, self.m + 1)) - covered)
        if isolated:
            msg = f"isolated pattern vertices: {isolated}"
            raise PatternInvalid(msg)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        *,
        m: int | None = None,
        name: str = "",
    ) -> PatternGraph:
        edges = tuple((int(a), int(b)) for a, b in edges)
        if m is None:
            m = max((max(edge) for edge in edges), default=0)
        normalized = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        if len(normalized) != len(set(normalized)):
            msg = "duplicate pattern edges"
            raise PatternInvalid(msg)
        return cls(m=m, edges=normalized, name=name or _edge_list(normalized))

    @classmethod
    def complete(cls, q: int) -> PatternGraph:
        if q < 2:  # noqa: PLR2004
            msg = f"K_{q} has no edges"
            raise PatternInvalid(msg)
        return cls.from_edges(combinations(range(1, q + 1), 2), m=q, name=f"K{q}")

    @classmethod
    def cycle(cls, m: int) -> PatternGraph:
        if m < 3:  # noqa: PLR2004
            msg = f"a cycle needs at least 3 vertices, got {m}"
            raise PatternInvalid(msg)
        edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
        return cls.from_edges(edges, m=m, name=f"C{m}")

    @classmethod
    def copies(cls, count: int, base: PatternGraph) -> PatternGraph:
        """Disjoint union of ``count`` copies of ``base``."""
        if count < 1:
            msg = f"need at least one copy, got {count}"
            raise PatternInvalid(msg)
        edges = [
            (a + i * base.m, b + i * base.m)
            for i in range(count)
            for a, b in base.edges
        ]
        return cls.from_edges(edges, m=count * base.m, name=f"{count}{base.name}")

    @classmethod
    def parse(cls, text: str) -> PatternGraph:
        """Read ``k<q>``, ``c<m>``, ``<a>k<b>`` or an edge list like ``"1-2,2-3"``."""
        spec = text.strip().lower()
        try:
            if match := _CLIQUE.fullmatch(spec):
                return cls.complete(int(match[1]))
            if match := _CYCLE.fullmatch(spec):
                return cls.cycle(int(match[1]))
            if match := _COPIES.fullmatch(spec):
                return cls.copies(int(match[1]), cls.complete(int(match[2])))
        except PatternInvalid as exc:
            msg = f"{text!r}: {exc}"
            raise PatternInvalid(msg) from exc

        tokens = [token for token in re.split(r"[\s,]+", spec) if token]
        edges = []
        for token in tokens:
            match = _EDGE.fullmatch(token)
            if match is None:
                msg = f"cannot read pattern {text!r}: bad edge {token!r}"
                raise PatternInvalid(msg)
            edges.append((int(match[1]), int(match[2])))
        return cls.from_edges(edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def earlier_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """For vertex i (0-based) the 0-based neighbors j < i."""
        before: list[list[int]] = [[] for _ in range(self.m)]
        for a, b in self.edges:
            before[b - 1].append(a - 1)
        return tuple(tuple(sorted(row)) for row in before)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph(name=self.name)
        graph.add_nodes_from(range(1, self.m + 1))
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def automorphism_count(self) -> int:
        graph = self.to_networkx()
        return sum(1 for _ in GraphMatcher(graph, graph).isomorphisms_iter())


def _edge_list(edges: Iterable[tuple[int, int]]) -> str:
    return ",".join(f"{a}-{b}" for a, b in edges)
