"""Results of rainbow scans and certificate verification."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import color_of
from rainbow.colorings.exceptions import ColoringError
from rainbow.verification.exceptions import WitnessError


class ScanMode(StrEnum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class RainbowWitness:
    """Host vertices of a rainbow copy and the colors on its pattern edges.

    For cliques ``vertices`` is ascending; for patterns it lists the image of
    pattern vertex 1, 2, ... in that order.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    @classmethod
    def build(
        cls,
        coloring: EdgeColoring,
        vertices: Iterable[int],
        pairs: Iterable[tuple[int, int]],
    ) -> RainbowWitness:
        vertices = tuple(vertices)
        edges = []
        for u, v in pairs:
            a, b = sorted((u, v))
            edges.append((a, b, color_of(coloring, a, b)))
        return cls(vertices=vertices, edges=tuple(edges))

    @classmethod
    def for_clique(
        cls,
        coloring: EdgeColoring,
        vertices: Iterable[int],
    ) -> RainbowWitness:
        vertices = tuple(sorted(vertices))
        return cls.build(coloring, vertices, combinations(vertices, 2))

    def validate(self, coloring: EdgeColoring) -> None:
        """Re-check against ``coloring``; raise :class:`WitnessError` on a mismatch."""
        members = set(self.vertices)
        if len(members) != len(self.vertices):
            msg = f"witness {self.vertices} repeats a vertex"
            raise WitnessError(msg)
        for u, v, c in self.edges:
            if u not in members or v not in members:
                msg = f"edge {{{u},{v}}} leaves the witness {self.vertices}"
                raise WitnessError(msg)
            try:
                actual = color_of(coloring, u, v)
            except ColoringError as exc:
                raise WitnessError(str(exc)) from exc
            if actual != c:
                msg = f"edge {{{u},{v}}} has color {actual}, witness says {c}"
                raise WitnessError(msg)
        colors = [c for _, _, c in self.edges]
        if len(set(colors)) != len(colors):
            msg = f"witness {self.vertices} repeats a color: {colors}"
            raise WitnessError(msg)

    def describe(self) -> str:
        vertices = ",".join(str(v) for v in self.vertices)
        edges = " ".join(f"{u}-{v}:{c}" for u, v, c in self.edges)
        return f"({vertices}) {edges}"


@dataclass(frozen=True)
class RainbowReport:
    """Verdict of a rainbow scan.

    ``subsets_examined`` counts subsets decided by the scan, directly or
    through a pruned prefix; a finished exhaustive clique scan decides all
    C(n, q) of them. ``subsets_completed`` counts complete subsets (or
    embeddings) whose last vertex was tested, ``pruned_prefixes`` the partial
    ones abandoned on a repeated color.
    """

    found: bool
    witness: RainbowWitness | None
    subsets_examined: int
    subsets_completed: int = 0
    pruned_prefixes: int = 0
    mode: ScanMode = ScanMode.EXHAUSTIVE
    sample_count: int | None = None
    seed: int | None = None
    decided_by_pigeonhole: bool = False

    def describe_mode(self) -> str:
        if self.mode == ScanMode.SAMPLED:
            return f"sampled({self.sample_count}, seed={self.seed})"
        return str(self.mode)


@dataclass(frozen=True)
class CertificateVerdict:
    balanced: bool
    uniform_t: int | None
    rainbow_free: bool
    clique_size: int
    report: RainbowReport
    unbalanced_vertices: tuple[int, ...] = ()

    @property
    def accepted(self) -> bool:
        return self.balanced and self.rainbow_free
