"""The intersection lattice of a permutation's inversion arrangement.

For the symmetric group the lattice is the bond lattice of the inversion
graph: elements are set partitions of {1, ..., n} whose blocks are connected
in the graph, ordered by refinement.  An ordering H_1 > H_2 > ... > H_k of
the hyperplanes, read off a reduced expression, induces the edge labelling
whose strictly decreasing chains from the bottom count the regions of the
arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from invlat.permutation import (
    Permutation,
    Transposition,
    evaluate_word,
    reduced_expression,
    reflection_sequence,
)


class SetPartition:
    """A partition of {1, ..., n} with canonically ordered blocks."""

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks):
        self.n = n
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen = [v for b in canon for v in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks {blocks!r} do not partition 1..{n}")
        self.blocks = canon
        self._hash = hash((n, canon))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, [(i,) for i in range(1, n + 1)])

    @property
    def rank(self) -> int:
        """Codimension of the corresponding subspace: n minus block count."""
        return self.n - len(self.blocks)

    def block_index(self) -> dict[int, int]:
        return {v: k for k, b in enumerate(self.blocks) for v in b}

    def together(self, a: int, b: int) -> bool:
        idx = self.block_index()
        return idx[a] == idx[b]

    def merge(self, i: int, j: int) -> "SetPartition":
        """Partition with blocks i and j merged."""
        blocks = [b for k, b in enumerate(self.blocks) if k not in (i, j)]
        blocks.append(self.blocks[i] + self.blocks[j])
        return SetPartition(self.n, blocks)

    def join(self, other: "SetPartition") -> "SetPartition":
        """Common coarsening, via union-find over both block families."""
        parent = list(range(self.n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for part in (self, other):
            for block in part.blocks:
                for v in block[1:]:
                    parent[find(v)] = find(block[0])
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        return SetPartition(self.n, groups.values())

    def refines(self, other: "SetPartition") -> bool:
        idx = other.block_index()
        return all(idx[b[0]] == idx[v] for b in self.blocks for v in b[1:])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SetPartition") -> bool:
        return (self.rank, self.blocks) < (other.rank, other.blocks)

    def __str__(self) -> str:
        if self.n <= 9:
            return "|".join("".join(map(str, b)) for b in self.blocks)
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self.n}, {self.blocks!r})"


@dataclass(frozen=True)
class DecreasingChain:
    """A saturated chain from the bottom whose labels strictly decrease in
    the hyperplane order, i.e. whose label indices strictly increase."""

    elements: tuple[SetPartition, ...]
    labels: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def top(self) -> SetPartition:
        return self.elements[-1]

    def label_word(self) -> str:
        return "".join(f"t{j}" for j in self.labels) if self.labels else "-"


class IntersectionLattice:
    """Bond lattice of the inversion graph, with covers, labels and Mobius data.

    ``hyperplanes[i]`` is the transposition of H_{i+1}; hyperplane order is
    H_1 > H_2 > ... > H_k, so the label of a cover is the *largest* index
    among the hyperplanes first merged by it.
    """

    def __init__(self, w: Permutation, expression: tuple[int, ...]):
        self.w = w
        self.expression = expression
        self.hyperplanes: tuple[Transposition, ...] = reflection_sequence(
            w.n, expression
        )
        if evaluate_word(w.n, expression) != w or len(expression) != w.length():
            raise ValueError(
                f"{expression!r} is not a reduced expression for {w}"
            )
        self._build()

    def _build(self) -> None:
        n = self.w.n
        bottom = SetPartition.singletons(n)
        atoms = [
            SetPartition(n, [(t.i, t.j)] + [(v,) for v in range(1, n + 1) if v not in t])
            for t in self.hyperplanes
        ]
        # Join closure starting from the atoms.
        elements = {bottom} | set(atoms)
        frontier = list(dict.fromkeys(atoms))
        while frontier:
            nxt = []
            for x in frontier:
                for a in atoms:
                    y = x.join(a)
                    if y not in elements:
                        elements.add(y)
                        nxt.append(y)
            frontier = nxt
        self.elements: tuple[SetPartition, ...] = tuple(sorted(elements))
        self.index: dict[SetPartition, int] = {
            x: k for k, x in enumerate(self.elements)
        }
        self.bottom = bottom

        # Covers: merging two blocks raises the rank by exactly one, so the
        # covers of x are its two-block merges that land in the lattice.
        covers_up: list[list[tuple[int, int]]] = [[] for _ in self.elements]
        for x in self.elements:
            xi = self.index[x]
            for i in range(len(x.blocks)):
                for j in range(i + 1, len(x.blocks)):
                    y = x.merge(i, j)
                    yi = self.index.get(y)
                    if yi is not None:
                        covers_up[xi].append((yi, self._label(x, y)))
            covers_up[xi].sort()
        self.covers_up: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple(c) for c in covers_up
        )

    def _label(self, lower: SetPartition, upper: SetPartition) -> int:
        """Largest index i with H_i first contained at the upper element."""
        for i in range(len(self.hyperplanes), 0, -1):
            a, b = self.hyperplanes[i - 1]
            if upper.together(a, b) and not lower.together(a, b):
                return i
        raise AssertionError(f"no hyperplane separates {lower} from {upper}")

    def rank_of(self, x: SetPartition) -> int:
        return x.rank

    def max_rank(self) -> int:
        return self.elements[-1].rank if self.elements else 0

    def leq(self, x: SetPartition, y: SetPartition) -> bool:
        return x.refines(y)

    def cover_labels(self) -> list[tuple[SetPartition, SetPartition, int]]:
        return [
            (self.elements[i], self.elements[j], label)
            for i in range(len(self.elements))
            for j, label in self.covers_up[i]
        ]


def build_lattice(
    w: Permutation, expression: Optional[Sequence[int]] = None
) -> IntersectionLattice:
    """Intersection lattice of w's inversion arrangement.

    The hyperplane order comes from the given reduced expression, defaulting
    to the canonical one.
    """
    expr = tuple(expression) if expression is not None else reduced_expression(w)
    return IntersectionLattice(w, expr)


def decreasing_chains(lattice: IntersectionLattice) -> list[DecreasingChain]:
    """All label-decreasing saturated chains from the bottom, every length
    included; ordered lexicographically by label sequence.

    Decreasing in the hyperplane order H_1 > ... > H_k means the integer
    labels strictly increase along the chain.
    """
    out: list[DecreasingChain] = []

    def grow(idx: int, elements: tuple[SetPartition, ...], labels: tuple[int, ...]):
        out.append(DecreasingChain(elements, labels))
        last = labels[-1] if labels else 0
        for j, label in lattice.covers_up[idx]:
            if label > last:
                grow(j, elements + (lattice.elements[j],), labels + (label,))

    bottom_idx = lattice.index[lattice.bottom]
    grow(bottom_idx, (lattice.bottom,), ())
    out.sort(key=lambda c: c.labels)
    return out


def mobius_values(lattice: IntersectionLattice) -> dict[SetPartition, int]:
    """|mu(bottom, x)| for every element, computed two independent ways.

    The classical recursion over the order ideal must agree with the count
    of decreasing chains ending at x; a mismatch means the lattice or its
    labelling is built wrongly.
    """
    elements = lattice.elements
    # Point -> block-id arrays make the refinement test a flat scan.
    keys = {}
    for x in elements:
        arr = [0] * (lattice.w.n + 1)
        for bid, block in enumerate(x.blocks):
            for v in block:
                arr[v] = bid
        keys[x] = arr

    signed: dict[SetPartition, int] = {}
    for x in elements:  # elements are sorted by rank, so ideals come first
        if x == lattice.bottom:
            signed[x] = 1
            continue
        kx = keys[x]
        total = 0
        for y in elements:
            if y.rank >= x.rank:
                break
            if all(kx[b[0]] == kx[v] for b in y.blocks for v in b[1:]):
                total += signed[y]
        signed[x] = -total

    by_chains: dict[SetPartition, int] = {x: 0 for x in elements}
    for chain in decreasing_chains(lattice):
        by_chains[chain.top] += 1

    for x in elements:
        if abs(signed[x]) != by_chains[x]:
            raise RuntimeError(
                f"Mobius mismatch at {x}: |{signed[x]}| by recursion vs "
                f"{by_chains[x]} decreasing chains; lattice construction bug"
            )
    return {x: abs(signed[x]) for x in elements}


def betti_numbers(lattice: IntersectionLattice) -> tuple[int, ...]:
    """Sum of |mu| over each rank: Betti numbers of the complexified
    arrangement complement, summing to the region count."""
    mu = mobius_values(lattice)
    out = [0] * (lattice.max_rank() + 1)
    for x, value in mu.items():
        out[x.rank] += value
    return tuple(out)


def region_count(w: Permutation, expression: Optional[Sequence[int]] = None) -> int:
    """Number of regions of the inversion arrangement of w.

    Computed as the total Mobius mass of the intersection lattice; the
    arrangement may be taken essentialized without changing the count.
    """
    lattice = build_lattice(w, expression)
    return sum(mobius_values(lattice).values())
