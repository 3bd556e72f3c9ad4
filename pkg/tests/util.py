"""Shared helpers and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: pattern
containment tries every index subset, distances walk the full group, the
permanent sums over permutations, and bond-lattice elements come from raw
edge-subset enumeration.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from invlat.permutation import Permutation


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Permutation, ...]:
    return tuple(
        Permutation(word) for word in itertools.permutations(range(1, n + 1))
    )


def contains_oracle(w: Permutation, p: Permutation) -> bool:
    """Pattern containment by checking every index subset."""
    ww, pw = w.word, p.word
    for idx in itertools.combinations(range(w.n), p.n):
        values = [ww[i] for i in idx]
        if all(
            (values[a] < values[b]) == (pw[a] < pw[b])
            for a in range(p.n)
            for b in range(a + 1, p.n)
        ):
            return True
    return False


def brute_permanent(rows, n: int) -> int:
    return sum(
        all(rows[i] >> p[i] & 1 for i in range(n))
        for p in itertools.permutations(range(n))
    )


def brute_colorings(masks, k: int) -> int:
    n = len(masks)
    count = 0
    for col in itertools.product(range(k), repeat=n):
        if all(
            not (masks[i] >> j & 1) or col[i] != col[j]
            for i in range(n)
            for j in range(i + 1, n)
        ):
            count += 1
    return count


def full_graph_distance(u: Permutation, w: Permutation) -> int | None:
    """Directed Bruhat-graph distance computed forwards over all of S_n,
    with no restriction to the interval below w."""
    n = u.n
    target = w.word
    frontier = {u.word}
    seen = {u.word}
    d = 0
    while frontier:
        if target in frontier:
            return d
        d += 1
        nxt = set()
        for word in frontier:
            for i in range(n):
                for j in range(i + 1, n):
                    if word[i] < word[j]:
                        t = list(word)
                        t[i], t[j] = t[j], t[i]
                        t = tuple(t)
                        if t not in seen:
                            seen.add(t)
                            nxt.add(t)
        frontier = nxt
    return None


def min_transpositions(w: Permutation) -> int:
    """Fewest transpositions multiplying to w, by breadth-first search."""
    n = w.n
    start = Permutation.identity(n).word
    if w.word == start:
        return 0
    frontier = {start}
    seen = {start}
    d = 0
    while True:
        d += 1
        nxt = set()
        for word in frontier:
            for i in range(n):
                for j in range(i + 1, n):
                    t = list(word)
                    t[i], t[j] = t[j], t[i]
                    t = tuple(t)
                    if t == w.word:
                        return d
                    if t not in seen:
                        seen.add(t)
                        nxt.add(t)
        frontier = nxt


def bond_partitions_oracle(n: int, edges) -> set[tuple[tuple[int, ...], ...]]:
    """All component partitions over every edge subset, canonically sorted."""
    out = set()
    edges = list(edges)
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            parent = list(range(n + 1))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for a, b in subset:
                parent[find(a)] = find(b)
            blocks: dict[int, list[int]] = {}
            for v in range(1, n + 1):
                blocks.setdefault(find(v), []).append(v)
            out.add(tuple(sorted(tuple(sorted(b)) for b in blocks.values())))
    return out
