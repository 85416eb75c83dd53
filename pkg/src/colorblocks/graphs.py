"""Graph representation, family builders, cartesian product, and spec parsing.

Vertices are always 0..n-1.  Builders fix their numbering:

* ``path(n)``: edges {i, i+1}
* ``cycle(n)``: path(n) plus {0, n-1}, n >= 3
* ``complete(n)``, ``complete_bipartite(n, m)``: parts {0..n-1} / {n..n+m-1}
* ``star(m)`` = complete_bipartite(1, m), center 0
* ``perfect_binary_tree(h)``: heap order, children of i are 2i+1 and 2i+2
* ``cartesian_product(g, h)``: vertex (a, b) gets index a*|V(h)| + b
* ``random_tree(n, seed)``: decoded from a splitmix64-seeded Pruefer sequence,
  so every run (and every implementation of the same generator) agrees
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import GraphSpecError

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted per-vertex neighbor tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graphs must have at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal the vertex count")
        for u, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError("neighbor lists must be sorted and duplicate-free")
            for v in nbrs:
                if v == u:
                    raise ValueError("loops are not allowed")
                if not 0 <= v < self.n:
                    raise ValueError("neighbor index out of range")
                if u not in self.adj[v]:
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise ValueError("complete bipartite graph needs n, m >= 1")
    return Graph.from_edges(n + m, [(u, n + v) for u in range(n) for v in range(m)])


def star(m: int) -> Graph:
    """The star with m leaves: complete_bipartite(1, m), center vertex 0."""
    return complete_bipartite(1, m)


def perfect_binary_tree(h: int) -> Graph:
    if h < 0:
        raise ValueError("height must be >= 0")
    n = 2 ** (h + 1) - 1
    edges = []
    for i in range(n):
        for child in (2 * i + 1, 2 * i + 2):
            if child < n:
                edges.append((i, child))
    return Graph.from_edges(n, edges)


class SplitMix64:
    """splitmix64 PRNG; fixed by algorithm so results are reproducible."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


def random_tree(n: int, seed: int) -> Graph:
    """Deterministic random tree from a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = SplitMix64(seed)
    seq = [rng.next_below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; (v1,v2)~(w1,w2) iff they agree in one factor and
    are adjacent in the other.  Vertex (a, b) has index a*|V(h)| + b."""
    n = g.n * h.n
    edges = []
    for a in range(g.n):
        base = a * h.n
        for b, b2 in h.edges():
            edges.append((base + b, base + b2))
    for a, a2 in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, a2 * h.n + b))
    return Graph.from_edges(n, edges)


def grid(m: int, n: int) -> Graph:
    return cartesian_product(path(m), path(n))


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, via union-find, ordered by minimum vertex."""
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# -- graph spec mini-language -------------------------------------------------
#
#   spec     := family | "product(" spec "," spec ")" | "edges:" INT ":[" edgelist "]"
#   family   := ("path"|"cycle"|"complete"|"star"|"pbt") ":" INT
#             | ("bipartite"|"grid") ":" INT "," INT
#   edgelist := INT "-" INT ("," INT "-" INT)*
#
# Whitespace-free; vertex indices 0-based.

_UNARY_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "pbt": perfect_binary_tree,
}
_BINARY_FAMILIES = {
    "bipartite": complete_bipartite,
    "grid": grid,
}


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> GraphSpecError:
        return GraphSpecError(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_name(self) -> str:
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a family name")
        return self.text[start : self.pos]

    def parse_spec(self) -> Graph:
        at = self.pos
        name = self.parse_name()
        if name == "product":
            self.expect("(")
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            self.expect(")")
            return cartesian_product(left, right)
        if name == "edges":
            self.expect(":")
            n = self.parse_int()
            self.expect(":")
            self.expect("[")
            edges = []
            if self.peek() != "]":
                while True:
                    u = self.parse_int()
                    self.expect("-")
                    v = self.parse_int()
                    edges.append((u, v))
                    if self.peek() != ",":
                        break
                    self.pos += 1
            self.expect("]")
            try:
                return Graph.from_edges(n, edges)
            except ValueError as exc:
                self.pos = at
                raise self.error(str(exc)) from exc
        self.expect(":")
        first = self.parse_int()
        builder = _UNARY_FAMILIES.get(name)
        if builder is not None:
            try:
                return builder(first)
            except ValueError as exc:
                self.pos = at
                raise self.error(str(exc)) from exc
        builder = _BINARY_FAMILIES.get(name)
        if builder is not None:
            self.expect(",")
            second = self.parse_int()
            try:
                return builder(first, second)
            except ValueError as exc:
                self.pos = at
                raise self.error(str(exc)) from exc
        self.pos = at
        raise self.error(f"unknown family {name!r}")


def parse_graph_spec(text: str) -> Graph:
    parser = _SpecParser(text)
    g = parser.parse_spec()
    if parser.pos != len(text):
        raise parser.error("trailing input")
    return g


def split_prism_spec(text: str) -> tuple[str, int] | None:
    """If the spec is product(G, path:n) at the top level, return (G-spec, n)."""
    if not (text.startswith("product(") and text.endswith(")")):
        return None
    inner = text[len("product(") : -1]
    depth = 0
    for idx, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            left, right = inner[:idx], inner[idx + 1 :]
            if right.startswith("path:") and right[len("path:") :].isdigit():
                return left, int(right[len("path:") :])
            return None
    return None
