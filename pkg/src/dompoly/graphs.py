"""Simple graphs with per-vertex closed-neighborhood bitmasks.

Vertices are dense integers ``0..n-1``.  Adjacency is kept as one bitmask per
vertex so that unions of closed neighborhoods and coverage tests are single
integer operations; Python integers widen as needed, so the vertex cap below
is a policy limit rather than a machine word size.

Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, EdgeListParseError

#: Hard cap on vertex count for any constructed graph.
MAX_VERTICES = 4096


class Graph:
    __slots__ = ("n", "adj", "closed")

    n: int
    adj: tuple[int, ...]
    closed: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        n = operator.index(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.closed = tuple(m | (1 << v) for v, m in enumerate(adj))

    @classmethod
    def from_masks(cls, n: int, adj_masks: Iterable[int]) -> "Graph":
        """Build from adjacency bitmasks; validates symmetry and no self-loops."""
        masks = tuple(adj_masks)
        if len(masks) != n:
            raise ValueError("need exactly one adjacency mask per vertex")
        g = cls.__new__(cls)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"mask of vertex {v} references vertices >= {n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, m in enumerate(masks):
            u = m
            while u:
                w = (u & -u).bit_length() - 1
                if not masks[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
                u &= u - 1
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        g.n = n
        g.adj = masks
        g.closed = tuple(m | (1 << v) for v, m in enumerate(masks))
        return g

    # -- queries -------------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees in nonincreasing order."""
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- combinators ---------------------------------------------------------------


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides."""
    n, m = g.n, h.n
    if n + m > MAX_VERTICES:
        raise CapacityError(f"join would have {n + m} vertices (cap {MAX_VERTICES})")
    g_side = (1 << n) - 1
    h_side = ((1 << m) - 1) << n
    masks = [g.adj[v] | h_side for v in range(n)]
    masks += [(h.adj[u] << n) | g_side for u in range(m)]
    return Graph.from_masks(n + m, masks)


def corona(g: Graph, h: Graph) -> Graph:
    """Attach to each vertex of g a fresh copy of h, fully joined to it.

    Copy i of h occupies vertices g.n + i*h.n .. g.n + (i+1)*h.n - 1.
    """
    if h.n == 0:
        raise ValueError("corona requires a nonempty second operand")
    total = g.n * (1 + h.n)
    if total > MAX_VERTICES:
        raise CapacityError(f"corona would have {total} vertices (cap {MAX_VERTICES})")
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges.extend((base + u, base + v) for u, v in h.edges())
        edges.extend((i, base + u) for u in range(h.n))
    return Graph(total, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(
            f"union would have {g.n + h.n} vertices (cap {MAX_VERTICES})"
        )
    masks = list(g.adj) + [m << g.n for m in h.adj]
    return Graph.from_masks(g.n + h.n, masks)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = [full ^ m ^ (1 << v) for v, m in enumerate(g.adj)]
    return Graph.from_masks(g.n, masks)


# -- named families --------------------------------------------------------------

FAMILY_ARITY = {
    "complete": 1,
    "complete_bipartite": 2,
    "path": 1,
    "cycle": 1,
    "friendship": 1,
    "complement_friendship": 1,
    "cocktail_party": 1,
    "book": 1,
    "k_star": 2,
    "h_witness": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named parametric family instance, e.g. friendship(3) or k_star(2, 5)."""

    name: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(operator.index(p) for p in self.params))

    @classmethod
    def from_string(cls, text: str) -> "FamilySpec":
        """Parse the CLI form "name:p1,p2"."""
        name, sep, rest = text.partition(":")
        if not sep or not name:
            raise ValueError(f"expected 'name:p1,p2', got {text!r}")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in {text!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(str(p) for p in self.params)}"


def _validate_spec(spec: FamilySpec) -> None:
    arity = FAMILY_ARITY.get(spec.name)
    if arity is None:
        known = ", ".join(sorted(FAMILY_ARITY))
        raise ValueError(f"unknown family {spec.name!r} (known: {known})")
    if len(spec.params) != arity:
        raise ValueError(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    if any(p < 0 for p in spec.params):
        raise ValueError(f"{spec.name} parameters must be nonnegative")
    name, p = spec.name, spec.params
    if name == "cycle" and p[0] < 3:
        raise ValueError("cycle needs at least 3 vertices")
    if name in ("friendship", "complement_friendship", "cocktail_party", "book", "h_witness") and p[0] < 1:
        raise ValueError(f"{name} index must be at least 1")
    if name == "k_star":
        k, n = p
        if k < 1:
            raise ValueError("k_star clique size must be at least 1")
        if n < k + 1:
            raise ValueError("k_star order must be at least clique size + 1")


def family_order(spec: FamilySpec) -> int:
    """Vertex count of build_family(spec), without building it."""
    _validate_spec(spec)
    name, p = spec.name, spec.params
    if name == "complete":
        return p[0]
    if name == "complete_bipartite":
        return p[0] + p[1]
    if name in ("path", "cycle"):
        return p[0]
    if name in ("friendship", "complement_friendship"):
        return 2 * p[0] + 1
    if name == "cocktail_party":
        return 2 * p[0]
    if name == "book":
        return 2 * p[0] + 2
    if name == "k_star":
        return p[1]
    if name == "h_witness":
        return 2 * p[0] + (p[0] & 1)
    raise AssertionError(name)


def build_family(spec: FamilySpec) -> Graph:
    """Construct a named family instance.

    Orders: friendship(n) and complement_friendship(n) have 2n+1 vertices,
    cocktail_party(n) has 2n, book(n) has 2n+2, k_star(k, n) has n, and
    h_witness(n) has 2n vertices for even n and 2n+1 for odd n.
    """
    _validate_spec(spec)
    name, p = spec.name, spec.params
    if name == "complete":
        n = p[0]
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if name == "complete_bipartite":
        a, b = p
        return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))
    if name == "path":
        n = p[0]
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if name == "cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "friendship":
        n = p[0]
        edges = []
        for i in range(n):
            a, b = 2 * i + 1, 2 * i + 2
            edges += [(0, a), (0, b), (a, b)]
        return Graph(2 * n + 1, edges)
    if name == "complement_friendship":
        return complement(build_family(FamilySpec("friendship", p)))
    if name == "cocktail_party":
        n = p[0]
        edges = [
            (u, v)
            for u in range(2 * n)
            for v in range(u + 1, 2 * n)
            if not (u // 2 == v // 2)
        ]
        return Graph(2 * n, edges)
    if name == "book":
        n = p[0]
        edges = [(0, 1)]
        for i in range(n):
            a, b = 2 + 2 * i, 3 + 2 * i
            edges += [(0, a), (a, b), (b, 1)]
        return Graph(2 * n + 2, edges)
    if name == "k_star":
        k, n = p
        edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
        edges += [(u, v) for v in range(k, n) for u in range(k)]
        return Graph(n, edges)
    if name == "h_witness":
        k = p[0] // 2
        p3 = build_family(FamilySpec("path", (3,)))
        base = corona(build_family(FamilySpec("path", (k,))), p3) if k else Graph(0)
        if p[0] % 2:
            return disjoint_union(base, p3)
        return base
    raise AssertionError(name)


# -- edge-list text format --------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the text format: a header line "n m" then m lines "u v".

    Rejects self-loops, duplicate edges, out-of-range indices, and malformed
    lines, reporting the 1-based line number.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListParseError("missing 'n m' header", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError("header must be two integers 'n m'", 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError("header must be two integers 'n m'", 1) from None
    if n < 0 or m < 0:
        raise EdgeListParseError("header counts must be nonnegative", 1)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if len(edges) == m:
            if raw.strip():
                raise EdgeListParseError(f"expected only {m} edge lines", lineno)
            continue
        fields = raw.split()
        if len(fields) != 2:
            raise EdgeListParseError("expected 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError("expected integer endpoints", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise EdgeListParseError(f"expected {m} edges, found {len(edges)}", lineno + 1)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list text format (round-trips with parse)."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
