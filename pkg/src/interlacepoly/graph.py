"""Undirected labeled graphs with the pivot and local complementation moves.

Adjacency is one bit row per vertex (bit w of row v set iff vw is an
edge); a loop is a set diagonal bit.  Vertex sets passed to operations
are iterables of vertex indices.  Graphs are immutable: every operation
returns a fresh instance.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .gf2 import GF2Matrix

MAX_VERTICES = 63  # a vertex set must fit one machine word


class SimpleGraph:
    __slots__ = ("n", "adj", "loops_allowed")

    def __init__(self, n: int, adj: Sequence[int] | None = None,
                 loops_allowed: bool = False):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = list(adj) if adj is not None else [0] * n
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        mask = (1 << n) - 1
        for v, row in enumerate(adj):
            if row < 0 or row & ~mask:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
        for v in range(n):
            for w in range(v + 1, n):
                if ((adj[v] >> w) & 1) != ((adj[w] >> v) & 1):
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        if not loops_allowed:
            for v in range(n):
                if (adj[v] >> v) & 1:
                    raise ValueError(f"loop at vertex {v} but loops are not allowed")
        self.n = n
        self.adj = tuple(adj)
        self.loops_allowed = loops_allowed

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   loops_allowed: bool = False) -> "SimpleGraph":
        adj = [0] * n
        loops = False
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            loops = loops or u == v
        return cls(n, adj, loops_allowed or loops)

    # -- basic accessors ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def has_loops(self) -> bool:
        return any((row >> v) & 1 for v, row in enumerate(self.adj))

    def edge_count(self) -> int:
        total = sum(row.bit_count() for row in self.adj)
        loops = sum((row >> v) & 1 for v, row in enumerate(self.adj))
        return (total - loops) // 2 + loops

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (u, v) with u <= v, sorted; loops as (u, u)."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> u
            while row:
                v = u + (row & -row).bit_length() - 1
                row &= row - 1
                out.append((u, v))
        return out

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def _mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            self._check_vertex(v)
            m |= 1 << v
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()!r})"

    # -- neighborhood algebra -------------------------------------------

    def neighborhood(self, v: int) -> set:
        self._check_vertex(v)
        return _bits_to_set(self.adj[v])

    def neighborhood_set(self, vertices: Iterable[int]) -> set:
        """Vertices adjacent to an odd number of members of the given set.

        This is the GF(2) sum of the individual neighborhoods, so it is
        linear: N(P symdiff Q) = N(P) symdiff N(Q).
        """
        acc = 0
        for v in vertices:
            self._check_vertex(v)
            acc ^= self.adj[v]
        return _bits_to_set(acc)

    def neighborhood_mask(self, mask: int) -> int:
        """Bitmask variant of neighborhood_set for hot loops."""
        acc = 0
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            acc ^= self.adj[v]
        return acc

    # -- structural operations -------------------------------------------

    def pivot(self, v: int, w: int) -> "SimpleGraph":
        """Toggle all pairs across the three neighbor classes of edge vw.

        The classes are: adjacent to v only, adjacent to w only, adjacent
        to both (v and w themselves excluded).  Pairs inside one class and
        all edges at v and w are untouched, so vw stays an edge and the
        operation is an involution.

        Raises:
            ValueError: if vw is not an edge or the graph has loops.
        """
        if self.has_loops():
            raise ValueError("pivot is defined on loopless graphs only")
        return self._pivot_unchecked(v, w)

    def _pivot_unchecked(self, v: int, w: int) -> "SimpleGraph":
        # Used directly by the two-variable reduction, where other vertices
        # may carry loops but v and w must not.
        self._check_vertex(v)
        self._check_vertex(w)
        if v == w or not self.has_edge(v, w):
            raise ValueError(f"({v}, {w}) is not an edge")
        if (self.adj[v] >> v) & 1 or (self.adj[w] >> w) & 1:
            raise ValueError("pivot endpoints must be loopless")
        ends = (1 << v) | (1 << w)
        only_v = self.adj[v] & ~self.adj[w] & ~ends
        only_w = self.adj[w] & ~self.adj[v] & ~ends
        both = self.adj[v] & self.adj[w] & ~ends
        adj = list(self.adj)
        for cls, rest in ((only_v, only_w | both),
                          (only_w, only_v | both),
                          (both, only_v | only_w)):
            m = cls
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                adj[u] ^= rest
        return SimpleGraph(self.n, adj, self.loops_allowed)

    def local_complement(self, v: int) -> "SimpleGraph":
        """Complement the subgraph induced by the neighborhood of v.

        Every pair of distinct neighbors of v has its edge toggled.  When v
        itself is looped (so v is its own neighbor), the toggle extends over
        the diagonal: each neighbor's loop flips too, v included.
        """
        self._check_vertex(v)
        nv = self.adj[v]
        looped = (nv >> v) & 1
        adj = list(self.adj)
        m = nv
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            adj[u] ^= nv if looped else nv & ~(1 << u)
        return SimpleGraph(self.n, adj, self.loops_allowed or bool(looped))

    def delete_vertex(self, v: int) -> "SimpleGraph":
        """Remove v and its incident edges, re-indexing the rest in order."""
        self._check_vertex(v)
        low = (1 << v) - 1
        adj = []
        for u, row in enumerate(self.adj):
            if u == v:
                continue
            adj.append((row & low) | ((row >> (v + 1)) << v))
        return SimpleGraph(self.n - 1, adj, self.loops_allowed)

    def induced_subgraph(self, vertices: Iterable[int]) -> "SimpleGraph":
        order = sorted(_bits_to_set(self._mask(vertices)))
        adj = [0] * len(order)
        for i, u in enumerate(order):
            for j, w in enumerate(order):
                if (self.adj[u] >> w) & 1:
                    adj[i] |= 1 << j
        return SimpleGraph(len(order), adj, self.loops_allowed)

    def adjacency_matrix(self, vertices: Iterable[int]) -> GF2Matrix:
        """Adjacency of the induced subgraph over GF(2), rows and columns
        in increasing vertex order; loops put ones on the diagonal."""
        sub = self.induced_subgraph(vertices)
        return GF2Matrix(sub.n, sub.n, sub.adj)

    def is_even_subgraph(self, vertices: Iterable[int]) -> bool:
        """True iff every vertex of the induced subgraph has even degree
        inside it.  The empty set induces an even subgraph."""
        mask = self._mask(vertices)
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if (self.adj[v] & mask).bit_count() & 1:
                return False
        return True

    def canonical_key(self) -> bytes:
        """Deterministic byte encoding of (n, adjacency); memoization key."""
        nbytes = (self.n + 7) // 8
        return bytes([self.n]) + b"".join(
            row.to_bytes(nbytes, "little") for row in self.adj)

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        """Serialize as 'n m' plus one 'u v' line per edge, sorted."""
        lines = [f"{self.n} {self.edge_count()}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    """Parse the text graph format: 'n m' then m lines 'u v'.

    'u u' denotes a loop; duplicate undirected edges are rejected.

    Raises:
        ValueError: on any malformed input.
    """
    tokens = _header_and_pairs(text, "graph")
    (n, m), pairs = tokens
    adj = [0] * n
    loops = False
    seen = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        loops = loops or u == v
    return SimpleGraph(n, adj, loops_allowed=loops)


def _header_and_pairs(text: str, what: str) -> Tuple[Tuple[int, int], List[Tuple[int, int]]]:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError(f"empty {what} input")
    if len(lines) == 1 and len(lines[0].split()) > 2:
        # inline literal: one whitespace-separated token stream
        toks = lines[0].split()
        if len(toks) % 2:
            raise ValueError(f"{what} literal needs an even token count, got {len(toks)}")
        lines = [" ".join(toks[i:i + 2]) for i in range(0, len(toks), 2)]
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{what} header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"{what} header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ValueError(f"{what} header values must be nonnegative")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"edge line must be 'u v', got {ln!r}") from None
    return (n, m), pairs


def _bits_to_set(mask: int) -> set:
    out = set()
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.add(v)
    return out
