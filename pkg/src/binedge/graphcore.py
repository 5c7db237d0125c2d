"""Simple graphs on ``{1..n}`` and the graph-theoretic predicates used elsewhere.

Vertex sets are passed around as Python ``int`` bitmasks internally: bit ``v``
stands for vertex ``v`` (bit 0 is never used).  Public functions accept any
iterable of vertex labels and return ``frozenset`` objects.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Raised for malformed edge-list or graph6 input."""


# -- bitmask helpers ---------------------------------------------------------

def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- the graph type ----------------------------------------------------------

class Graph:
    """Immutable labeled simple graph on the vertex set ``{1..n}``."""

    __slots__ = ("n", "_nbr", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbr = [0] * (n + 1)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} outside 1..{n}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self._nbr = tuple(nbr)
        self._hash = None

    @classmethod
    def _from_masks(cls, nbr: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g.n = len(nbr) - 1
        g._nbr = nbr
        g._hash = None
        return g

    @property
    def vertex_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    @property
    def adj(self) -> dict[int, frozenset[int]]:
        return {v: members(self._nbr[v]) for v in range(1, self.n + 1)}

    def neighbors(self, v: int) -> frozenset[int]:
        return members(self._nbr[v])

    def neighbor_mask(self, v: int) -> int:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return bin(self._nbr[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._nbr[u] >> v & 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1)
                for v in iter_bits(self._nbr[u]) if u < v]

    def num_edges(self) -> int:
        return sum(bin(m).count("1") for m in self._nbr) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbr == other._nbr

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._nbr)
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


# -- standard families (used by tests, demos and the survey) -----------------

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the ``a`` side labeled ``1..a``."""
    return Graph(a + b, ((i, j) for i in range(1, a + 1)
                         for j in range(a + 1, a + b + 1)))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``{1..n}``, edge subsets in binary order."""
    pairs = list(combinations(range(1, n + 1), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, (p for k, p in enumerate(pairs) if code >> k & 1))


# -- parsing and serialization ---------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` / ``u v`` edge-list format (``#`` comments)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphParseError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            if n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"line {lineno}: loop {u}-{v} not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"line {lineno}: vertex out of range 1..{n}")
        if u > v:
            raise GraphParseError(f"line {lineno}: edges must be written with u < v")
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _graph6_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (1,2), (1,3), (2,3), (1,4), ...
    for j in range(2, n + 1):
        for i in range(1, j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word with ``n <= 62``."""
    word = text.strip()
    if word.startswith(">>graph6<<"):
        word = word[len(">>graph6<<"):]
    if not word:
        raise GraphParseError("empty graph6 word")
    codes = [ord(c) - 63 for c in word]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphParseError("graph6 byte outside 63..126")
    n = codes[0]
    if n > 62:
        raise GraphParseError("graph6 headers for n > 62 are not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != -(-nbits // 6):
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)} for n={n}")
    edges = []
    for k, (i, j) in enumerate(_graph6_pairs(n)):
        if body[k // 6] >> (5 - k % 6) & 1:
            edges.append((i, j))
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphParseError("nonzero padding bits in graph6 word")
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 serialization limited to n <= 62")
    bits = [int(g.has_edge(i, j)) for i, j in _graph6_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# -- structure ----------------------------------------------------------------

def components_of(nbr, remaining: int) -> list[int]:
    """Components, as bitmasks ordered by minimum vertex, of the graph with
    neighbor masks ``nbr`` induced on the vertex mask ``remaining``."""
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = frontier = low
        while frontier:
            v = lowest(frontier)
            frontier ^= 1 << v
            new = nbr[v] & remaining & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    return components_of(g._nbr, g.vertex_mask if within is None else within)


def count_components(g: Graph, within: int | None = None) -> int:
    return len(component_masks(g, within))


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [members(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return count_components(g) <= 1


def remove_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on ``{1..n}`` minus ``removed``; labels are kept."""
    dead = to_mask(removed)
    keep = ~dead
    nbr = tuple(0 if (dead >> v & 1) else m & keep for v, m in enumerate(g._nbr))
    return _Induced._make(nbr, g.vertex_mask & keep)


class _Induced(Graph):
    """A graph whose vertex set is a subset of ``{1..n}`` (labels preserved)."""

    __slots__ = ("_vmask",)

    @classmethod
    def _make(cls, nbr, vmask):
        g = cls.__new__(cls)
        g.n = len(nbr) - 1
        g._nbr = nbr
        g._hash = None
        g._vmask = vmask
        return g

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    @property
    def vertices(self) -> frozenset[int]:
        return members(self._vmask)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbr == other._nbr and self.vertex_mask == other.vertex_mask

    def __hash__(self):
        return hash((self._nbr, self._vmask))

    def __repr__(self):
        return f"Graph(vertices={sorted(self.vertices)}, edges={self.edges})"


def vertices_of(g: Graph) -> frozenset[int]:
    return members(g.vertex_mask)


def is_cut_vertex(g: Graph, v: int) -> bool:
    vm = g.vertex_mask
    return count_components(g, vm & ~(1 << v)) > count_components(g, vm)


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects ``g``.

    ``n - 1`` for complete graphs and 0 for disconnected ones.
    """
    n = g.n
    if not is_connected(g):
        return 0
    if g.num_edges() == n * (n - 1) // 2:
        return n - 1
    vm = g.vertex_mask
    for k in range(1, n - 1):
        for cut in combinations(range(1, n + 1), k):
            if count_components(g, vm & ~to_mask(cut)) > 1:
                return k
    return n - 1  # unreachable for non-complete graphs


def join_2k1_witness(g: Graph) -> tuple[int, int] | None:
    """Smallest pair ``(u, v)`` exhibiting ``g`` as ``G' * 2K_1``, if any."""
    vm = g.vertex_mask
    for u, v in combinations(range(1, g.n + 1), 2):
        if g.has_edge(u, v):
            continue
        rest = vm & ~(1 << u | 1 << v)
        if g._nbr[u] == rest and g._nbr[v] == rest:
            return (u, v)
    return None


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the biconnected components (blocks) with at least one edge."""
    nbr = g._nbr
    index = {}
    low = {}
    stack: list[tuple[int, int]] = []
    blocks = []
    counter = 0

    for root in range(1, g.n + 1):
        if root in index or not nbr[root]:
            continue
        index[root] = low[root] = counter
        counter += 1
        todo = [(root, 0, iter(sorted(iter_bits(nbr[root]))))]
        while todo:
            v, parent, it = todo[-1]
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    stack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    todo.append((w, v, iter(sorted(iter_bits(nbr[w])))))
                    break
                if index[w] < index[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], index[w])
            else:
                todo.pop()
                if todo:
                    u = todo[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= index[u]:
                        block = set()
                        while True:
                            e = stack.pop()
                            block.update(e)
                            if e == (u, v):
                                break
                        blocks.append(frozenset(block))
    return sorted(blocks, key=min)


def is_clique(g: Graph, mask: int) -> bool:
    return all((g._nbr[v] | 1 << v) & mask == mask for v in iter_bits(mask))


def is_complete(g: Graph) -> bool:
    return is_clique(g, g.vertex_mask)


def is_block_graph(g: Graph) -> bool:
    return all(is_clique(g, to_mask(b)) for b in biconnected_components(g))


def is_cycle(g: Graph) -> bool:
    """True iff ``g`` is a single cycle through all of its ``n >= 3`` vertices."""
    return (g.n >= 3 and is_connected(g)
            and all(g.degree(v) == 2 for v in range(1, g.n + 1)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges + [(u + shift, v + shift) for u, v in g2.edges])
