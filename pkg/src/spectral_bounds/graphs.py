"""Simple undirected graphs as immutable bitset adjacency rows.

Vertices are 0-based.  Each vertex stores its neighborhood as an integer
bitmask, so degree, common-neighbor and subset queries reduce to word
operations.  Graphs are value objects: two graphs compare equal iff they
have the same labeled adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "DegreeClass",
    "DegreeProfile",
    "from_edge_list",
    "from_edge_mask",
    "edge_mask",
    "edge_bit_index",
    "from_graph6",
    "to_graph6",
    "read_edge_list",
    "write_edge_list",
    "degree_profile",
    "connected_components",
    "is_connected",
    "complement",
    "turan_part_sizes",
    "turan_graph",
    "is_turan",
    "complete",
    "complete_minus_edge",
    "matching_complement",
    "star",
    "friendship",
    "complete_bipartite",
    "cycle",
    "wheel",
    "path",
]

# graph6 size headers cover n up to 2^36-1; dense bitrows past ~258k
# vertices are not a sensible target for this library.
_GRAPH6_MAX_N = 258047


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    ``rows[u]`` has bit ``v`` set iff ``uv`` is an edge.  The relation is
    symmetric and irreflexive by construction.
    """

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n <= 0:
            raise ValueError(f"vertex count must be positive, got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        ones = 0
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            ones += row.bit_count()
        for u in range(n):
            for_v = rows[u]
            while for_v:
                v = (for_v & -for_v).bit_length() - 1
                for_v &= for_v - 1
                if not rows[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", ones // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, u: int) -> Iterator[int]:
        row = self.rows[u]
        while row:
            yield (row & -row).bit_length() - 1
            row &= row - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in range(v) if self.has_edge(u, v)]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, row in enumerate(self.rows):
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                a[u, v] = 1.0
        return a

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Construction


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, order ignored."""
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def edge_bit_index(u: int, v: int) -> int:
    """Position of the pair {u, v} in the column-major upper-triangle order.

    The order is (0,1), (0,2), (1,2), (0,3), ... -- the same bit order graph6
    uses, so an edge mask doubles as a graph6 payload.
    """
    if u == v:
        raise ValueError("no bit index for a self-pair")
    lo, hi = (u, v) if u < v else (v, u)
    return hi * (hi - 1) // 2 + lo


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the given upper-triangle bitmask."""
    nbits = n * (n - 1) // 2
    if mask < 0 or mask >> nbits:
        raise ValueError(f"edge mask out of range for n={n}")
    rows = [0] * n
    bit = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> bit & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, rows)


def edge_mask(g: Graph) -> int:
    mask = 0
    bit = 0
    for v in range(1, g.n):
        for u in range(v):
            if g.rows[u] >> v & 1:
                mask |= 1 << bit
            bit += 1
    return mask


# ---------------------------------------------------------------------------
# graph6 encoding (McKay's format: 6-bit printable groups, column-major
# upper triangle, zero padding)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > _GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supported up to n={_GRAPH6_MAX_N}")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    mask = edge_mask(g)
    nbits = n * (n - 1) // 2
    chars = []
    for group in range((nbits + 5) // 6):
        val = 0
        for j in range(6):
            bit = 6 * group + j
            if bit < nbits and mask >> bit & 1:
                val |= 1 << (5 - j)
        chars.append(chr(63 + val))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally prefixed with '>>graph6<<')."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in text:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise ValueError(f"graph6 character {ch!r} outside printable range 63..126")
        vals.append(o - 63)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        raise ValueError(f"graph6 vertex counts above {_GRAPH6_MAX_N} not supported")
    if n == 0:
        raise ValueError("graph6 string encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ValueError(
            f"graph6 payload has {len(body)} groups, expected {expected} for n={n}"
        )
    mask = 0
    for group, val in enumerate(body):
        for j in range(6):
            if val >> (5 - j) & 1:
                bit = 6 * group + j
                if bit >= nbits:
                    raise ValueError("graph6 trailing padding bits are not zero")
                mask |= 1 << bit
    return from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# Edge-list text files: an "n" header line, then one "u v" line per edge.


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError(f"{path}: empty edge-list file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"{path}: header line must be the vertex count") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{g.n}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


# ---------------------------------------------------------------------------
# Degrees and regularity


class DegreeClass(str, Enum):
    REGULAR = "regular"
    SUBREGULAR_SINGLE_MAX = "subregular-single-max"
    SUBREGULAR_SINGLE_MIN = "subregular-single-min"
    OTHER_IRREGULAR = "other-irregular"


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    m: int
    max_degree: int
    min_degree: int
    degrees: tuple[int, ...]
    num_max_degree: int
    classification: DegreeClass


def degree_profile(g: Graph) -> DegreeProfile:
    """Degree statistics plus the regular/subregular/irregular trichotomy.

    A graph is subregular when max and min degree differ by exactly one and
    a single vertex carries the deviating degree (which forces odd order).
    """
    degs = g.degrees()
    dmax, dmin = max(degs), min(degs)
    num_max = degs.count(dmax)
    if dmax == dmin:
        cls = DegreeClass.REGULAR
    elif dmax - dmin == 1 and num_max == 1:
        cls = DegreeClass.SUBREGULAR_SINGLE_MAX
    elif dmax - dmin == 1 and degs.count(dmin) == 1:
        cls = DegreeClass.SUBREGULAR_SINGLE_MIN
    else:
        cls = DegreeClass.OTHER_IRREGULAR
    return DegreeProfile(
        n=g.n,
        m=g.m,
        max_degree=dmax,
        min_degree=dmin,
        degrees=tuple(sorted(degs)),
        num_max_degree=num_max,
        classification=cls,
    )


# ---------------------------------------------------------------------------
# Connectivity


def _components_of_rows(rows: tuple[int, ...], n: int) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [_bits_to_list(c) for c in _components_of_rows(g.rows, g.n)]


def _bits_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def is_connected(g: Graph) -> bool:
    return len(_components_of_rows(g.rows, g.n)) == 1


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(~row & full & ~(1 << u) for u, row in enumerate(g.rows)))


# ---------------------------------------------------------------------------
# Balanced complete multipartite graphs


def turan_part_sizes(r: int, n: int) -> tuple[int, ...]:
    """Part sizes of the balanced r-partition of n: the n mod r larger parts
    first, then the smaller ones (sizes may be zero when r > n)."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    q, rem = divmod(n, r)
    return (q + 1,) * rem + (q,) * (r - rem)


def turan_graph(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with near-equal parts."""
    sizes = turan_part_sizes(r, n)
    part_of = []
    for i, s in enumerate(sizes):
        part_of.extend([i] * s)
    rows = [0] * n
    for v in range(n):
        for u in range(v):
            if part_of[u] != part_of[v]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def is_turan(g: Graph, r: int) -> bool:
    """Structural test for isomorphism with the balanced complete r-partite
    graph: the complement must split into exactly min(r, n) cliques whose
    sizes match the balanced partition.  No floating point involved."""
    if r < 1:
        raise ValueError("need r >= 1")
    expected = sorted(s for s in turan_part_sizes(r, g.n) if s > 0)
    co = complement(g)
    comps = _components_of_rows(co.rows, co.n)
    if len(comps) != len(expected):
        return False
    sizes = []
    for comp in comps:
        size = comp.bit_count()
        # each complement component must be a clique
        rest = comp
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if (co.rows[v] | 1 << v) & comp != comp:
                return False
        sizes.append(size)
    return sorted(sizes) == expected


# ---------------------------------------------------------------------------
# Named families


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def complete_minus_edge(n: int) -> Graph:
    """Complete graph with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError("need n >= 2")
    g = complete(n)
    rows = list(g.rows)
    rows[0] &= ~2
    rows[1] &= ~1
    return Graph(n, rows)


def matching_complement(n: int) -> Graph:
    """Complement of an (n/2 - 1)-matching: complete except that the pairs
    {0,1}, {2,3}, ... up to {n-4, n-3} are non-edges."""
    if n < 2 or n % 2:
        raise ValueError("need even n >= 2")
    g = complete(n)
    rows = list(g.rows)
    for i in range(n // 2 - 1):
        u, v = 2 * i, 2 * i + 1
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(n, rows)


def star(n: int) -> Graph:
    """Star on n vertices: hub 0 joined to n-1 leaves."""
    if n < 2:
        raise ValueError("need n >= 2")
    return from_edge_list(n, [(0, v) for v in range(1, n)])


def friendship(t: int) -> Graph:
    """t triangles sharing hub 0, on 2t + 1 vertices."""
    if t < 1:
        raise ValueError("need t >= 1")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return from_edge_list(2 * t + 1, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("need n >= 3")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def wheel(rim: int) -> Graph:
    """Wheel with the given rim length: hub 0 joined to a cycle on vertices
    1..rim, so wheel(4) has 5 vertices."""
    if rim < 3:
        raise ValueError("need rim >= 3")
    edges = [(0, v) for v in range(1, rim + 1)]
    edges += [(v, v % rim + 1) for v in range(1, rim + 1)]
    return from_edge_list(rim + 1, edges)
