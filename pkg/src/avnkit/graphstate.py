"""Graph states, local complementation, and local Clifford frames."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from .pauli import PauliElement, mul
from .subgroup import SizeCapError, StabiliserGroup
from .triples import AvnTriple

ORBIT_CAP = 8


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` stored as adjacency bitsets."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for v, row in enumerate(self.adj):
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for w in range(self.n):
                if ((row >> w) & 1) != ((self.adj[w] >> v) & 1):
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def star(cls, n: int, center: int = 0) -> "Graph":
        return cls.from_edges(n, [(center, v) for v in range(n) if v != center])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in range(u + 1, self.n) if (self.adj[u] >> v) & 1
        )

    def neighbours(self, v: int) -> list[int]:
        return [w for w in range(self.n) if (self.adj[v] >> w) & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx],
        )

    def format(self) -> str:
        edges = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"n={self.n}\nedges={edges}"


def parse_graph(text: str) -> Graph:
    """Read ``n=<int>`` / ``edges=u-v,...`` or a block of 0/1 adjacency rows."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph description")
    if lines[0].startswith("n="):
        n = int(lines[0][2:])
        edges = []
        if len(lines) > 1:
            if not lines[1].startswith("edges="):
                raise ValueError("second line must start with 'edges='")
            for item in lines[1][6:].split(","):
                item = item.strip()
                if not item:
                    continue
                u, v = item.split("-")
                edges.append((int(u), int(v)))
        return Graph.from_edges(n, edges)
    rows = [ln.replace(" ", "") for ln in lines]
    n = len(rows)
    if any(len(r) != n or set(r) - {"0", "1"} for r in rows):
        raise ValueError("adjacency matrix must be square with 0/1 entries")
    adj = tuple(sum(1 << w for w, ch in enumerate(r) if ch == "1") for r in rows)
    return Graph(n, adj)


def graph_generators(g: Graph) -> list[PauliElement]:
    """``X`` on vertex u, ``Z`` on its neighbours, phase +1, for each vertex."""
    return [PauliElement(g.n, 1 << u, g.adj[u], 0) for u in range(g.n)]


def graph_group(g: Graph) -> StabiliserGroup:
    return StabiliserGroup(g.n, tuple(graph_generators(g)))


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge inside the neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nb = g.adj[v]
    adj = tuple(
        row ^ (nb & ~(1 << w)) if (nb >> w) & 1 else row for w, row in enumerate(g.adj)
    )
    return Graph(g.n, adj)


def lc_orbit(g: Graph, cap: int = ORBIT_CAP) -> set[Graph]:
    """Closure of ``g`` under local complementation (labelled graphs)."""
    if g.n > cap:
        raise SizeCapError(f"orbit search is capped at n={cap}")
    seen = {g}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for v in range(cur.n):
            nxt = local_complement(cur, v)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def has_avn(g: Graph) -> bool:
    return g.max_degree() >= 2


def extract_avn_triple(g: Graph):
    """Build an AvN triple from the first vertex of degree at least two.

    Returns ``((u, v, w), triple, case)`` with ``case`` 1 when ``v`` and ``w``
    are adjacent (triple ``g^u, g^v, g^w``) and 2 otherwise (triple
    ``g^u, g^u g^v, g^u g^w``), or None if every degree is at most one.
    """
    gens = graph_generators(g)
    for u in range(g.n):
        nb = g.neighbours(u)
        if len(nb) < 2:
            continue
        v, w = nb[0], nb[1]
        if (g.adj[v] >> w) & 1:
            return (u, v, w), AvnTriple(gens[u], gens[v], gens[w]), 1
        return (u, v, w), AvnTriple(gens[u], mul(gens[u], gens[v]), mul(gens[u], gens[w])), 2
    return None


# -- local Clifford frames ---------------------------------------------------


def _signed(text: str) -> tuple[int, int]:
    """``"-Y"`` -> (phase 2, letter code)."""
    phase = 2 if text.startswith("-") else 0
    return phase, "IXYZ".index(text.lstrip("+-"))


def _one_qubit(phase: int, code: int) -> PauliElement:
    return PauliElement.from_codes((code,), phase)


@dataclass(frozen=True)
class LocalCliffordFrame:
    """Per-qubit images of ``X`` and ``Z`` as signed letters ``(phase, code)``.

    The image of ``Y`` follows from ``Y = iXZ``.  Images must anticommute,
    which leaves exactly 24 frames per site.
    """

    images: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def __post_init__(self):
        for site in self.images:
            (px, cx), (pz, cz) = site
            if px not in (0, 2) or pz not in (0, 2):
                raise ValueError("images must carry a sign +-1")
            if cx == 0 or cz == 0 or cx == cz:
                raise ValueError(f"images {site} do not anticommute")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def from_strings(cls, sites: Sequence[tuple[str, str]]) -> "LocalCliffordFrame":
        return cls(tuple((_signed(a), _signed(b)) for a, b in sites))

    @classmethod
    def identity(cls, n: int) -> "LocalCliffordFrame":
        return cls(((_signed("X"), _signed("Z")),) * n)

    @classmethod
    def uniform(cls, n: int, site) -> "LocalCliffordFrame":
        return cls((site,) * n)

    def image(self, q: int, code: int) -> PauliElement:
        """Conjugation image of a single letter at site ``q`` as a 1-qubit element."""
        (px, cx), (pz, cz) = self.images[q]
        if code == 0:
            return PauliElement.identity(1)
        if code == 1:
            return _one_qubit(px, cx)
        if code == 3:
            return _one_qubit(pz, cz)
        y = mul(_one_qubit(px, cx), _one_qubit(pz, cz))
        return y.with_phase(y.phase + 1)


HADAMARD = (_signed("Z"), _signed("X"))
PHASE_GATE = (_signed("Y"), _signed("Z"))
IDENTITY_SITE = (_signed("X"), _signed("Z"))


def single_qubit_cliffords() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """The 24 signed-letter frames of one site, in a fixed order."""
    out = []
    for px, cx, pz, cz in cartesian((0, 2), (1, 2, 3), (0, 2), (1, 2, 3)):
        if cx != cz:
            out.append(((px, cx), (pz, cz)))
    return out


def conjugate(frame: LocalCliffordFrame, p: PauliElement) -> PauliElement:
    """Image of ``p`` under the frame; letter signs fold into the global phase."""
    if frame.n != p.n:
        raise ValueError(f"length mismatch: {frame.n} vs {p.n} qubits")
    x = z = 0
    phase = p.phase
    for q, code in enumerate(p.codes):
        img = frame.image(q, code)
        x |= img.x << q
        z |= img.z << q
        phase += img.phase
    return PauliElement(p.n, x, z, phase)


def conjugate_group(frame: LocalCliffordFrame, s: StabiliserGroup) -> StabiliserGroup:
    return StabiliserGroup(s.n, tuple(conjugate(frame, g) for g in s.generators))


def local_complement_frame(g: Graph, v: int) -> LocalCliffordFrame:
    """Frame taking the group of ``g`` to the group of ``g * v``.

    ``Z -> -Y`` at ``v`` and ``X -> -Y`` on its neighbours.
    """
    sites = []
    for w in range(g.n):
        if w == v:
            sites.append((_signed("X"), _signed("-Y")))
        elif (g.adj[v] >> w) & 1:
            sites.append((_signed("-Y"), _signed("Z")))
        else:
            sites.append(IDENTITY_SITE)
    return LocalCliffordFrame(tuple(sites))


def same_group(a: StabiliserGroup, b: StabiliserGroup) -> bool:
    """Equal as sets of signed elements."""
    return a.n == b.n and a.k == b.k and all(b.contains(g) for g in a.generators)
