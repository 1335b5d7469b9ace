"""Generator-sharing graph of a square-free monomial ideal.

Vertices are the generator indices 1..n; an edge joins i and j exactly when
gcd(f_i, f_j) != 1.  Components are classified by their cycle content, which
is what the relation-type classifier keys on: a connected component is a
tree, carries a unique cycle (odd or even), or carries several independent
cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .monomials import SquareFreeIdeal, mono_gcd, render_monomial
from .taylor import Sequence


@dataclass(frozen=True)
class GeneratorGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]  # aligned with vertices

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)

    def has_edge(self, i: int, j: int) -> bool:
        a, b = min(i, j), max(i, j)
        return (a, b) in self.edges


def _graph_on(ideal: SquareFreeIdeal, vertices: Iterable[int]) -> GeneratorGraph:
    verts = tuple(sorted(set(vertices)))
    edges = []
    for pos, i in enumerate(verts):
        for j in verts[pos + 1:]:
            if not mono_gcd(ideal.generator(i), ideal.generator(j)).is_one:
                edges.append((i, j))
    labels = tuple(
        f"y{i}: {render_monomial(ideal.generator(i), ideal.table)}"
        for i in verts)
    return GeneratorGraph(verts, tuple(edges), labels)


def build_graph(ideal: SquareFreeIdeal) -> GeneratorGraph:
    return _graph_on(ideal, range(1, ideal.n + 1))


def induced_subgraph(ideal: SquareFreeIdeal, alpha: Sequence,
                     beta: Sequence) -> GeneratorGraph:
    """Subgraph on the distinct indices appearing in alpha or beta."""
    return _graph_on(ideal, set(alpha) | set(beta))


def components(g: GeneratorGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            node = stack.pop()
            comp.append(node)
            for nb in adj[node]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        out.append(tuple(sorted(comp)))
    return out


@dataclass(frozen=True)
class ComponentClass:
    """Cycle content of one connected component.

    kind is "forest", "unique_odd_cycle", "unique_even_cycle", or
    "multi_cycle"; cycle lists the vertices of the unique cycle when there
    is one; independent_cycles counts |E| - |V| + 1.
    """

    vertices: tuple[int, ...]
    kind: str
    cycle: Optional[tuple[int, ...]]
    independent_cycles: int


def classify_component(g: GeneratorGraph, comp: tuple[int, ...]) -> ComponentClass:
    comp_set = set(comp)
    edges = [(i, j) for i, j in g.edges if i in comp_set]
    ne, nv = len(edges), len(comp)
    extra = ne - nv + 1
    if extra == 0:
        return ComponentClass(comp, "forest", None, 0)
    if extra > 1:
        return ComponentClass(comp, "multi_cycle", None, extra)
    cycle = _unique_cycle(comp, edges)
    kind = "unique_odd_cycle" if len(cycle) % 2 == 1 else "unique_even_cycle"
    return ComponentClass(comp, kind, cycle, 1)


def _unique_cycle(comp: tuple[int, ...],
                  edges: list[tuple[int, int]]) -> tuple[int, ...]:
    """With |E| = |V| on a connected component: spanning tree from the least
    vertex plus the single leftover edge closes the unique cycle."""
    adj: dict[int, list[int]] = {v: [] for v in comp}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    root = comp[0]
    parent: dict[int, Optional[int]] = {root: None}
    order = [root]
    frontier = [root]
    tree_edges = set()
    while frontier:
        nxt = []
        for v in frontier:
            for nb in sorted(adj[v]):
                if nb not in parent:
                    parent[nb] = v
                    tree_edges.add((min(v, nb), max(v, nb)))
                    nxt.append(nb)
        frontier = nxt
        order.extend(nxt)
    leftover = [e for e in edges if e not in tree_edges]
    assert len(leftover) == 1, "component does not carry exactly one cycle"
    u, w = leftover[0]

    def path_to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    pu, pw = path_to_root(u), path_to_root(w)
    common = set(pu) & set(pw)
    lca = next(v for v in pu if v in common)
    cycle = pu[:pu.index(lca) + 1] + list(reversed(pw[:pw.index(lca)]))
    return _canonical_cycle(cycle)


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate to start at the least vertex, then pick the direction whose
    second vertex is smaller."""
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    rev = [rot[0]] + list(reversed(rot[1:]))
    return tuple(rev) if rev[1] < rot[1] else tuple(rot)


def to_dot(g: GeneratorGraph, name: str = "generators") -> str:
    lines = [f"graph {name} {{"]
    label_of = dict(zip(g.vertices, g.labels))
    for v in g.vertices:
        lines.append(f'  y{v} [label="{label_of[v]}"];')
    for i, j in g.edges:
        lines.append(f"  y{i} -- y{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WalkWitness:
    """A closed even walk in the generator graph, recorded as the vertex
    itinerary (first == last) together with the traversed edges."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.edges)


def even_closed_walk(ideal: SquareFreeIdeal, witness) -> WalkWitness:
    """The closed walk carried by an irredundancy witness.

    For a witness with distinct row (a_1..a_s) against (b_1^{s-1}, b_2) the
    itinerary is b_1, a_1, b_1, ..., a_{s-2}, b_1, a_{s-1}, b_2, a_s, b_1,
    which has even length 2s.  Every step is checked to be a genuine edge.
    """
    avec, b1, b2 = witness.avec, witness.b1, witness.b2
    s = len(avec)
    itinerary = [b1]
    for i in range(s - 2):
        itinerary.extend([avec[i], b1])
    itinerary.extend([avec[s - 2], b2, avec[s - 1], b1])
    edges = []
    for u, v in zip(itinerary, itinerary[1:]):
        if mono_gcd(ideal.generator(u), ideal.generator(v)).is_one:
            raise ValueError(f"walk step {u}-{v} is not an edge")
        edges.append((min(u, v), max(u, v)))
    assert len(edges) == 2 * s
    return WalkWitness(tuple(itinerary), tuple(edges))
