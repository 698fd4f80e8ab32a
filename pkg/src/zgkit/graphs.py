"""Directed multigraphs: strong connectivity and ear decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyGraph, NotStronglyConnected


@dataclass(frozen=True)
class Multigraph:
    """Vertices are arbitrary hashables; parallel edges and self-loops allowed."""

    vertices: tuple
    edges: tuple[tuple, ...]  # (u, v) pairs, identified by their index

    def __post_init__(self):
        vs = set(self.vertices)
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")

    def out_edges(self, u) -> list[int]:
        return [i for i, (a, _) in enumerate(self.edges) if a == u]


def make_multigraph(vertices: Iterable, edges: Iterable[tuple]) -> Multigraph:
    return Multigraph(tuple(vertices), tuple(tuple(e) for e in edges))


def _adjacency(vertices, edges) -> dict:
    adj = {v: [] for v in vertices}
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
    return adj


def strongly_connected_components(vertices: Sequence, edges: Sequence[tuple]) -> list[set]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    adj = _adjacency(vertices, edges)
    index = {}
    lowlink = {}
    on_stack = set()
    stack = []
    components = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w, _ in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def is_strongly_connected(vertices: Sequence, edges: Sequence[tuple]) -> bool:
    if not vertices:
        return True
    return len(strongly_connected_components(vertices, edges)) == 1


def is_union_of_sccs(vertices: Sequence, edges: Sequence[tuple]) -> tuple[bool, list[set]]:
    """Every weakly connected component strongly connected?

    Equivalent to: no edge crosses between two strongly connected components.
    Returns the flag together with the SCC partition.
    """
    comps = strongly_connected_components(vertices, edges)
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    ok = all(comp_of[u] == comp_of[v] for u, v in edges)
    return ok, comps


SIMPLE_CYCLE_WHOLE = "simple_cycle_whole"
REMOVABLE_CYCLE = "removable_cycle"
REMOVABLE_PATH = "removable_path"


@dataclass(frozen=True)
class EarStep:
    """One removable ear of a strongly connected multigraph.

    ``vertices`` lists the ear's vertices in order (for a cycle, without
    repeating the endpoint); ``edges`` are edge indices in traversal order.
    """

    kind: str
    vertices: tuple
    edges: tuple[int, ...]


def ear_decomposition(G: Multigraph) -> EarStep:
    """Build the graph from a simple cycle by ears and report the last piece.

    The construction grows a copy G' of G: an initial simple cycle, then for
    each uncovered vertex a shortest ear attaching it to G', then every
    leftover edge on its own.  The piece added last is removable: deleting its
    edges leaves the previously built (strongly connected) graph, and its
    intermediate vertices touch no other edges.  If nothing was added after
    the initial cycle, G is that cycle.
    """
    if not G.edges:
        raise EmptyGraph("ear decomposition needs at least one edge")
    # vertices incident to no edge cannot be strongly connected to the rest
    used = {u for u, _ in G.edges} | {v for _, v in G.edges}
    if not is_strongly_connected(G.vertices, G.edges) or used != set(G.vertices):
        raise NotStronglyConnected("ear decomposition needs a strongly connected graph")

    adj = _adjacency(G.vertices, G.edges)
    for lst in adj.values():
        lst.sort(key=lambda pair: pair[1])

    cycle_v, cycle_e = _first_simple_cycle(G, adj)
    covered_v = set(cycle_v)
    covered_e = set(cycle_e)
    ears: list[EarStep] = []

    while covered_v != set(G.vertices):
        entry = min((i for i, (u, v) in enumerate(G.edges)
                     if u in covered_v and v not in covered_v))
        u0, v0 = G.edges[entry]
        path_v, path_e = _shortest_path_to_set(adj, v0, covered_v)
        verts = (u0,) + tuple(path_v)
        eids = (entry,) + tuple(path_e)
        if verts[-1] == u0:
            ears.append(EarStep(REMOVABLE_CYCLE, verts[:-1], eids))
        else:
            ears.append(EarStep(REMOVABLE_PATH, verts, eids))
        covered_v.update(path_v)
        covered_e.update(eids)

    leftover = [i for i in range(len(G.edges)) if i not in covered_e]
    if leftover:
        last = leftover[-1]
        u, v = G.edges[last]
        if u == v:
            return EarStep(REMOVABLE_CYCLE, (u,), (last,))
        return EarStep(REMOVABLE_PATH, (u, v), (last,))
    if ears:
        return ears[-1]
    return EarStep(SIMPLE_CYCLE_WHOLE, tuple(cycle_v), tuple(cycle_e))


def _first_simple_cycle(G: Multigraph, adj) -> tuple[list, list[int]]:
    # walk along least-numbered out-edges until a vertex repeats
    start = G.edges[0][0]
    path = [start]
    eids: list[int] = []
    pos = {start: 0}
    cur = start
    while True:
        nxt, eid = adj[cur][0]
        if nxt in pos:
            i = pos[nxt]
            return path[i:], eids[i:] + [eid]
        path.append(nxt)
        eids.append(eid)
        pos[nxt] = len(path) - 1
        cur = nxt


def _shortest_path_to_set(adj, source, targets: set) -> tuple[list, list[int]]:
    """BFS from source until hitting ``targets``; neighbor order by edge index."""
    if source in targets:
        return [source], []
    parent = {source: (None, None)}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, eid in adj[v]:
            if w in parent:
                continue
            parent[w] = (v, eid)
            if w in targets:
                verts = [w]
                edges = []
                cur = w
                while parent[cur][0] is not None:
                    prev, e = parent[cur]
                    verts.append(prev)
                    edges.append(e)
                    cur = prev
                verts.reverse()
                edges.reverse()
                return verts, edges
            queue.append(w)
    raise NotStronglyConnected("no path back to the covered set")  # pragma: no cover
