"""Directed graphs with string vertex keys, and the graph algorithms the
slider-graph theorems rely on.

A :class:`Digraph` is immutable.  Vertices are kept sorted by key and arrows
sorted by ``(src, dst, label)``, so two graphs built from the same data are
equal field by field and export to identical bytes.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional

Label = Optional[str]

DEFAULT_ISO_CAP = 5000


def _arrow_order(arrow: tuple[int, int, Label]):
    s, d, lab = arrow
    return (s, d, lab is not None, lab or "")


@dataclass(frozen=True, eq=False)
class Digraph:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[int, int, Label], ...]
    name: str = "g"

    def __post_init__(self):
        vs = self.vertices
        for a, b in zip(vs, vs[1:]):
            if not a < b:
                raise ValueError(f"vertex keys must be distinct and sorted: {a!r}, {b!r}")
        n = len(vs)
        prev = None
        for arrow in self.arrows:
            s, d, _ = arrow
            if not (0 <= s < n and 0 <= d < n):
                raise ValueError(f"arrow {arrow} points outside the vertex list")
            key = _arrow_order(arrow)
            if prev is not None and not prev < key:
                raise ValueError(f"arrows must be sorted without duplicates near {arrow}")
            prev = key

    @classmethod
    def from_keys(
        cls,
        vertices: Iterable[str],
        arrows: Iterable[tuple[str, str, Label]],
        name: str = "g",
    ) -> Digraph:
        """Build from vertex keys and ``(src_key, dst_key, label)`` triples.

        Duplicate triples are merged.  Every arrow endpoint must be a vertex.
        """
        vlist = sorted(set(vertices))
        index = {k: i for i, k in enumerate(vlist)}
        triples = set()
        for s, d, lab in arrows:
            try:
                triples.add((index[s], index[d], lab))
            except KeyError as exc:
                raise ValueError(f"arrow endpoint {exc.args[0]!r} is not a vertex") from None
        return cls(tuple(vlist), tuple(sorted(triples, key=_arrow_order)), name)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.name, self.vertices, self.arrows) == (other.name, other.vertices, other.arrows)

    def same_graph(self, other: Digraph) -> bool:
        """Equal vertex and arrow sets, ignoring the name."""
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.name, self.vertices, self.arrows))

    def __repr__(self):
        return f"Digraph({self.name!r}, {len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def renamed(self, name: str) -> Digraph:
        return Digraph(self.vertices, self.arrows, name)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    @cached_property
    def index(self) -> dict[str, int]:
        return {k: i for i, k in enumerate(self.vertices)}

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for s, d, _ in self.arrows:
            adj[s].append(d)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for s, d, _ in self.arrows:
            adj[d].append(s)
        return tuple(tuple(a) for a in adj)

    def out_degree(self, key: str) -> int:
        return len(self.out_adj[self.index[key]])

    def in_degree(self, key: str) -> int:
        return len(self.in_adj[self.index[key]])

    def arrow_keys(self) -> Iterator[tuple[str, str, Label]]:
        vs = self.vertices
        for s, d, lab in self.arrows:
            yield vs[s], vs[d], lab

    def has_arrow(self, src: str, dst: str) -> bool:
        s, d = self.index.get(src), self.index.get(dst)
        if s is None or d is None:
            return False
        return d in self.out_adj[s]

    def without_labels(self) -> Digraph:
        return Digraph.from_keys(self.vertices, ((s, d, None) for s, d, _ in self.arrow_keys()), self.name)


def induced_subgraph(g: Digraph, keep: Iterable[str], name: str | None = None) -> Digraph:
    keep = set(keep)
    for k in sorted(keep):
        if k not in g.index:
            raise KeyError(f"unknown vertex {k!r}")
    arrows = ((s, d, lab) for s, d, lab in g.arrow_keys() if s in keep and d in keep)
    return Digraph.from_keys(keep, arrows, name or g.name)


def _walk_levels(g: Digraph, start: int) -> Iterator[set[int]]:
    """Yield, for e = 1, 2, ..., the set of vertices reachable by a walk of length exactly e."""
    adj = g.out_adj
    level = {start}
    while True:
        level = {v for u in level for v in adj[u]}
        yield level


def step_d_induced(g: Digraph, x: Iterable[str], d: int, strict: bool = False, name: str | None = None) -> Digraph:
    """Graph on ``x`` with u -> v iff ``g`` has a walk u ~> v of length <= d (or exactly d if strict).

    Walks have length at least 1 and may pass through vertices outside ``x``.
    """
    if d < 1:
        raise ValueError("step d must be a positive integer")
    xs = sorted(set(x))
    for k in xs:
        if k not in g.index:
            raise KeyError(f"unknown vertex {k!r}")
    targets = {g.index[k]: k for k in xs}
    arrows = []
    for k in xs:
        reached: set[int] = set()
        levels = _walk_levels(g, g.index[k])
        for e in range(1, d + 1):
            level = next(levels)
            if strict:
                if e == d:
                    reached = level
            else:
                reached |= level
        arrows.extend((k, targets[v], None) for v in reached if v in targets)
    return Digraph.from_keys(xs, arrows, name or f"{g.name}_step{d}")


def tensor_product(g1: Digraph, g2: Digraph, name: str | None = None) -> Digraph:
    """Direct product: (u1,u2) -> (v1,v2) iff u1 -> v1 and u2 -> v2."""
    if not g1.vertices or not g2.vertices:
        raise ValueError("tensor product needs nonempty factors")

    def key(a: str, b: str) -> str:
        return f"({a},{b})"

    def label(l1: Label, l2: Label) -> Label:
        if l1 is None:
            return l2
        if l2 is None:
            return l1
        return f"{l1},{l2}"

    vertices = [key(a, b) for a in g1.vertices for b in g2.vertices]
    arrows = [
        (key(s1, s2), key(d1, d2), label(l1, l2))
        for s1, d1, l1 in g1.arrow_keys()
        for s2, d2, l2 in g2.arrow_keys()
    ]
    return Digraph.from_keys(vertices, arrows, name or f"{g1.name}x{g2.name}")


def cycle_digraph(k: int) -> Digraph:
    """Directed cycle 0 -> 1 -> ... -> k-1 -> 0 (a single loop when k = 1)."""
    if k < 1:
        raise ValueError("cycle length must be positive")
    return Digraph.from_keys(
        (str(i) for i in range(k)),
        ((str(i), str((i + 1) % k), None) for i in range(k)),
        f"C{k}",
    )


def line_digraph(g: Digraph, name: str | None = None) -> Digraph:
    """Vertices are the arrows of ``g`` (keyed ``src>dst>label``); a -> b iff dst(a) = src(b)."""

    def key(s: str, d: str, lab: Label) -> str:
        return f"{s}>{d}>{lab or ''}"

    by_src: dict[str, list[str]] = {}
    keys = []
    for s, d, lab in g.arrow_keys():
        k = key(s, d, lab)
        keys.append((k, d))
        by_src.setdefault(s, []).append(k)
    arrows = [(k, k2, None) for k, d in keys for k2 in by_src.get(d, ())]
    return Digraph.from_keys((k for k, _ in keys), arrows, name or f"L({g.name})")


def _tarjan(g: Digraph) -> list[list[int]]:
    adj = g.out_adj
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(comp)
    return comps


def _weak_components(g: Digraph) -> list[list[int]]:
    n = g.num_vertices
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, d, _ in g.arrows:
        rs, rd = find(s), find(d)
        if rs != rd:
            parent[max(rs, rd)] = min(rs, rd)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def connectivity(g: Digraph, mode: str = "strong") -> list[list[str]]:
    """Strongly or weakly connected components, each sorted, listed by smallest member."""
    if mode == "strong":
        comps = _tarjan(g)
    elif mode == "weak":
        comps = _weak_components(g)
    else:
        raise ValueError(f"mode must be 'strong' or 'weak', not {mode!r}")
    # vertex indices follow key order, so index order is key order
    comps = sorted(sorted(c) for c in comps)
    return [[g.vertices[v] for v in c] for c in comps]


def is_connected(g: Digraph, mode: str = "strong") -> bool:
    return len(connectivity(g, mode)) <= 1


def eulerian_cycle(g: Digraph) -> list[tuple[str, str, Label]] | None:
    """Closed trail through every arrow once, or ``None`` if there is none.

    Hierholzer's algorithm starting at the least vertex with an outgoing
    arrow and always taking the least unused arrow (arrows are stored in
    ``(src, dst, label)`` order).
    """
    if not g.arrows:
        return []
    outdeg = Counter(s for s, _, _ in g.arrows)
    indeg = Counter(d for _, d, _ in g.arrows)
    if outdeg != indeg:
        return None
    used_vertices = set(outdeg)
    comps = [c for c in _weak_components(g) if used_vertices.intersection(c)]
    if len(comps) != 1:
        return None

    out_arrows: list[list[int]] = [[] for _ in g.vertices]
    for i, (s, _, _) in enumerate(g.arrows):
        out_arrows[s].append(i)
    pos = [0] * g.num_vertices
    start = min(used_vertices)
    stack: list[tuple[int, int | None]] = [(start, None)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        if pos[v] < len(out_arrows[v]):
            a = out_arrows[v][pos[v]]
            pos[v] += 1
            stack.append((g.arrows[a][1], a))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    vs = g.vertices
    return [(vs[g.arrows[a][0]], vs[g.arrows[a][1]], g.arrows[a][2]) for a in circuit]


@dataclass(frozen=True)
class IsoCheck:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _pair_counts(g: Digraph) -> Counter:
    return Counter((s, d) for s, d, _ in g.arrows)


def verify_iso(g1: Digraph, g2: Digraph, f: Mapping[str, str]) -> IsoCheck:
    """Check that the vertex map ``f`` is a digraph isomorphism (labels ignored)."""
    missing = [k for k in g1.vertices if k not in f]
    if missing:
        return IsoCheck(False, f"map not total: no image for {missing[0]!r}")
    image = [f[k] for k in g1.vertices]
    unknown = [v for v in image if v not in g2.index]
    if unknown:
        return IsoCheck(False, f"image {unknown[0]!r} is not a vertex of {g2.name}")
    seen: dict[str, str] = {}
    for k, v in zip(g1.vertices, image):
        if v in seen:
            return IsoCheck(False, f"not injective: {seen[v]!r} and {k!r} both map to {v!r}")
        seen[v] = k
    if len(seen) != g2.num_vertices:
        hit = set(seen)
        miss = next(v for v in g2.vertices if v not in hit)
        return IsoCheck(False, f"not surjective: {miss!r} has no preimage")
    if g1.num_arrows != g2.num_arrows:
        return IsoCheck(False, f"arrow counts differ: {g1.num_arrows} vs {g2.num_arrows}")
    idx = [g2.index[v] for v in image]
    mapped = Counter((idx[s], idx[d]) for s, d, _ in g1.arrows)
    target = _pair_counts(g2)
    if mapped != target:
        for (s, d), c in sorted(mapped.items()):
            if target.get((s, d), 0) != c:
                return IsoCheck(
                    False,
                    f"arrow {g2.vertices[s]!r}->{g2.vertices[d]!r} has multiplicity {c} in the image "
                    f"but {target.get((s, d), 0)} in {g2.name}",
                )
        for (s, d), c in sorted(target.items()):
            if mapped.get((s, d), 0) != c:
                return IsoCheck(False, f"arrow {g2.vertices[s]!r}->{g2.vertices[d]!r} is not hit")
    return IsoCheck(True, "isomorphism")


@dataclass(frozen=True)
class IsoWitness:
    mapping: dict[str, str] = field(hash=False)


def _refine_colors(graphs: list[Digraph]) -> list[list[int]]:
    """Colour refinement run jointly on several graphs so colours are comparable."""
    colors = [[0] * g.num_vertices for g in graphs]
    n_colors = 1
    while True:
        sigs = []
        for g, col in zip(graphs, colors):
            loops = Counter(s for s, d, _ in g.arrows if s == d)
            sigs.append([
                (
                    col[v],
                    loops[v],
                    tuple(sorted(Counter(col[w] for w in g.out_adj[v]).items())),
                    tuple(sorted(Counter(col[w] for w in g.in_adj[v]).items())),
                )
                for v in range(g.num_vertices)
            ])
        palette = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        new = [[palette[s] for s in sg] for sg in sigs]
        if len(palette) == n_colors:
            return new
        colors, n_colors = new, len(palette)


def find_iso(g1: Digraph, g2: Digraph, cap: int = DEFAULT_ISO_CAP) -> IsoWitness | None:
    """Backtracking isomorphism search with colour-refinement pruning (labels ignored)."""
    if max(g1.num_vertices, g2.num_vertices) > cap:
        raise ValueError(
            f"graphs exceed the search cap of {cap} vertices; "
            "use verify_iso with an explicit vertex map instead"
        )
    if g1.num_vertices != g2.num_vertices or g1.num_arrows != g2.num_arrows:
        return None
    n = g1.num_vertices
    if n == 0:
        return IsoWitness({})
    c1, c2 = _refine_colors([g1, g2])
    if sorted(c1) != sorted(c2):
        return None
    m1, m2 = _pair_counts(g1), _pair_counts(g2)

    # visit g1 in BFS order (ignoring orientation) so each vertex has mapped neighbours
    undirected = [set(g1.out_adj[v]) | set(g1.in_adj[v]) for v in range(n)]
    order: list[int] = []
    seen = [False] * n
    class_size = Counter(c1)
    for root in sorted(range(n), key=lambda v: (class_size[c1[v]], v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(undirected[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(c2[v], []).append(v)
    nbrs1 = [sorted(undirected[v]) for v in range(n)]
    fmap = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        if m1.get((v, v), 0) != m2.get((w, w), 0):
            return False
        for u in nbrs1[v]:
            x = fmap[u]
            if x < 0:
                continue
            if m1.get((v, u), 0) != m2.get((w, x), 0) or m1.get((u, v), 0) != m2.get((x, w), 0):
                return False
        return True

    def mapped_degree_ok(v: int, w: int) -> bool:
        # arrows from w to already-used vertices must all come from mapped neighbours of v
        hits = sum(1 for x in g2.out_adj[w] if used[x] and x != w) + sum(
            1 for x in g2.in_adj[w] if used[x] and x != w
        )
        want = sum(1 for x in g1.out_adj[v] if fmap[x] >= 0 and x != v) + sum(
            1 for x in g1.in_adj[v] if fmap[x] >= 0 and x != v
        )
        return hits == want

    stack = [0]
    candidates: list[list[int]] = [by_color[c1[order[0]]]]
    while stack:
        depth = len(stack) - 1
        v = order[depth]
        i = stack[-1]
        if fmap[v] >= 0:
            used[fmap[v]] = False
            fmap[v] = -1
        cands = candidates[depth]
        while i < len(cands):
            w = cands[i]
            i += 1
            if not used[w] and consistent(v, w) and mapped_degree_ok(v, w):
                break
        else:
            stack.pop()
            candidates.pop()
            continue
        stack[-1] = i
        fmap[v] = w
        used[w] = True
        if depth + 1 == n:
            return IsoWitness({g1.vertices[a]: g2.vertices[fmap[a]] for a in range(n)})
        nxt = order[depth + 1]
        stack.append(0)
        candidates.append(by_color[c1[nxt]])
    return None
