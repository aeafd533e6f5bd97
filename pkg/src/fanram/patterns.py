"""Target patterns and exact containment oracles.

A target is what a search forbids on one color class: a clique, a generalized
fan, a matching, disjoint copies of a connected pattern, or an explicit graph.
All oracles are exact and deterministic: candidate vertices are always tried
in ascending index order, so the first witness found is reproducible.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import BadParam, ParseError
from .graph6 import decode, encode
from .graphs import Graph, bits, complete, copies as graph_copies
from .graphs import generalized_fan, is_connected, mask_of


@dataclass(frozen=True)
class Clique:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise BadParam("clique size must be positive")


@dataclass(frozen=True)
class Fan:
    """K_1 joined to n disjoint copies of K_t."""

    t: int
    n: int

    def __post_init__(self):
        if self.t < 1 or self.n < 1:
            raise BadParam("fan parameters must be positive")


@dataclass(frozen=True)
class Matching:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise BadParam("matching size must be positive")


@dataclass(frozen=True)
class Copies:
    count: int
    inner: "TargetPattern"

    def __post_init__(self):
        if self.count < 1:
            raise BadParam("copy count must be positive")


@dataclass(frozen=True)
class Explicit:
    graph: Graph


TargetPattern = Union[Clique, Fan, Matching, Copies, Explicit]


def copies_pattern(count: int, inner: TargetPattern) -> TargetPattern:
    """Copies constructor that flattens nesting and absorbs matchings."""
    if count < 1:
        raise BadParam("copy count must be positive")
    inner = normalize_pattern(inner)
    if isinstance(inner, Copies):
        count *= inner.count
        inner = inner.inner
    if isinstance(inner, Matching):
        return Matching(count * inner.size)
    if count == 1:
        return inner
    return Copies(count, inner)


def normalize_pattern(p: TargetPattern) -> TargetPattern:
    if isinstance(p, Copies):
        return copies_pattern(p.count, p.inner)
    return p


def pattern_order(p: TargetPattern) -> int:
    if isinstance(p, Clique):
        return p.size
    if isinstance(p, Fan):
        return p.t * p.n + 1
    if isinstance(p, Matching):
        return 2 * p.size
    if isinstance(p, Copies):
        return p.count * pattern_order(p.inner)
    return p.graph.order


def pattern_graph(p: TargetPattern) -> Graph:
    """The labeled graph a pattern stands for (hub-first for fans)."""
    if isinstance(p, Clique):
        return complete(p.size)
    if isinstance(p, Fan):
        return generalized_fan(p.t, p.n)
    if isinstance(p, Matching):
        return graph_copies(p.size, complete(2))
    if isinstance(p, Copies):
        return graph_copies(p.count, pattern_graph(p.inner))
    return p.graph


def parse_target(text: str) -> TargetPattern:
    """Parse the target grammar.

    K<m>, F:<t>,<n>, M:<s>, G6:<graph6>, optionally prefixed by <s>x for
    disjoint copies. Copies are normalized on construction.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty target", 0)
    i = 0
    count = None
    mcopy = re.match(r"(\d+)x", s)
    if mcopy:
        count = int(mcopy.group(1))
        if count == 0:
            raise BadParam("copy count must be positive")
        i = mcopy.end()
    body = s[i:]
    if body.startswith("K"):
        m = re.fullmatch(r"K(\d+)", body)
        if not m:
            raise ParseError("expected digits after 'K'", i + 1)
        if int(m.group(1)) == 0:
            raise BadParam("clique size must be positive")
        inner: TargetPattern = Clique(int(m.group(1)))
    elif body.startswith("F"):
        m = re.fullmatch(r"F:(\d+),(\d+)", body)
        if not m:
            raise ParseError("expected 'F:<t>,<n>'", i + 1)
        t, n = int(m.group(1)), int(m.group(2))
        if t == 0 or n == 0:
            raise BadParam("fan parameters must be positive")
        inner = Fan(t, n)
    elif body.startswith("M"):
        m = re.fullmatch(r"M:(\d+)", body)
        if not m:
            raise ParseError("expected 'M:<s>'", i + 1)
        if int(m.group(1)) == 0:
            raise BadParam("matching size must be positive")
        inner = Matching(int(m.group(1)))
    elif body.startswith("G6:"):
        inner = Explicit(decode(body[3:]))
    else:
        raise ParseError(f"unrecognized target {body!r}", i)
    if count is None:
        return inner
    return copies_pattern(count, inner)


def format_target(p: TargetPattern) -> str:
    if isinstance(p, Clique):
        return f"K{p.size}"
    if isinstance(p, Fan):
        return f"F:{p.t},{p.n}"
    if isinstance(p, Matching):
        return f"M:{p.size}"
    if isinstance(p, Copies):
        return f"{p.count}x{format_target(p.inner)}"
    return f"G6:{encode(p.graph)}"


@dataclass(frozen=True)
class EmbeddingWitness:
    """Host vertices of one embedding, grouped by pattern component.

    Cliques use one group; matchings one group per edge; fans a singleton hub
    group followed by one group per blade; disjoint copies one group per copy,
    listing host vertices in the inner pattern's label order.
    """

    pattern_order: int
    groups: tuple[tuple[int, ...], ...]

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for grp in self.groups for v in grp)


# ---------------------------------------------------------------------------
# row-level search kernels (shared with the coloring search)
# ---------------------------------------------------------------------------


def _greedy_bound(rows, mask: int, cutoff: int) -> int:
    """Greedy color-class count of mask, capped at cutoff. Upper-bounds the
    clique number of the induced subgraph."""
    classes: list[int] = []
    for v in bits(mask):
        row = rows[v]
        for i, cm in enumerate(classes):
            if not cm & row:
                classes[i] = cm | 1 << v
                break
        else:
            classes.append(1 << v)
            if len(classes) >= cutoff:
                return cutoff
    return len(classes)


def _clique_search(rows, avail: int, m: int) -> tuple[int, ...] | None:
    """First m-clique within avail in ascending order, or None."""
    if m <= 0:
        return ()
    out: list[int] = []

    def expand(cur: list[int], cand: int) -> bool:
        if len(cur) == m:
            out.extend(cur)
            return True
        if len(cur) + cand.bit_count() < m:
            return False
        if len(cur) + _greedy_bound(rows, cand, m - len(cur)) < m:
            return False
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cur.append(v)
            if expand(cur, rest & rows[v]):
                return True
            cur.pop()
            if len(cur) + rest.bit_count() < m:
                return False
        return False

    if expand([], avail):
        return tuple(out)
    return None


def _max_clique(rows, avail: int) -> tuple[int, ...]:
    best: list[int] = []

    def expand(cur: list[int], cand: int):
        nonlocal best
        if len(cur) > len(best):
            best = cur.copy()
        if not cand:
            return
        need = len(best) - len(cur) + 1
        if cand.bit_count() < need:
            return
        if _greedy_bound(rows, cand, need) < need:
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cur.append(v)
            expand(cur, rest & rows[v])
            cur.pop()
            if len(cur) + rest.bit_count() <= len(best):
                return

    expand([], avail)
    return tuple(best)


def _cliques_iter(rows, avail: int, t: int, min_v: int) -> Iterator[tuple[int, ...]]:
    """All ascending t-cliques within avail whose lowest vertex is >= min_v."""
    start = avail & ~((1 << min_v) - 1) if min_v else avail

    def extend(cur: list[int], cand: int):
        if len(cur) == t:
            yield tuple(cur)
            return
        rest = cand
        while rest:
            if len(cur) + rest.bit_count() < t:
                return
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cur.append(v)
            yield from extend(cur, rest & rows[v])
            cur.pop()

    yield from extend([], start)


def _pack_iter(rows, avail: int, t: int, k: int, min_v: int) -> Iterator[list[tuple[int, ...]]]:
    """All families of k disjoint t-cliques within avail, copies ordered by
    ascending lowest vertex starting at min_v."""
    if k == 0:
        yield []
        return
    if avail.bit_count() < k * t:
        return
    for cl in _cliques_iter(rows, avail, t, min_v):
        rest_avail = avail & ~mask_of(cl)
        for rest in _pack_iter(rows, rest_avail, t, k - 1, cl[0] + 1):
            yield [cl] + rest


def _fan_iter(rows, avail: int, t: int, n: int, min_center: int) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    """All fan embeddings within avail with center >= min_center, lazily."""
    centers = avail & ~((1 << min_center) - 1) if min_center else avail
    for c in bits(centers):
        for packing in _pack_iter(rows, avail & rows[c], t, n, 0):
            yield c, packing


def _embed_iter(rows, pat: Graph, avail: int) -> Iterator[list[int]]:
    """All injective maps of pat into the host (subgraph, not induced),
    restricted to avail, pattern vertices mapped in label order."""
    p = pat.order
    degs = [r.bit_count() for r in pat.rows]
    mapping = [-1] * p
    state = {"used": 0}

    def rec(i: int):
        if i == p:
            yield mapping.copy()
            return
        cand = avail & ~state["used"]
        for pj in bits(pat.rows[i] & ((1 << i) - 1)):
            cand &= rows[mapping[pj]]
        for v in bits(cand):
            if rows[v].bit_count() < degs[i]:
                continue
            mapping[i] = v
            state["used"] |= 1 << v
            yield from rec(i + 1)
            state["used"] &= ~(1 << v)
            mapping[i] = -1

    yield from rec(0)


def _components_rows(rows, n: int) -> list[int]:
    remaining = (1 << n) - 1
    out = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        remaining &= ~seen
    return out


def _max_matching_rows(rows, n: int) -> list[tuple[int, int]]:
    """Maximum matching via augmenting paths with blossom contraction."""
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in bits(rows[v]):
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    def find_path(root: int) -> bool:
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = set()
            v = a
            while True:
                v = base[v]
                seen.add(v)
                if match[v] == -1:
                    break
                v = p[match[v]]
            v = b
            while base[v] not in seen:
                v = p[match[v]]
            return base[v]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]):
            while base[v] != b:
                blossom[base[v]] = True
                blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while q:
            v = q.popleft()
            for to in bits(rows[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u2 = to
                        while u2 != -1:
                            pv = p[u2]
                            ppv = match[pv]
                            match[u2] = pv
                            match[pv] = u2
                            u2 = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for root in range(n):
        if match[root] == -1:
            find_path(root)
    return sorted(
        {(min(v, match[v]), max(v, match[v])) for v in range(n) if match[v] != -1}
    )


# ---------------------------------------------------------------------------
# public oracles
# ---------------------------------------------------------------------------


def contains_clique(g: Graph, m: int) -> EmbeddingWitness | None:
    """First m-clique of g in ascending vertex order, if any."""
    if m < 1:
        raise BadParam("clique size must be positive")
    hit = _clique_search(g.rows, (1 << g.order) - 1, m)
    if hit is None:
        return None
    return EmbeddingWitness(m, (hit,))


def clique_number(g: Graph) -> int:
    return len(_max_clique(g.rows, (1 << g.order) - 1))


def independence_number(g: Graph) -> int:
    """Size of a largest independent set (clique number of the complement)."""
    full = (1 << g.order) - 1
    comp_rows = tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows))
    return len(_max_clique(comp_rows, full))


def max_matching(g: Graph) -> EmbeddingWitness:
    """A maximum matching; edges sorted, pattern_order twice the edge count."""
    pairs = _max_matching_rows(g.rows, g.order)
    return EmbeddingWitness(2 * len(pairs), tuple(pairs))


def kt_packing(g: Graph, t: int, n: int) -> EmbeddingWitness | None:
    """n pairwise-disjoint t-cliques, copies ordered by lowest vertex."""
    if t < 1 or n < 1:
        raise BadParam("packing parameters must be positive")
    for packing in _pack_iter(g.rows, (1 << g.order) - 1, t, n, 0):
        return EmbeddingWitness(t * n, tuple(packing))
    return None


def contains_fan(g: Graph, t: int, n: int) -> EmbeddingWitness | None:
    """First fan embedding: centers tried ascending, blades packed within the
    center's neighborhood in ascending order."""
    if t < 1 or n < 1:
        raise BadParam("fan parameters must be positive")
    for c, packing in _fan_iter(g.rows, (1 << g.order) - 1, t, n, 0):
        return EmbeddingWitness(t * n + 1, ((c,),) + tuple(packing))
    return None


def _copy_embeddings(rows, inner: TargetPattern, avail: int, low_key: int):
    """Embeddings of a connected inner pattern within avail as (key, mapping)
    pairs; key is the canonical ordering handle between successive copies."""
    if isinstance(inner, Clique):
        for cl in _cliques_iter(rows, avail, inner.size, low_key):
            yield cl[0], cl
    elif isinstance(inner, Fan):
        for c, packing in _fan_iter(rows, avail, inner.t, inner.n, low_key):
            yield c, (c,) + tuple(v for cl in packing for v in cl)
    else:
        # explicit inner: no between-copy canonical order, so low_key is unused
        for mp in _embed_iter(rows, inner.graph, avail):
            yield 0, tuple(mp)


def _pack_copies(rows, avail: int, inner: TargetPattern, k: int, p: int):
    if k == 0:
        return []
    if avail.bit_count() < k * p:
        return None

    def rec(cur_avail: int, need: int, low_key: int):
        if need == 0:
            return []
        if cur_avail.bit_count() < need * p:
            return None
        for key, flat in _copy_embeddings(rows, inner, cur_avail, low_key):
            rest = rec(cur_avail & ~mask_of(flat), need - 1, key + 1)
            if rest is not None:
                return [flat] + rest
        return None

    return rec(avail, k, 0)


def _copies_rows(rows, n: int, count: int, inner: TargetPattern) -> EmbeddingWitness | None:
    if count < 1:
        raise BadParam("copy count must be positive")
    inner = normalize_pattern(inner)
    if isinstance(inner, (Matching, Copies)):
        raise BadParam("inner pattern of copies must be connected")
    if isinstance(inner, Explicit) and (
        inner.graph.order == 0 or not is_connected(inner.graph)
    ):
        raise BadParam("inner pattern of copies must be connected")
    p = pattern_order(inner)
    remaining = count
    groups: list[tuple[int, ...]] = []
    for comp in _components_rows(rows, n):
        if remaining == 0:
            break
        cap = comp.bit_count() // p
        if cap == 0:
            continue
        k = min(cap, remaining)
        while k >= 1:
            found = _pack_copies(rows, comp, inner, k, p)
            if found is not None:
                groups.extend(found)
                remaining -= k
                break
            k -= 1
    if remaining:
        return None
    return EmbeddingWitness(count * p, tuple(groups))


def contains_copies(g: Graph, count: int, inner: TargetPattern) -> EmbeddingWitness | None:
    """count disjoint copies of a connected inner pattern.

    Each copy lies within one connected component, so the search decomposes by
    component: a component of c vertices holds at most c // order(inner)
    copies, and components contribute independently.
    """
    return _copies_rows(g.rows, g.order, count, inner)


def _contains_rows(rows, n: int, target: TargetPattern) -> EmbeddingWitness | None:
    t = normalize_pattern(target)
    if isinstance(t, Clique):
        if t.size < 1:
            raise BadParam("clique size must be positive")
        hit = _clique_search(rows, (1 << n) - 1, t.size)
        return None if hit is None else EmbeddingWitness(t.size, (hit,))
    if isinstance(t, Matching):
        pairs = _max_matching_rows(rows, n)
        if len(pairs) < t.size:
            return None
        return EmbeddingWitness(2 * t.size, tuple(pairs[: t.size]))
    if isinstance(t, Fan):
        for c, packing in _fan_iter(rows, (1 << n) - 1, t.t, t.n, 0):
            return EmbeddingWitness(t.t * t.n + 1, ((c,),) + tuple(packing))
        return None
    if isinstance(t, Copies):
        return _copies_rows(rows, n, t.count, t.inner)
    pat = t.graph
    if pat.order == 0:
        return EmbeddingWitness(0, ((),))
    if pat.order > n:
        return None
    for mp in _embed_iter(rows, pat, (1 << n) - 1):
        return EmbeddingWitness(pat.order, (tuple(mp),))
    return None


def contains_target(g: Graph, target: TargetPattern) -> EmbeddingWitness | None:
    """Dispatch to the specialized oracle for each pattern kind."""
    return _contains_rows(g.rows, g.order, target)


def witness_valid(g: Graph, target: TargetPattern, w: EmbeddingWitness) -> bool:
    """Re-validate a witness against the host: injectivity, range, and every
    pattern edge mapped to a host edge."""
    t = normalize_pattern(target)
    verts = w.vertices()
    if len(set(verts)) != len(verts):
        return False
    if any(not 0 <= v < g.order for v in verts):
        return False
    if w.pattern_order != len(verts) or len(verts) != pattern_order(t):
        return False
    if isinstance(t, Clique):
        if len(w.groups) != 1 or len(w.groups[0]) != t.size:
            return False
        grp = w.groups[0]
        return all(g.has_edge(a, b) for i, a in enumerate(grp) for b in grp[i + 1:])
    if isinstance(t, Matching):
        if len(w.groups) != t.size or any(len(grp) != 2 for grp in w.groups):
            return False
        return all(g.has_edge(a, b) for a, b in w.groups)
    if isinstance(t, Fan):
        if len(w.groups) != t.n + 1 or len(w.groups[0]) != 1:
            return False
        c = w.groups[0][0]
        for blade in w.groups[1:]:
            if len(blade) != t.t:
                return False
            if not all(g.has_edge(c, v) for v in blade):
                return False
            if not all(
                g.has_edge(a, b) for i, a in enumerate(blade) for b in blade[i + 1:]
            ):
                return False
        return True
    if isinstance(t, Copies):
        ig = pattern_graph(t.inner)
        if len(w.groups) != t.count or any(len(grp) != ig.order for grp in w.groups):
            return False
        return all(
            g.has_edge(grp[a], grp[b])
            for grp in w.groups
            for a, b in ig.edges()
        )
    pat = t.graph
    if len(w.groups) != 1 or len(w.groups[0]) != pat.order:
        return False
    grp = w.groups[0]
    return all(g.has_edge(grp[a], grp[b]) for a, b in pat.edges())
