"""Exhaustive free-coloring search, Ramsey number scans, star-critical
computation, and the randomized minimum-degree packing harness.

The coloring search is a DFS over host edges in lexicographic order, red
branch first. After each edge is colored, only containment through that edge
is re-checked: every earlier partial coloring was verified clean, so any
embedding present now must use the new edge. Results never depend on
thread_count_hint; the DFS is sequential and the hint is recorded only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .colorings import TwoColoring, check_free, lemma27_construction, thm17_construction
from .errors import (
    BadParam,
    BudgetExhausted,
    OrderCap,
    PreconditionViolated,
    RangeError,
    SamplingFailure,
)
from .graphs import Graph, bits, complete, star_augmented
from .patterns import (
    Clique,
    Copies,
    Fan,
    Matching,
    TargetPattern,
    _clique_search,
    _contains_rows,
    _max_matching_rows,
    _pack_iter,
    kt_packing,
    normalize_pattern,
    parse_target,
)


@dataclass
class SearchConfig:
    """Knobs for the exhaustive searches.

    thread_count_hint is accepted for interface stability and recorded, but
    exploration is sequential, so results are identical for every hint.
    iso_rejection_depth counts leading vertex stars of a complete host whose
    colorings are restricted to canonical (block-sorted) form; 0 disables it.
    """

    node_budget: int = 10_000_000
    iso_rejection_depth: int = 2
    thread_count_hint: int = 1
    seed: int = 0
    debug_recheck: bool = False


@dataclass
class SearchStats:
    nodes: int = 0
    red_prunes: int = 0
    blue_prunes: int = 0
    iso_prunes: int = 0


@dataclass
class SearchResult:
    value: int | None
    witness: TwoColoring | None
    status: str  # "exact" or "budget_exhausted"
    stats: SearchStats = field(default_factory=SearchStats)


def _as_pattern(t: TargetPattern | str) -> TargetPattern:
    return normalize_pattern(parse_target(t) if isinstance(t, str) else t)


def _new_containment(rows, n: int, target: TargetPattern, u: int, v: int) -> bool:
    """Containment check on one color class right after edge (u, v) was added.

    Assumes the class without that edge was target-free, so detection may be
    anchored at the edge: cliques need both endpoints, fans need a center in
    {u, v} or their common neighborhood. Matchings, copies, and explicit
    patterns fall back to a full check, which is equally sound.
    """
    if isinstance(target, Clique):
        m = target.size
        if m <= 2:
            return True
        return _clique_search(rows, rows[u] & rows[v], m - 2) is not None
    if isinstance(target, Fan):
        common = rows[u] & rows[v]
        centers = [u, v] + list(bits(common))
        for c in centers:
            for _ in _pack_iter(rows, rows[c], target.t, target.n, 0):
                return True
        return False
    if isinstance(target, Matching):
        return len(_max_matching_rows(rows, n)) >= target.size
    return _contains_rows(rows, n, target) is not None


def _iso_allows(rows_red, u: int, v: int, is_red: bool, depth: int) -> bool:
    """Canonical-form restriction on the first one or two vertex stars of a
    complete host: within each block of equal earlier colors, red must come
    before blue. Every coloring has an isomorph obeying this."""
    if depth >= 1 and u == 0 and v >= 2:
        if is_red and not rows_red[0] >> (v - 1) & 1:
            return False
    if depth >= 2 and u == 1 and v >= 3:
        if (rows_red[0] >> v & 1) == (rows_red[0] >> (v - 1) & 1):
            if is_red and not rows_red[1] >> (v - 1) & 1:
                return False
    return True


def _root_blocked(n: int, red_t: TargetPattern, blue_t: TargetPattern) -> bool:
    zero = [0] * n
    return (
        _contains_rows(zero, n, red_t) is not None
        or _contains_rows(zero, n, blue_t) is not None
    )


def _is_complete(host: Graph) -> bool:
    return host == complete(host.order)


def _free_coloring_dfs(
    host: Graph,
    red_t: TargetPattern,
    blue_t: TargetPattern,
    cfg: SearchConfig,
    stats: SearchStats,
    enumerate_all: bool,
    use_iso: bool,
) -> Iterator[TwoColoring]:
    """Yield free colorings in DFS order; exhaustive when fully consumed."""
    n = host.order
    if _root_blocked(n, red_t, blue_t):
        return
    edges = host.edges()
    depth = cfg.iso_rejection_depth if (use_iso and _is_complete(host)) else 0
    rows_red = [0] * n
    rows_blue = [0] * n

    def snapshot() -> TwoColoring:
        red = frozenset(
            (u, v) for u in range(n) for v in bits(rows_red[u]) if u < v
        )
        return TwoColoring(host, red)

    def dfs(i: int) -> Iterator[TwoColoring]:
        if i == len(edges):
            yield snapshot()
            return
        u, v = edges[i]
        for is_red in (True, False):
            if depth and not _iso_allows(rows_red, u, v, is_red, depth):
                stats.iso_prunes += 1
                continue
            stats.nodes += 1
            if stats.nodes > cfg.node_budget:
                raise BudgetExhausted(
                    f"node budget {cfg.node_budget} exhausted", stats
                )
            rows = rows_red if is_red else rows_blue
            target = red_t if is_red else blue_t
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            hit = _new_containment(rows, n, target, u, v)
            if cfg.debug_recheck:
                assert hit == (_contains_rows(rows, n, target) is not None)
            if hit:
                if is_red:
                    stats.red_prunes += 1
                else:
                    stats.blue_prunes += 1
            else:
                yield from dfs(i + 1)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    for coloring in dfs(0):
        yield coloring
        if not enumerate_all:
            return


def exists_free_coloring(
    host: Graph,
    red_target: TargetPattern | str,
    blue_target: TargetPattern | str,
    config: SearchConfig | None = None,
    _stats: SearchStats | None = None,
) -> TwoColoring | None:
    """First free coloring of the host in DFS order, or None (exhaustive)."""
    cfg = config or SearchConfig()
    stats = _stats if _stats is not None else SearchStats()
    red_t = _as_pattern(red_target)
    blue_t = _as_pattern(blue_target)
    for coloring in _free_coloring_dfs(
        host, red_t, blue_t, cfg, stats, enumerate_all=False, use_iso=True
    ):
        return coloring
    return None


def _color_swap(coloring: TwoColoring) -> TwoColoring:
    return TwoColoring(coloring.host, coloring.blue_edges())


def _seed_coloring(red_t: TargetPattern, blue_t: TargetPattern) -> TwoColoring | None:
    """A verified free coloring from a known extremal construction, when the
    target pair matches one: clique versus disjoint fans, or matching versus
    fan, in either orientation. Freeness is machine-checked before use."""
    builders = []
    for a, b, swap in ((red_t, blue_t, False), (blue_t, red_t, True)):
        if isinstance(a, Clique) and isinstance(b, Fan):
            builders.append((lambda a=a, b=b: thm17_construction(a.size, 1, b.t, b.n), swap))
        if isinstance(a, Clique) and isinstance(b, Copies) and isinstance(b.inner, Fan):
            builders.append(
                (lambda a=a, b=b: thm17_construction(a.size, b.count, b.inner.t, b.inner.n), swap)
            )
        if isinstance(a, Matching) and isinstance(b, Fan):
            builders.append((lambda a=a, b=b: lemma27_construction(a.size, b.t, b.n), swap))
    for build, swap in builders:
        try:
            coloring = build()
        except (BadParam, OrderCap):
            continue
        if swap:
            coloring = _color_swap(coloring)
        if check_free(coloring, red_t, blue_t).valid:
            return coloring
    return None


def ramsey_number(
    red_target: TargetPattern | str,
    blue_target: TargetPattern | str,
    lo: int,
    hi: int,
    config: SearchConfig | None = None,
) -> SearchResult:
    """Smallest N in [lo, hi] whose complete graph admits no free coloring.

    The witness is a free coloring one order below the value. When a known
    extremal construction applies and verifies free at order c, every order
    up to c admits a free coloring by restriction, so the scan starts at c+1
    with the construction as pending witness. Raises RangeError when every
    order in the range still admits a free coloring; a blown node budget
    yields status "budget_exhausted" instead of a value.
    """
    if not 1 <= lo <= hi:
        raise BadParam("need 1 <= lo <= hi")
    cfg = config or SearchConfig()
    red_t = _as_pattern(red_target)
    blue_t = _as_pattern(blue_target)
    stats = SearchStats()
    witness: TwoColoring | None = None
    start = lo
    seed = _seed_coloring(red_t, blue_t)
    if seed is not None and lo <= seed.host.order:
        if seed.host.order >= hi:
            raise RangeError(
                f"every order in [{lo}, {hi}] admits a free coloring"
            )
        witness = seed
        start = seed.host.order + 1
    try:
        for order in range(start, hi + 1):
            found = exists_free_coloring(
                complete(order), red_t, blue_t, cfg, _stats=stats
            )
            if found is None:
                if order > 1 and witness is None:
                    witness = exists_free_coloring(
                        complete(order - 1), red_t, blue_t, cfg, _stats=stats
                    )
                return SearchResult(order, witness, "exact", stats)
            witness = found
    except BudgetExhausted:
        return SearchResult(None, None, "budget_exhausted", stats)
    raise RangeError(
        f"every order in [{lo}, {hi}] admits a free coloring"
    )


def star_critical(
    red_target: TargetPattern | str,
    blue_target: TargetPattern | str,
    r: int,
    config: SearchConfig | None = None,
    dedupe_isomorphs: bool = False,
) -> SearchResult:
    """Largest k for which some free coloring of K_{r-1} extends freely to a
    k-edge star vertex, plus one.

    r must be the exact Ramsey number of the pair: K_r admitting a free
    coloring, or K_{r-1} admitting none, violates the precondition. Base
    colorings are enumerated exhaustively; dedupe_isomorphs restricts the
    enumeration to canonical representatives without changing the value.
    """
    if r < 3:
        raise BadParam("need r >= 3")
    cfg = config or SearchConfig()
    red_t = _as_pattern(red_target)
    blue_t = _as_pattern(blue_target)
    stats = SearchStats()
    try:
        if exists_free_coloring(complete(r), red_t, blue_t, cfg, _stats=stats):
            raise PreconditionViolated(
                f"K_{r} admits a free coloring, so r is not the Ramsey number"
            )
        base_order = r - 1
        best_k = -1
        best: tuple[TwoColoring, tuple[tuple[int, bool], ...]] | None = None
        saw_base = False
        for base in _free_coloring_dfs(
            complete(base_order),
            red_t,
            blue_t,
            cfg,
            stats,
            enumerate_all=True,
            use_iso=dedupe_isomorphs,
        ):
            saw_base = True
            k, choices = _max_free_extension(base, red_t, blue_t, cfg, stats, best_k)
            if k > best_k:
                best_k = k
                best = (base, choices)
    except BudgetExhausted:
        return SearchResult(None, None, "budget_exhausted", stats)
    if not saw_base:
        raise PreconditionViolated(
            f"K_{r - 1} admits no free coloring, so r is not the Ramsey number"
        )
    if best is None:
        # only reachable for targets with isolated vertices: even a bare
        # extra vertex completes an embedding on every base
        return SearchResult(0, None, "exact", stats)
    witness = _extension_witness(best[0], best[1])
    return SearchResult(best_k + 1, witness, "exact", stats)


def _max_free_extension(
    base: TwoColoring,
    red_t: TargetPattern,
    blue_t: TargetPattern,
    cfg: SearchConfig,
    stats: SearchStats,
    global_best: int,
) -> tuple[int, tuple[tuple[int, bool], ...]]:
    """Maximum number of star edges attachable to a fresh vertex while staying
    free, over all attachment sets and colorings. Returns the edge choices
    (base vertex, is_red) of one maximizing extension."""
    m = base.host.order
    n = m + 1
    w = m
    rows_red = [0] * n
    rows_blue = [0] * n
    for u, v in base.red:
        rows_red[u] |= 1 << v
        rows_red[v] |= 1 << u
    for u, v in base.blue_edges():
        rows_blue[u] |= 1 << v
        rows_blue[v] |= 1 << u
    # a pattern with isolated vertices can embed through the fresh vertex
    # before any star edge is colored; containment is monotone, so the base
    # then admits no free extension at all
    if (
        _contains_rows(rows_red, n, red_t) is not None
        or _contains_rows(rows_blue, n, blue_t) is not None
    ):
        return -1, ()
    best_k = -1
    best_choices: tuple[tuple[int, bool], ...] = ()
    chosen: list[tuple[int, bool]] = []

    def dfs(j: int, attached: int):
        nonlocal best_k, best_choices
        if attached + (m - j) <= max(best_k, global_best):
            return
        if j == m:
            if attached > best_k:
                best_k = attached
                best_choices = tuple(chosen)
            return
        for is_red in (True, False):
            stats.nodes += 1
            if stats.nodes > cfg.node_budget:
                raise BudgetExhausted(
                    f"node budget {cfg.node_budget} exhausted", stats
                )
            rows = rows_red if is_red else rows_blue
            target = red_t if is_red else blue_t
            rows[j] |= 1 << w
            rows[w] |= 1 << j
            hit = _new_containment(rows, n, target, j, w)
            if hit:
                if is_red:
                    stats.red_prunes += 1
                else:
                    stats.blue_prunes += 1
            else:
                chosen.append((j, is_red))
                dfs(j + 1, attached + 1)
                chosen.pop()
            rows[j] &= ~(1 << w)
            rows[w] &= ~(1 << j)
        dfs(j + 1, attached)

    dfs(0, 0)
    return best_k, best_choices


def _extension_witness(
    base: TwoColoring, choices: tuple[tuple[int, bool], ...]
) -> TwoColoring:
    """Relabel the base so attached vertices come first, then build the
    coloring on the star-augmented host."""
    m = base.host.order
    attach = [j for j, _ in choices]
    rest = [j for j in range(m) if j not in attach]
    perm = [0] * m
    for new, old in enumerate(attach + rest):
        perm[old] = new
    red = set()
    for u, v in base.red:
        a, b = perm[u], perm[v]
        red.add((min(a, b), max(a, b)))
    for j, is_red in choices:
        if is_red:
            red.add((perm[j], m))
    host = star_augmented(m, len(attach))
    return TwoColoring(host, frozenset(red))


@dataclass
class PackingReport:
    t: int
    n: int
    trials: int
    seed: int
    min_degree_floor: int
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _sample_min_degree(rng: random.Random, order: int, floor: int) -> Graph:
    if floor > order - 1:
        raise SamplingFailure(
            f"minimum degree {floor} impossible at order {order}"
        )
    rows = [0] * order
    low_p = max(0.0, floor / max(order - 1, 1) - 0.1)
    for _ in range(20):
        p = rng.uniform(low_p, 1.0)
        rows = [0] * order
        for u in range(order):
            for v in range(u + 1, order):
                if rng.random() < p:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        if min(r.bit_count() for r in rows) >= floor:
            return Graph(order, tuple(rows))
    # augment the last rejected sample: repeatedly give the lowest-degree
    # vertex an edge to its lowest-degree non-neighbor
    while True:
        degs = [r.bit_count() for r in rows]
        u = min(range(order), key=lambda x: (degs[x], x))
        if degs[u] >= floor:
            return Graph(order, tuple(rows))
        candidates = [
            v for v in range(order) if v != u and not rows[u] >> v & 1
        ]
        v = min(candidates, key=lambda x: (degs[x], x))
        rows[u] |= 1 << v
        rows[v] |= 1 << u


def packing_property_check(
    t: int, n: int, trials: int, config: SearchConfig | None = None
) -> PackingReport:
    """Sample graphs of order t*n conditioned on minimum degree at least
    (t-1)*n and verify each packs n disjoint copies of K_t."""
    if t < 2 or n < 1:
        raise BadParam("need t >= 2 and n >= 1")
    if t * n > 24:
        raise BadParam("order t*n capped at 24")
    if trials < 1:
        raise BadParam("need at least one trial")
    cfg = config or SearchConfig()
    rng = random.Random(cfg.seed)
    order = t * n
    floor = (t - 1) * n
    failures = []
    for trial in range(trials):
        g = _sample_min_degree(rng, order, floor)
        if kt_packing(g, t, n) is None:
            failures.append(trial)
    return PackingReport(
        t=t,
        n=n,
        trials=trials,
        seed=cfg.seed,
        min_degree_floor=floor,
        failures=tuple(failures),
    )
