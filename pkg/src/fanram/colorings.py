"""Two-colorings of host graphs, freeness certificates, and the extremal
constructions used as lower-bound witnesses."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import reduce

from .errors import BadParam, CorruptRecord, OrderCap, PreconditionViolated, StructureNotFound
from .graph6 import decode, encode
from .graphs import (
    MAX_ORDER,
    Graph,
    VertexSet,
    complete,
    complement,
    disjoint_union,
    from_edges,
)
from .patterns import (
    EmbeddingWitness,
    TargetPattern,
    _pack_iter,
    format_target,
    parse_target,
    witness_valid,
)
from . import patterns

CERT_FORMAT = "fanram-certificate-1"


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TwoColoring:
    """A red/blue edge partition of a host graph. Edges not in `red` are blue."""

    host: Graph
    red: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.red:
            if u >= v:
                raise BadParam(f"red edge ({u}, {v}) not normalized")
            if not self.host.has_edge(u, v):
                raise BadParam(f"red edge ({u}, {v}) not in the host")

    def red_graph(self) -> Graph:
        return from_edges(self.host.order, self.red)

    def blue_graph(self) -> Graph:
        blue = [e for e in self.host.edges() if e not in self.red]
        return from_edges(self.host.order, blue)

    def blue_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for e in self.host.edges() if e not in self.red)


def coloring_from_graphs(host: Graph, red: Graph) -> TwoColoring:
    if red.order != host.order:
        raise BadParam("red graph order differs from host order")
    return TwoColoring(host, frozenset(red.edges()))


@dataclass
class Certificate:
    """Verdicts of one freeness check, with a content hash over the canonical
    serialization so re-runs are comparable byte for byte."""

    coloring: TwoColoring
    red_target: TargetPattern
    blue_target: TargetPattern
    red_witness: EmbeddingWitness | None
    blue_witness: EmbeddingWitness | None
    content_hash: str

    @property
    def valid(self) -> bool:
        """True when neither forbidden pattern was found (the coloring is free)."""
        return self.red_witness is None and self.blue_witness is None


def _witness_obj(w: EmbeddingWitness | None):
    if w is None:
        return None
    return {"pattern_order": w.pattern_order, "groups": [list(g) for g in w.groups]}


def _witness_from_obj(obj) -> EmbeddingWitness | None:
    if obj is None:
        return None
    return EmbeddingWitness(
        obj["pattern_order"], tuple(tuple(g) for g in obj["groups"])
    )


def certificate_payload(cert: Certificate) -> dict:
    """Canonical field order; the hash is computed over exactly this object."""
    return {
        "format": CERT_FORMAT,
        "host": encode(cert.coloring.host),
        "red": encode(cert.coloring.red_graph()),
        "red_target": format_target(cert.red_target),
        "blue_target": format_target(cert.blue_target),
        "red_witness": _witness_obj(cert.red_witness),
        "blue_witness": _witness_obj(cert.blue_witness),
    }


def _hash_payload(payload: dict) -> str:
    blob = json.dumps(payload, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def serialize_certificate(cert: Certificate) -> str:
    doc = certificate_payload(cert)
    doc["content_hash"] = cert.content_hash
    return json.dumps(doc, indent=2)


def load_certificate(text: str) -> Certificate:
    """Parse a serialized certificate, re-run the check, and require that the
    recomputed verdicts and hash match the stored ones."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptRecord(f"certificate is not valid JSON: {exc}") from exc
    try:
        host = decode(doc["host"])
        red = decode(doc["red"])
        red_t = parse_target(doc["red_target"])
        blue_t = parse_target(doc["blue_target"])
        stored_hash = doc["content_hash"]
    except (KeyError, Exception) as exc:  # noqa: BLE001 - any defect is corruption here
        if isinstance(exc, CorruptRecord):
            raise
        raise CorruptRecord(f"certificate fields unreadable: {exc}") from exc
    cert = check_free(coloring_from_graphs(host, red), red_t, blue_t)
    if cert.content_hash != stored_hash:
        raise CorruptRecord("certificate hash mismatch after re-validation")
    return cert


def check_free(
    coloring: TwoColoring,
    red_target: TargetPattern | str,
    blue_target: TargetPattern | str,
) -> Certificate:
    """Run both containment oracles and package the verdicts.

    The coloring is free exactly when the red graph avoids the red target and
    the blue graph avoids the blue target.
    """
    red_t = parse_target(red_target) if isinstance(red_target, str) else red_target
    blue_t = parse_target(blue_target) if isinstance(blue_target, str) else blue_target
    rw = patterns.contains_target(coloring.red_graph(), red_t)
    bw = patterns.contains_target(coloring.blue_graph(), blue_t)
    if rw is not None:
        assert witness_valid(coloring.red_graph(), red_t, rw)
    if bw is not None:
        assert witness_valid(coloring.blue_graph(), blue_t, bw)
    cert = Certificate(coloring, red_t, blue_t, rw, bw, "")
    cert.content_hash = _hash_payload(certificate_payload(cert))
    return cert


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def _disjoint_cliques(sizes) -> Graph:
    parts = [complete(b) for b in sizes]
    return reduce(disjoint_union, parts) if parts else complete(0)


def _coloring_with_blue(blue: Graph) -> TwoColoring:
    """Complete host whose blue graph is `blue` and red graph its complement."""
    host = complete(blue.order)
    return coloring_from_graphs(host, complement(blue))


def burr_coloring(chi: int, surplus: int, h_order: int) -> TwoColoring:
    """Blue = (chi-1) disjoint K_{h_order-1} plus one K_{surplus-1} block last;
    red is the complementary complete multipartite graph.

    Free for any red target of chromatic number chi and surplus `surplus`
    versus any connected blue target of order h_order.
    """
    if chi < 2 or surplus < 1 or h_order < 1:
        raise BadParam("need chi >= 2, surplus >= 1, h_order >= 1")
    if h_order < surplus:
        raise BadParam("h_order must be at least the surplus")
    order = (chi - 1) * (h_order - 1) + surplus - 1
    if order > MAX_ORDER:
        raise OrderCap(f"order {order} exceeds {MAX_ORDER}")
    blue = _disjoint_cliques([h_order - 1] * (chi - 1) + [surplus - 1])
    return _coloring_with_blue(blue)


def thm17_construction(m: int, s: int, t: int, n: int) -> TwoColoring:
    """Red = complete multipartite with one part of (tn+1)s-1 vertices first and
    m-2 parts of tn vertices; order tn(m+s-2)+s-1.

    Blue is one large clique plus m-2 cliques K_{tn}: too small to hold s
    disjoint fans, while red has clique number m-1.
    """
    if m < 3 or s < 1 or t < 1 or n < 1:
        raise BadParam("need m >= 3 and s, t, n >= 1")
    order = t * n * (m + s - 2) + s - 1
    if order > MAX_ORDER:
        raise OrderCap(f"order {order} exceeds {MAX_ORDER}")
    blue = _disjoint_cliques([(t * n + 1) * s - 1] + [t * n] * (m - 2))
    return _coloring_with_blue(blue)


def lemma27_construction(s: int, t: int, n: int) -> TwoColoring:
    """Matching-versus-fan lower-bound coloring.

    For n >= s: red is complete bipartite with parts tn and s-1 (order tn+s-1).
    For n < s: red is an empty block of (t-1)n vertices followed by K_{2s-1}
    (order (t-1)n+2s-1). The boundary n = s emits the first branch.
    """
    if s < 1 or t < 1 or n < 1:
        raise BadParam("need s, t, n >= 1")
    if n >= s:
        order = t * n + s - 1
        if order > MAX_ORDER:
            raise OrderCap(f"order {order} exceeds {MAX_ORDER}")
        host = complete(order)
        left = (1 << (t * n)) - 1
        red = [
            (u, v)
            for u, v in host.edges()
            if bool(left >> u & 1) != bool(left >> v & 1)
        ]
        return TwoColoring(host, frozenset(red))
    order = (t - 1) * n + 2 * s - 1
    if order > MAX_ORDER:
        raise OrderCap(f"order {order} exceeds {MAX_ORDER}")
    host = complete(order)
    lo = (t - 1) * n
    red = [(u, v) for u, v in host.edges() if u >= lo and v >= lo]
    return TwoColoring(host, frozenset(red))


def verify_lemma24(coloring: TwoColoring, n: int) -> tuple[VertexSet, VertexSet]:
    """In a free coloring of K_{8n} for (K_3, F:4,n) with n >= 4, find two
    disjoint blue 4n-cliques, backtracking over the first choice if needed.

    Raises PreconditionViolated when the input is not such a coloring and
    StructureNotFound when no pair exists (a genuine failure signal).
    """
    if n < 4:
        raise PreconditionViolated("needs n >= 4")
    host = coloring.host
    if host != complete(8 * n):
        raise PreconditionViolated(f"host must be the complete graph on {8 * n} vertices")
    cert = check_free(coloring, patterns.Clique(3), patterns.Fan(4, n))
    if not cert.valid:
        raise PreconditionViolated("coloring is not free for (K3, F:4,n)")
    blue = coloring.blue_graph()
    for packing in _pack_iter(blue.rows, (1 << blue.order) - 1, 4 * n, 2, 0):
        first, second = packing
        return frozenset(first), frozenset(second)
    raise StructureNotFound("no two disjoint blue cliques of the required size")
