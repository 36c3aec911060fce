"""Brute-force checks: triangle-freeness, independence and triangle counts."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import binomial
from .core import GuardError, Params, ParamError, VertexSet, format_vertex, r_neighbors

#: largest n for which count_triangles_graph will materialise the cube
MAX_GRAPH_N = 20
#: cap on (edges x bitset words) for count_triangles_graph
MAX_GRAPH_WORK = 2 * 10**8


@dataclass(frozen=True)
class Violation:
    kind: str  # "edge" or "triangle"
    witnesses: tuple[int, ...]
    n: int

    def strings(self) -> list[str]:
        return [format_vertex(v, self.n) for v in self.witnesses]

    def __str__(self):
        return f"{self.kind}: " + " ".join(self.strings())


def _check_dims(vs: VertexSet, params: Params) -> None:
    if vs.n != params.n:
        raise ParamError(f"vertex set has n={vs.n} but params have n={params.n}")


def _neighbors_in(vs: VertexSet, params: Params) -> dict[int, list[int]]:
    r = params.r
    if len(vs) <= binomial(vs.n, r):
        members = vs.members
        return {u: [v for v in members if (u ^ v).bit_count() == r] for u in members}
    return {u: [v for v in r_neighbors(u, params) if v in vs] for u in vs}


def check_independent(vs: VertexSet, params: Params) -> Violation | None:
    """None if no two members are at distance r, else the least such pair."""
    _check_dims(vs, params)
    r = params.r
    members = vs.members
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if (u ^ v).bit_count() == r:
                return Violation("edge", (u, v), vs.n)
    return None


def iter_triangles(vs: VertexSet, params: Params):
    """Yield member triples (u, v, w), u < v < w, pairwise at distance r.

    Triples come out in lexicographic order.  Each pair u < v at distance r
    is intersected with the r-neighbourhood of u inside the set.
    """
    _check_dims(vs, params)
    r = params.r
    nbrs = _neighbors_in(vs, params)
    for u in vs.members:
        up = [v for v in nbrs[u] if v > u]
        for i, v in enumerate(up):
            for w in up[i + 1:]:
                if (v ^ w).bit_count() == r:
                    yield u, v, w


def check_triangle_free(vs: VertexSet, params: Params) -> Violation | None:
    """None if no three members are pairwise at distance r, else the least triple."""
    first = next(iter_triangles(vs, params), None)
    return None if first is None else Violation("triangle", first, vs.n)


def count_triangles_in_set(vs: VertexSet, params: Params) -> int:
    return sum(1 for _ in iter_triangles(vs, params))


def graph_work_estimate(params: Params) -> int:
    size = 1 << params.n
    edges = size * binomial(params.n, params.r) // 2
    return edges * max(1, size // 64)


def count_triangles_graph(params: Params, max_work: int = MAX_GRAPH_WORK) -> int:
    """Triangles of the whole r-distance graph, by common-neighbour bitsets.

    Each vertex gets a 2^n-bit neighbourhood mask; every edge contributes the
    popcount of the intersection of its endpoint masks, and each triangle is
    seen from its three edges.
    """
    n = params.n
    if n > MAX_GRAPH_N or graph_work_estimate(params) > max_work:
        raise GuardError(
            f"n={n}, r={params.r} is too large to enumerate "
            f"(work estimate {graph_work_estimate(params)} > {max_work})"
        )
    size = 1 << n
    nbr_mask = []
    nbr_list = []
    for u in range(size):
        vs = list(r_neighbors(u, params))
        nbr_list.append(vs)
        m = 0
        for v in vs:
            m |= 1 << v
        nbr_mask.append(m)
    total = 0
    for u in range(size):
        mu = nbr_mask[u]
        for v in nbr_list[u]:
            if v > u:
                total += (mu & nbr_mask[v]).bit_count()
    q, rem = divmod(total, 3)
    assert rem == 0, "every triangle has three edges"
    return q
