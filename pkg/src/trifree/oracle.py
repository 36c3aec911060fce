"""Exact maximum triangle-free subsets of tiny cubes by branch and bound."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .bounds import (
    FLOAT_TOL,
    NotApplicable,
    binomial,
    bound_report,
    select_antipodal_prime,
    upper_bound_level_sum,
)
from .constructions import (
    MAX_SAMPLE_N,
    alteration_construction,
    antipodal_construction,
    fixed_bit_construction,
)
from .core import GuardError, Params, VertexSet, r_neighbors
from .verify import check_independent, check_triangle_free

#: largest n the search will accept at all (depth of the search is 2^n)
MAX_ORACLE_N = 10


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 2_000_000
    time_budget: float = 60.0
    allow_symmetry: bool = True

    def __post_init__(self):
        if self.max_nodes < 1 or self.time_budget <= 0:
            raise ValueError("search budgets must be positive")


@dataclass
class OracleResult:
    best_size: int
    witness: VertexSet
    optimal: bool
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "best_size": self.best_size,
            "optimal": self.optimal,
            "nodes": self.nodes,
            "witness": self.witness.strings(),
        }


class _OutOfBudget(Exception):
    pass


def max_triangle_free_exact(params: Params, limits: SearchLimits = SearchLimits()) -> OracleResult:
    """Largest subset of the n-cube with no r-distance triangle.

    Depth-first include/exclude search over vertices in ascending order,
    include first.  A vertex is skipped once two chosen vertices would form a
    triangle with it.  A node is pruned when the chosen count plus what is
    still available cannot beat the incumbent; when 2r <= n the available
    count per level is also capped by the level bounds.  With
    ``allow_symmetry`` the all-zeros vertex is forced in, which loses nothing
    because translations act transitively on the cube.

    Running out of nodes or time returns the incumbent with ``optimal=False``.
    """
    n, r = params.n, params.r
    if n > MAX_ORACLE_N:
        raise GuardError(f"n={n} exceeds the oracle limit {MAX_ORACLE_N}")
    size = 1 << n
    nbrs = [list(r_neighbors(v, params)) for v in range(size)]
    lev = [v.bit_count() for v in range(size)]
    try:
        caps = upper_bound_level_sum(params)[1].per_level
    except NotApplicable:
        caps = None

    blocked = [0] * size
    chosen: list[int] = []
    chosen_at = [0] * (n + 1)
    avail = [binomial(n, k) for k in range(n + 1)]
    best_size = 0
    best_witness: tuple[int, ...] = ()
    nodes = 0
    deadline = time.monotonic() + limits.time_budget

    def bound() -> int:
        if caps is None:
            return len(chosen) + sum(avail)
        return len(chosen) + sum(min(caps[k] - chosen_at[k], avail[k]) for k in range(n + 1))

    def dfs(v: int) -> None:
        nonlocal best_size, best_witness, nodes
        nodes += 1
        if nodes > limits.max_nodes:
            raise _OutOfBudget
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfBudget
        if len(chosen) > best_size:
            best_size, best_witness = len(chosen), tuple(chosen)
        while v < size and blocked[v]:
            v += 1
        if v == size or bound() <= best_size:
            return
        k = lev[v]
        avail[k] -= 1
        if caps is None or chosen_at[k] < caps[k]:
            # vertices that would close a triangle with v and an earlier pick
            closers = [w for y in chosen if (v ^ y).bit_count() == r
                       for w in nbrs[v] if (w ^ y).bit_count() == r]
            chosen.append(v)
            chosen_at[k] += 1
            for w in closers:
                if blocked[w] == 0 and w > v:
                    avail[lev[w]] -= 1
                blocked[w] += 1
            try:
                dfs(v + 1)
            finally:
                for w in closers:
                    blocked[w] -= 1
                    if blocked[w] == 0 and w > v:
                        avail[lev[w]] += 1
                chosen_at[k] -= 1
                chosen.pop()
        if not (limits.allow_symmetry and v == 0):
            dfs(v + 1)
        avail[k] += 1

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * size + 200))
    optimal = True
    try:
        dfs(0)
    except _OutOfBudget:
        optimal = False
    finally:
        sys.setrecursionlimit(old_limit)
    return OracleResult(best_size, VertexSet(n, best_witness), optimal, nodes)


@dataclass
class SandwichReport:
    params: Params
    constructions: dict[str, int]
    lower_probabilistic: float | None
    oracle: OracleResult | None
    uppers: dict[str, int]
    violations: list[str] = field(default_factory=list)

    @property
    def best_known(self) -> int:
        sizes = list(self.constructions.values())
        if self.oracle is not None:
            sizes.append(self.oracle.best_size)
        return max(sizes, default=0)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.params.n,
            "r": self.params.r,
            "constructions": {k: str(v) for k, v in self.constructions.items()},
            "lower_probabilistic": self.lower_probabilistic,
            "oracle": None if self.oracle is None else {
                "best_size": str(self.oracle.best_size),
                "optimal": self.oracle.optimal,
            },
            "best_known": str(self.best_known),
            "uppers": {k: str(v) for k, v in self.uppers.items()},
            "ok": self.ok,
            "violations": list(self.violations),
        }


def construction_sizes(params: Params) -> dict[str, int]:
    """Sizes of every construction that applies to ``params``, each built and checked."""
    out = {}
    p = select_antipodal_prime(params.n, params.r)
    if p is not None:
        vs = antipodal_construction(params.n, p, params.r)
        if check_independent(vs, params) is None:
            out["antipodal"] = len(vs)
    vs = fixed_bit_construction(params)
    if check_triangle_free(vs, params) is None:
        out["fixed_bit"] = len(vs)
    if params.n <= min(MAX_SAMPLE_N, 16):
        vs, _ = alteration_construction(params)
        if check_triangle_free(vs, params) is None:
            out["alteration"] = len(vs)
    return out


def sandwich_report(params: Params, limits: SearchLimits = SearchLimits()) -> SandwichReport:
    """Lower constructions, the oracle and the upper bounds for one instance.

    Every inequality lower <= best <= upper that applies is checked; failures
    land in ``violations``.  Without an optimal oracle run the best known size
    only has to stay below the upper bounds.
    """
    report = bound_report(params)
    sizes = construction_sizes(params)
    oracle = None
    if params.n <= MAX_ORACLE_N:
        oracle = max_triangle_free_exact(params, limits)
    out = SandwichReport(
        params=params,
        constructions=sizes,
        lower_probabilistic=report.lower_probabilistic,
        oracle=oracle,
        uppers=report.upper_values(),
    )
    if oracle is not None and oracle.optimal:
        best = oracle.best_size
        for name, value in sizes.items():
            if value > best:
                out.violations.append(f"{name} {value} > optimum {best}")
        lp = report.lower_probabilistic
        if lp is not None and lp > best + FLOAT_TOL:
            out.violations.append(f"lower_probabilistic {lp} > optimum {best}")
    for name, value in out.uppers.items():
        if out.best_known > value:
            out.violations.append(f"best known {out.best_known} > {name} {value}")
    return out
