"""Explicit triangle-free vertex sets: antipodal blocks, alteration, fixed bits."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .bounds import is_prime, optimal_sampling_probability
from .core import GuardError, Params, ParamError, VertexSet, format_vertex, parse_vertex, weight_masks
from .verify import iter_triangles


#: largest n for which alteration_construction draws one number per vertex
MAX_SAMPLE_N = 26


@dataclass(frozen=True)
class AntipodalParams:
    """Block length ``p``, block count ``m`` and the antipodal pairs (a, b).

    Each pair is stored as p-bit ints with a < b and a ^ b all ones.
    """

    p: int
    m: int
    pairs: tuple[tuple[int, int], ...]


def antipodal_params(n: int, p: int, r: int) -> AntipodalParams:
    problems = []
    if not is_prime(p):
        problems.append(f"p={p} is not prime")
    elif n % p:
        problems.append(f"p={p} does not divide n={n}")
    if is_prime(p) and r % p == 0:
        problems.append(f"p={p} divides r={r}")
    if p >= 1 and n % p == 0 and n // p <= r:
        problems.append(f"m = n/p = {n // p} is not greater than r={r}")
    if problems:
        raise ParamError("; ".join(problems))
    full = (1 << p) - 1
    pairs = tuple((a, a ^ full) for a in range(1 << p) if a < a ^ full)
    return AntipodalParams(p, n // p, pairs)


def _blocks_to_vertex(words, p: int) -> int:
    v = 0
    for i, word in enumerate(words):
        v |= word << (i * p)
    return v


def antipodal_component(a: str | int, b: str | int, m: int, p: int | None = None) -> VertexSet:
    """All m-block words over the two blocks ``a`` and ``b``.

    ``a`` and ``b`` may be 0-1 strings (coordinate 1 leftmost) or p-bit ints,
    in which case ``p`` must be given.
    """
    if isinstance(a, str):
        p = len(a)
        a, b = parse_vertex(a, p), parse_vertex(b, p)
    if p is None:
        raise ParamError("block length p is required for int blocks")
    if a ^ b != (1 << p) - 1:
        raise ParamError(f"{format_vertex(a, p)} and {format_vertex(b, p)} are not antipodal")
    return VertexSet(m * p, (_blocks_to_vertex(w, p) for w in product((a, b), repeat=m)))


def antipodal_construction(n: int, p: int, r: int) -> VertexSet:
    """Union of the antipodal components over all 2^(p-1) pairs.

    The result has 2^(n/p + p - 1) members, no two at distance exactly r.
    """
    ap = antipodal_params(n, p, r)
    members = []
    for a, b in ap.pairs:
        members.extend(_blocks_to_vertex(w, p) for w in product((a, b), repeat=ap.m))
    return VertexSet(n, members)


@dataclass(frozen=True)
class SamplingPlan:
    probability: float | None = None
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.probability is not None and not 0 < self.probability <= 1:
            raise ParamError(f"probability must lie in (0, 1], got {self.probability}")
        if not 0 <= self.seed < 2**64:
            raise ParamError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 1:
            raise ParamError(f"trials must be positive, got {self.trials}")


@dataclass
class AlterationTrace:
    sampled_count: int
    triangles_found: int
    removed: list[int]
    final_size: int
    probability: float
    seed: int
    trial: int = 0
    n: int = field(default=0, repr=False)

    def to_dict(self) -> dict:
        return {
            "sampled_count": self.sampled_count,
            "triangles_found": self.triangles_found,
            "removed": [format_vertex(v, self.n) for v in self.removed],
            "final_size": self.final_size,
            "probability": self.probability,
            "seed": self.seed,
            "trial": self.trial,
        }


def _alter_once(params: Params, p: float, seed_seq, seed: int, trial: int):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    draws = rng.random(1 << params.n)  # one draw per vertex, ascending
    sample = VertexSet(params.n, np.flatnonzero(draws < p).tolist())
    removed = set()
    found = 0
    for tri in iter_triangles(sample, params):
        found += 1
        if not removed.intersection(tri):
            removed.add(tri[2])
    kept = VertexSet(params.n, (v for v in sample if v not in removed))
    trace = AlterationTrace(
        sampled_count=len(sample),
        triangles_found=found,
        removed=sorted(removed),
        final_size=len(kept),
        probability=p,
        seed=seed,
        trial=trial,
        n=params.n,
    )
    return kept, trace


def alteration_construction(params: Params, plan: SamplingPlan = SamplingPlan()):
    """Random sample, then delete one vertex from every surviving triangle.

    Every vertex is kept independently with ``plan.probability`` (default: the
    optimal probability for the instance).  Triangles of the sample are
    scanned in lexicographic order and the largest vertex of each triangle not
    already broken is removed, so at most Y vertices go.

    Each trial draws from its own child of ``SeedSequence(plan.seed)``; the
    largest result wins, ties to the earliest trial.  Returns
    ``(VertexSet, AlterationTrace)``.
    """
    if params.n > MAX_SAMPLE_N:
        raise GuardError(f"n={params.n} is too large to sample vertex by vertex")
    p = plan.probability
    if p is None:
        p = optimal_sampling_probability(params)
    children = np.random.SeedSequence(plan.seed).spawn(plan.trials)
    best = None
    for t, child in enumerate(children):
        result = _alter_once(params, p, child, plan.seed, t)
        if best is None or len(result[0]) > len(best[0]):
            best = result
    return best


def fixed_bit_construction(params: Params) -> VertexSet:
    """Weight-r/2 vertices with a one in coordinate 1 or coordinate 2."""
    n, h = params.n, params.half
    if h > n:
        raise ParamError(f"r/2 = {h} exceeds n = {n}")
    return VertexSet(n, (v for v in weight_masks(n, h) if v & 0b11))
