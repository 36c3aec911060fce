"""Closed-form lower and upper bounds on triangle-free subsets.

Everything that can be an exact integer or rational is one (Python ints and
``fractions.Fraction``).  Square roots and the asymptotic form are floats,
compared elsewhere with an absolute tolerance of ``FLOAT_TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Params, ParamError

FLOAT_TOL = 1e-9

#: leading constant of the probabilistic lower bound, 2*sqrt(2)/3
ALTERATION_CONSTANT = 2 * math.sqrt(2) / 3


class NotApplicable(ParamError):
    """A bound was requested outside the range where it is proved."""


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); 0 when k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _require_even(params: Params, what: str) -> None:
    if params.r % 2:
        raise NotApplicable(f"{what} needs even r, got r={params.r}")


def triangle_denominator(params: Params) -> int:
    """C(n, r) * C(r, r/2) * C(n-r, r/2): ordered (second, third) vertex choices."""
    _require_even(params, "the triangle count")
    n, r, h = params.n, params.r, params.half
    return binomial(n, r) * binomial(r, h) * binomial(n - r, h)


def triangle_count_formula(params: Params) -> int:
    """Exact number of triangles in the r-distance graph of the n-cube."""
    if params.r % 2:
        raise ParamError(f"the triangle count formula is not integral for odd r={params.r}")
    q, rem = divmod((1 << params.n) * triangle_denominator(params), 6)
    if rem:
        raise ParamError(f"triangle count for {params} is not an integer")
    return q


def optimal_sampling_probability(params: Params, with_flag: bool = False):
    """Sampling probability maximising E[X - Y], clamped to 1.

    With ``with_flag=True`` returns ``(p, clamped)``.
    """
    d = triangle_denominator(params)
    if d < 2:
        p, clamped = 1.0, True
    else:
        p, clamped = math.sqrt(2 / d), False
    return (p, clamped) if with_flag else p


def _pow2_over(n: int, log_denominator: float) -> float:
    try:
        return math.exp(n * math.log(2) - log_denominator)
    except OverflowError:
        return math.inf


def lower_bound_probabilistic(params: Params) -> float:
    """c * 2^n / sqrt(C(n,r) C(r,r/2) C(n-r,r/2)) with c = 2*sqrt(2)/3.

    With no triangles at all (denominator 0, exploratory instances only) the
    whole cube is triangle-free and 2^n is returned.
    """
    d = triangle_denominator(params)
    if d == 0:
        return float(2 ** params.n) if params.n < 1024 else math.inf
    return ALTERATION_CONSTANT * _pow2_over(params.n, 0.5 * math.log(d))


def lower_bound_asymptotic(params: Params) -> float:
    """sqrt(2) (2/3) 2^n / (e^r 2^(r/2) (n/r)^(3r/4))."""
    n, r = params.n, params.r
    log_den = r + (r / 2) * math.log(2) + (3 * r / 4) * math.log(n / r)
    return math.sqrt(2) * (2 / 3) * _pow2_over(n, log_den)


def antipodal_size(n: int, p: int) -> int:
    if p < 1 or n % p:
        raise ParamError(f"p={p} does not divide n={n}")
    return 1 << (n // p + p - 1)


def fixed_bit_size(params: Params) -> int:
    h = params.half
    return binomial(params.n, h) - binomial(params.n - 2, h)


def frankl_bound(n: int, k: int, s: int) -> int:
    """Frankl's bound (s-1) C(n-1, k-1) on k-sets of [n] with no s disjoint members."""
    if k < 1 or s < 2:
        raise ParamError(f"need k >= 1 and s >= 2, got k={k}, s={s}")
    if n < k * s:
        raise NotApplicable(f"Frankl's bound needs n >= k*s, got n={n} < {k * s}")
    return (s - 1) * binomial(n - 1, k - 1)


def shadow_sum_r2(n: int) -> Fraction:
    """1 + sum_{k=1..n} (2/k) C(n, k-1), term by term."""
    return 1 + sum(Fraction(2, k) * binomial(n, k - 1) for k in range(1, n + 1))


def upper_bound_r2_exact(n: int) -> Fraction:
    """Closed form 1 + (2/(n+1)) (2^(n+1) - 2) of the r = 2 shadow sum."""
    if n < 1:
        raise ParamError(f"n must be positive, got {n}")
    return 1 + Fraction(2, n + 1) * (2 ** (n + 1) - 2)


def upper_bound_r2(n: int) -> int:
    """Integer upper bound for r = 2: the closed form rounded up."""
    return math.ceil(upper_bound_r2_exact(n))


def _check_level_sum_applicable(params: Params) -> None:
    _require_even(params, "the level-sum bound")
    if 2 * params.r > params.n:
        raise NotApplicable(
            f"no upper bound is proved for 2r > n (n={params.n}, r={params.r})"
        )


def level_bound(params: Params, k: int) -> tuple[int, str]:
    """Bound on the number of set members at level ``k`` and the rule used.

    Levels k <= r/2 get the trivial C(n, k).  Levels up to floor(n/2) use
    depth-r/2 shadows and Frankl's bound with s = 3; higher levels mirror
    their complement level n - k through covers.
    """
    _check_level_sum_applicable(params)
    n, h = params.n, params.half
    if not 0 <= k <= n:
        raise ParamError(f"level {k} outside 0..{n}")
    rule = "shadow"
    if k > n // 2:
        k, rule = n - k, "cover"
    if k <= h:
        return binomial(n, k), "trivial"
    j = k - h  # level of the shadows
    per_shadow = frankl_bound(n - j, h, 3)
    value = (binomial(n, j) * per_shadow) // binomial(k, h)
    return min(binomial(n, k), value), rule


@dataclass(frozen=True)
class LevelProfile:
    per_level: tuple[int, ...]
    rules: tuple[str, ...]

    @property
    def total(self) -> int:
        return sum(self.per_level)


def upper_bound_level_sum(params: Params) -> tuple[int, LevelProfile]:
    """Sum of per-level bounds, each level counted once, for 2r <= n."""
    _check_level_sum_applicable(params)
    pairs = [level_bound(params, k) for k in range(params.n + 1)]
    profile = LevelProfile(tuple(v for v, _ in pairs), tuple(t for _, t in pairs))
    return profile.total, profile


def paper_relaxation_chain(params: Params) -> tuple[Fraction, Fraction, Fraction]:
    """The three successively weaker doubled half-sums from the level-sum proof.

    The doubled form counts level n/2 twice for even n, so each is at least
    ``upper_bound_level_sum``.  The first entry is the "paper-literal" value.
    """
    _check_level_sum_applicable(params)
    n, r, h = params.n, params.r, params.half
    head = sum(binomial(n, i) for i in range(h + 1))
    ks = range(h + 1, n // 2 + 1)
    first = head + sum(Fraction(binomial(n, k) * r, n - (k - h)) for k in ks)
    second = head + sum(Fraction(binomial(n, k) * r, n - k + 1) for k in ks)
    third = head + sum(Fraction(binomial(n + 1, k) * r, n + 1) for k in ks)
    return 2 * first, 2 * second, 2 * third


def select_antipodal_prime(n: int, r: int) -> int | None:
    """Prime p with p | n, p does not divide r and n/p > r maximising 2^(n/p + p - 1).

    Ties go to the smaller prime; None if nothing qualifies.
    """
    best = None
    for p in range(2, n + 1):
        if n % p or not is_prime(p) or r % p == 0 or n // p <= r:
            continue
        score = n // p + p - 1
        if best is None or score > best[0]:
            best = (score, p)
    return None if best is None else best[1]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass
class BoundReport:
    params: Params
    triangle_count: int | None
    optimal_probability: float | None
    lower_probabilistic: float | None
    lower_asymptotic: float
    antipodal: tuple[int, int] | None
    fixed_bit: int
    upper_r2: int | None
    upper_level_sum: int | None
    upper_level_sum_paper_literal: Fraction | None
    level_profile: LevelProfile | None
    upper_applicable: bool
    reasons: dict[str, str] = field(default_factory=dict)

    def lower_values(self) -> dict[str, float]:
        out = {"fixed_bit": float(self.fixed_bit)}
        if self.lower_probabilistic is not None:
            out["lower_probabilistic"] = self.lower_probabilistic
        if self.antipodal is not None:
            out["antipodal"] = float(self.antipodal[1])
        return out

    def upper_values(self) -> dict[str, int]:
        out = {}
        if self.upper_r2 is not None:
            out["upper_r2"] = self.upper_r2
        if self.upper_level_sum is not None:
            out["upper_level_sum"] = self.upper_level_sum
        return out

    def to_dict(self) -> dict:
        """JSON-ready dict; exact integers become decimal strings."""

        def exact(x):
            return None if x is None else str(x)

        return {
            "n": self.params.n,
            "r": self.params.r,
            "exploratory": self.params.exploratory,
            "triangle_count": exact(self.triangle_count),
            "optimal_probability": self.optimal_probability,
            "lower_probabilistic": self.lower_probabilistic,
            "lower_asymptotic": self.lower_asymptotic,
            "antipodal": None
            if self.antipodal is None
            else {"p": self.antipodal[0], "size": str(self.antipodal[1])},
            "fixed_bit": exact(self.fixed_bit),
            "upper_r2": exact(self.upper_r2),
            "upper_level_sum": exact(self.upper_level_sum),
            "upper_level_sum_paper_literal": exact(self.upper_level_sum_paper_literal),
            "level_profile": None
            if self.level_profile is None
            else {
                "per_level": [str(v) for v in self.level_profile.per_level],
                "rules": list(self.level_profile.rules),
            },
            "upper_applicable": self.upper_applicable,
            "reasons": dict(self.reasons),
        }


def bound_report(params: Params) -> BoundReport:
    n, r = params.n, params.r
    reasons = {}
    even = r % 2 == 0
    if even:
        triangles = triangle_count_formula(params)
        p_opt = optimal_sampling_probability(params)
        lower = lower_bound_probabilistic(params)
    else:
        triangles = p_opt = lower = None
        reasons["lower_probabilistic"] = "r is odd"
    p = select_antipodal_prime(n, r)
    if p is None:
        reasons["antipodal"] = "no prime p with p | n, p not dividing r, n/p > r"
    upper_r2 = upper_bound_r2(n) if r == 2 else None
    if r != 2:
        reasons["upper_r2"] = "only for r = 2"
    level_sum = literal = profile = None
    if not even:
        reasons["upper_level_sum"] = "r is odd"
    elif 2 * r > n:
        reasons["upper_level_sum"] = "2r > n: no upper bound is known"
    else:
        level_sum, profile = upper_bound_level_sum(params)
        literal = paper_relaxation_chain(params)[0]
    return BoundReport(
        params=params,
        triangle_count=triangles,
        optimal_probability=p_opt,
        lower_probabilistic=lower,
        lower_asymptotic=lower_bound_asymptotic(params),
        antipodal=None if p is None else (p, antipodal_size(n, p)),
        fixed_bit=fixed_bit_size(params),
        upper_r2=upper_r2,
        upper_level_sum=level_sum,
        upper_level_sum_paper_literal=literal,
        level_profile=profile,
        upper_applicable=level_sum is not None,
        reasons=reasons,
    )
