"""Hypercube vertices, Hamming distance and the r-distance graph.

Vertices are plain ints used as bit masks.  Coordinate ``i`` (1-based) lives
at bit ``i - 1``, and a printed 0-1 string shows coordinate 1 leftmost, so
``"110"`` is the int ``0b011 == 3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

N_MAX = 64


class ParamError(ValueError):
    """Raised for an invalid (n, r) instance or operation argument."""


class GuardError(RuntimeError):
    """Raised when an instance is too large to enumerate."""


class FormatError(ValueError):
    """Raised by the vertex-set text parser."""


@dataclass(frozen=True)
class Params:
    """An (n, r) instance.

    Strict mode requires r even and 2 <= r <= 2n/3; with ``exploratory=True``
    any 1 <= r <= n is accepted.  n itself is uncapped here so the bound
    formulas work for any size; materialised enumeration checks ``N_MAX``.
    """

    n: int
    r: int
    exploratory: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ParamError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.r, int) or self.r < 1:
            raise ParamError(f"r must be a positive integer, got {self.r!r}")
        if self.exploratory:
            if self.r > self.n:
                raise ParamError(f"r={self.r} exceeds n={self.n}")
            return
        if self.r % 2:
            raise ParamError(f"r must be even in strict mode, got r={self.r}")
        if not 2 <= self.r <= (2 * self.n) // 3:
            raise ParamError(
                f"strict mode needs 2 <= r <= floor(2n/3) = {(2 * self.n) // 3}, "
                f"got r={self.r}; pass exploratory=True to allow it"
            )

    @property
    def half(self) -> int:
        """r // 2, the weight of the half-distance masks."""
        return self.r // 2


def check_enumerable(n: int) -> None:
    if n > N_MAX:
        raise GuardError(f"n={n} exceeds the enumeration cap N_MAX={N_MAX}")


def check_vertex(v: int, n: int) -> None:
    if v < 0 or v >> n:
        raise ParamError(f"vertex {v} does not fit in dimension n={n}")


def parse_vertex(s: str, n: int | None = None) -> int:
    s = s.strip()
    if n is not None and len(s) != n:
        raise FormatError(f"expected a {n}-character 0-1 string, got {s!r}")
    if not s or set(s) - {"0", "1"}:
        raise FormatError(f"not a 0-1 string: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def format_vertex(v: int, n: int) -> str:
    check_vertex(v, n)
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def hamming_distance(u: int, v: int, n: int | None = None) -> int:
    """Number of coordinates where ``u`` and ``v`` differ.

    If ``n`` is given both vertices are checked to fit in dimension ``n``.
    """
    if n is not None:
        check_vertex(u, n)
        check_vertex(v, n)
    return (u ^ v).bit_count()


def level(v: int) -> int:
    return v.bit_count()


@lru_cache(maxsize=256)
def weight_masks(n: int, w: int) -> tuple[int, ...]:
    """All n-bit masks with exactly ``w`` set bits, ascending."""
    check_enumerable(n)
    if w < 0 or w > n:
        return ()
    return tuple(sorted(sum(1 << i for i in c) for c in combinations(range(n), w)))


def r_neighbors(v: int, params: Params) -> Iterator[int]:
    """Yield the C(n, r) vertices at distance exactly r from ``v``, ascending."""
    check_vertex(v, params.n)
    yield from sorted(v ^ m for m in weight_masks(params.n, params.r))


def is_triangle(u: int, v: int, w: int, params: Params) -> bool:
    if len({u, v, w}) != 3:
        raise ParamError("is_triangle needs three distinct vertices")
    for x in (u, v, w):
        check_vertex(x, params.n)
    r = params.r
    return (u ^ v).bit_count() == r and (u ^ w).bit_count() == r and (v ^ w).bit_count() == r


def _submasks_of_weight(mask: int, depth: int) -> list[int]:
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    return [sum(c) for c in combinations(bits, depth)]


def shadows(v: int, depth: int = 1) -> Iterator[int]:
    """Yield every vertex obtained by clearing exactly ``depth`` ones of ``v``."""
    if depth < 0 or depth > level(v):
        raise ParamError(f"depth {depth} exceeds level {level(v)} of the vertex")
    yield from sorted(v ^ m for m in _submasks_of_weight(v, depth))


def covers(v: int, depth: int, params: Params | int) -> Iterator[int]:
    """Yield every vertex obtained by setting exactly ``depth`` zeros of ``v``.

    ``params`` may be a Params or just the dimension n.
    """
    n = params if isinstance(params, int) else params.n
    check_vertex(v, n)
    zeros = ((1 << n) - 1) ^ v
    if depth < 0 or depth > zeros.bit_count():
        raise ParamError(f"depth {depth} exceeds the {zeros.bit_count()} zeros of the vertex")
    yield from sorted(v | m for m in _submasks_of_weight(zeros, depth))


class VertexSet:
    """Sorted duplicate-free set of n-bit vertices with O(1) membership."""

    __slots__ = ("n", "members", "_lookup")

    def __init__(self, n: int, members: Iterable[int] = ()):
        check_enumerable(n)
        ordered = tuple(sorted(set(members)))
        for v in ordered:
            check_vertex(v, n)
        self.n = n
        self.members = ordered
        self._lookup = frozenset(ordered)

    def __repr__(self):
        return f"VertexSet(n={self.n}, size={len(self.members)})"

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.members))

    def __contains__(self, v) -> bool:
        return v in self._lookup

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def strings(self) -> list[str]:
        return [format_vertex(v, self.n) for v in self.members]

    @classmethod
    def from_strings(cls, lines: Iterable[str], n: int | None = None) -> "VertexSet":
        lines = list(lines)
        if n is None:
            if not lines:
                raise FormatError("cannot infer n from an empty list")
            n = len(lines[0].strip())
        return cls(n, (parse_vertex(s, n) for s in lines))

    def translate(self, mask: int) -> "VertexSet":
        """XOR every member with ``mask``."""
        check_vertex(mask, self.n)
        return VertexSet(self.n, (v ^ mask for v in self.members))


_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)(?:\s+r\s*=\s*(\d+))?\s*$")


def parse_vertex_set(text: str, n: int | None = None) -> tuple[VertexSet, int | None]:
    """Parse the vertex-set text format.

    Returns the set and the ``r`` from the ``# n=<n> r=<r>`` header if one was
    present.  A header ``n`` that disagrees with an explicit ``n`` is an error.
    """
    header_r = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m and not rows:
                hn = int(m.group(1))
                if n is not None and hn != n:
                    raise FormatError(f"header says n={hn} but n={n} was requested")
                n = hn
                if m.group(2) is not None:
                    header_r = int(m.group(2))
            continue
        if n is None:
            n = len(line)
        try:
            rows.append(parse_vertex(line, n))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FormatError("empty input without an '# n=<n>' header")
    return VertexSet(n, rows), header_r


def format_vertex_set(vs: VertexSet, r: int | None = None) -> str:
    head = f"# n={vs.n}" + (f" r={r}" if r is not None else "")
    return "\n".join([head, *vs.strings()]) + "\n"
