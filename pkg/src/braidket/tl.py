"""The diagrammatic Temperley-Lieb algebra TL_n.

A basis diagram is a non-crossing perfect pairing of 2n boundary points on a
rectangle: points 0..n-1 are the top row read left to right, points n..2n-1
are the bottom row read left to right.  Planarity is checked in rectangle
boundary order (top left-to-right, then bottom right-to-left), where the
pairing must nest like balanced parentheses.

Multiplication stacks the left factor above the right factor, gluing the
bottom row of the first onto the top row of the second.  Every closed loop
produced by the gluing contributes one factor of the loop value
delta = -A^2 - A^-2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ._uf import DisjointSet
from .errors import SizeLimitError
from .laurent import DELTA, LaurentPoly, ONE

__all__ = [
    "TLDiagram",
    "TLElement",
    "identity_diagram",
    "generator_diagram",
    "multiply",
    "closure_loop_count",
    "markov_trace",
    "enumerate_basis",
]


@dataclass(frozen=True, slots=True)
class TLDiagram:
    """A planar pairing of 2n points; ``pairing[p]`` is the partner of p."""

    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        n, pairing = self.n, self.pairing
        if n < 1:
            raise ValueError("strand count must be at least 1")
        size = 2 * n
        if len(pairing) != size:
            raise ValueError(f"pairing must list {size} points")
        for p, q in enumerate(pairing):
            if not 0 <= q < size:
                raise ValueError(f"point {p} paired outside range: {q}")
            if q == p:
                raise ValueError(f"point {p} paired with itself")
            if pairing[q] != p:
                raise ValueError("pairing is not an involution")
        # Balanced-parenthesis planarity test in boundary order.
        boundary = list(range(n)) + list(range(size - 1, n - 1, -1))
        seen: set[int] = set()
        stack: list[int] = []
        for p in boundary:
            if pairing[p] in seen:
                if not stack or stack[-1] != pairing[p]:
                    raise ValueError("pairing has crossing arcs")
                stack.pop()
            else:
                seen.add(p)
                stack.append(p)
        if stack:
            raise ValueError("pairing has crossing arcs")

    def arcs(self) -> list[tuple[int, int]]:
        """The n arcs as (smaller point, larger point) pairs."""
        return [(p, q) for p, q in enumerate(self.pairing) if p < q]

    def to_json(self) -> dict:
        return {"n": self.n, "pairing": list(self.pairing)}


def identity_diagram(n: int) -> TLDiagram:
    """All-vertical diagram: top k paired with bottom k."""
    pairing = list(range(n, 2 * n)) + list(range(n))
    return TLDiagram(n, tuple(pairing))


def generator_diagram(n: int, i: int) -> TLDiagram:
    """The multiplicative generator U_i of TL_n (i = 0 gives the identity).

    U_i pairs top points i, i+1 with each other, likewise bottom points i,
    i+1, and runs every other strand straight down.
    """
    if i == 0:
        return identity_diagram(n)
    if i < 0 or i >= n:
        raise ValueError(f"generator index {i} invalid for {n} strands")
    pairing = list(range(n, 2 * n)) + list(range(n))
    top_a, top_b = i - 1, i
    bot_a, bot_b = n + i - 1, n + i
    pairing[top_a], pairing[top_b] = top_b, top_a
    pairing[bot_a], pairing[bot_b] = bot_b, bot_a
    return TLDiagram(n, tuple(pairing))


@lru_cache(maxsize=None)
def _glue(top: TLDiagram, bottom: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack ``top`` over ``bottom``; return the glued diagram and loop count."""
    n = top.n
    pair_t, pair_b = top.pairing, bottom.pairing
    result: dict[int, int] = {}
    crossed: set[int] = set()  # interface positions traversed by a through-path

    def walk(side: str, p: int) -> tuple[str, int]:
        # Follow arcs across the interface until an external point is reached.
        while True:
            if side == "t":
                q = pair_t[p]
                if q < n:
                    return ("t", q)
                crossed.add(q - n)
                side, p = "b", q - n
            else:
                q = pair_b[p]
                if q >= n:
                    return ("b", q - n)
                crossed.add(q)
                side, p = "t", n + q

    def record(a: int, b: int) -> None:
        result[a] = b
        result[b] = a

    for t in range(n):
        if t in result:
            continue
        kind, q = walk("t", t)
        record(t, q if kind == "t" else n + q)
    for b in range(n):
        if n + b in result:
            continue
        kind, q = walk("b", n + b)
        # A walk from an external bottom point can only end at another one:
        # paths reaching the top row were already recorded above.
        record(n + b, n + q)

    loops = 0
    for start in range(n):
        if start in crossed:
            continue
        loops += 1
        side, p = "b", start
        while True:
            crossed.add(p if side == "b" else p - n)
            if side == "b":
                q = pair_b[p]
                side, p = "t", n + q
            else:
                q = pair_t[p]
                side, p = "b", q - n
            if side == "b" and p == start:
                break

    pairing = tuple(result[p] for p in range(2 * n))
    return TLDiagram(n, pairing), loops


@dataclass(eq=True)
class TLElement:
    """A formal Laurent-weighted sum of TL_n basis diagrams."""

    n: int
    combo: dict[TLDiagram, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for diagram, coeff in self.combo.items():
            if diagram.n != self.n:
                raise ValueError("all diagrams must share the element's strand count")
            if not coeff.is_zero:
                cleaned[diagram] = coeff
        self.combo = cleaned

    @classmethod
    def zero(cls, n: int) -> "TLElement":
        return cls(n, {})

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {identity_diagram(n): ONE})

    @classmethod
    def from_diagram(cls, diagram: TLDiagram, coeff: LaurentPoly | int = 1) -> "TLElement":
        coeff = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly({0: coeff})
        return cls(diagram.n, {diagram: coeff})

    def scaled(self, factor: LaurentPoly | int) -> "TLElement":
        return TLElement(self.n, {d: c * factor for d, c in self.combo.items()})

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        out = dict(self.combo)
        for d, c in other.combo.items():
            out[d] = out.get(d, LaurentPoly.zero()) + c
        return TLElement(self.n, out)

    def __neg__(self) -> "TLElement":
        return self.scaled(-1)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def to_json(self) -> list[dict]:
        entries = sorted(self.combo.items(), key=lambda kv: kv[0].pairing)
        return [{"diagram": d.to_json(), "coeff": c.to_json()} for d, c in entries]


def multiply(x: TLElement, y: TLElement) -> TLElement:
    """Bilinear diagram stacking; each loop contributes a factor delta."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: TL_{x.n} times TL_{y.n}")
    out: dict[TLDiagram, LaurentPoly] = {}
    for dx, cx in x.combo.items():
        for dy, cy in y.combo.items():
            glued, loops = _glue(dx, dy)
            coeff = cx * cy * DELTA**loops
            out[glued] = out.get(glued, LaurentPoly.zero()) + coeff
    return TLElement(x.n, out)


def closure_loop_count(d: TLDiagram) -> int:
    """Number of loops after joining top k to bottom k for every strand."""
    n = d.n
    ds = DisjointSet(2 * n)
    for p, q in enumerate(d.pairing):
        ds.union(p, q)
    for k in range(n):
        ds.union(k, n + k)
    return ds.component_count()


def markov_trace(x: TLElement) -> LaurentPoly:
    """TR(x) = sum of coeff(d) * delta^(closure loop count of d)."""
    total = LaurentPoly.zero()
    for diagram, coeff in x.combo.items():
        total = total + coeff * DELTA ** closure_loop_count(diagram)
    return total


def enumerate_basis(n: int) -> list[TLDiagram]:
    """All Catalan(n) basis diagrams of TL_n (guarded to n <= 8)."""
    if not 1 <= n <= 8:
        raise SizeLimitError(f"basis enumeration supports 1 <= n <= 8, got {n}")
    boundary = list(range(n)) + list(range(2 * n - 1, n - 1, -1))

    def matchings(points: tuple[int, ...]) -> list[list[tuple[int, int]]]:
        if not points:
            return [[]]
        first = points[0]
        results = []
        for k in range(1, len(points), 2):
            inner = matchings(points[1:k])
            outer = matchings(points[k + 1 :])
            for left in inner:
                for right in outer:
                    results.append([(first, points[k])] + left + right)
        return results

    diagrams = []
    for match in matchings(tuple(boundary)):
        pairing = [0] * (2 * n)
        for p, q in match:
            pairing[p] = q
            pairing[q] = p
        diagrams.append(TLDiagram(n, tuple(pairing)))
    return diagrams
