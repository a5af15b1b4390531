"""PD-coded unoriented link diagrams and the bracket state sum.

A crossing stores four arc labels in counterclockwise order (s0, s1, s2, s3),
with the strand through s0 and s2 passing under the strand through s1 and s3,
plus a sign used for the writhe.  A state chooses one smoothing per crossing:
the A-smoothing joins s0-s1 and s2-s3, the B-smoothing joins s0-s3 and s1-s2.
With the loop value delta = -A^2 - A^-2 and B specialized to A^-1, the state
sum

    [K] = sum over states of A^(#A) * A^-(#B) * delta^(loops - 1)

is the bracket polynomial.  The writhe normalization
f = (-A^3)^(-writhe) * [K] is invariant under all diagram moves, and the
substitution A = t^(-1/4) turns f into the Jones polynomial.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ._uf import DisjointSet
from .errors import ParseError, SizeLimitError
from .laurent import (
    DELTA,
    GaussianInt,
    LaurentPoly,
    QuarterLaurent,
    to_jones_variable,
)

__all__ = [
    "Crossing",
    "LinkDiagram",
    "StateSummary",
    "enumerate_states",
    "bracket_state_sum",
    "writhe",
    "normalize",
    "add_curl",
    "mirror_diagram",
    "diagram_to_json",
    "diagram_from_json",
]

MAX_CROSSINGS = 28


@dataclass(frozen=True, slots=True)
class Crossing:
    slots: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.slots) != 4:
            raise ValueError("a crossing has exactly four slots")
        if self.sign not in (-1, 1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True, slots=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")
        counts = Counter(s for c in self.crossings for s in c.slots)
        bad = [label for label, k in counts.items() if k != 2]
        if bad:
            raise ValueError(f"arc labels must occur exactly twice; bad: {sorted(bad)}")

    @property
    def is_empty(self) -> bool:
        return not self.crossings and self.free_loops == 0

    def arc_labels(self) -> list[int]:
        return sorted({s for c in self.crossings for s in c.slots})


@dataclass(frozen=True, slots=True)
class StateSummary:
    a_count: int
    b_count: int
    loops: int


def enumerate_states(diagram: LinkDiagram) -> list[StateSummary]:
    """All 2^N smoothing states with their loop counts."""
    n = len(diagram.crossings)
    if n > MAX_CROSSINGS:
        raise SizeLimitError(f"{n} crossings exceeds the {MAX_CROSSINGS}-crossing guard")
    # Endpoint c*4+s for slot s of crossing c; each arc joins its two slots.
    occurrences: dict[int, list[int]] = {}
    for c, crossing in enumerate(diagram.crossings):
        for s, label in enumerate(crossing.slots):
            occurrences.setdefault(label, []).append(4 * c + s)
    arc_joins = [tuple(points) for points in occurrences.values()]

    states = []
    for mask in range(1 << n):
        ds = DisjointSet(4 * n)
        for p, q in arc_joins:
            ds.union(p, q)
        a_count = 0
        for c in range(n):
            base = 4 * c
            if mask >> c & 1:
                a_count += 1
                ds.union(base, base + 1)
                ds.union(base + 2, base + 3)
            else:
                ds.union(base, base + 3)
                ds.union(base + 1, base + 2)
        loops = ds.component_count() + diagram.free_loops
        states.append(StateSummary(a_count, n - a_count, loops))
    return states


def bracket_state_sum(diagram: LinkDiagram) -> LaurentPoly:
    """Bracket polynomial by brute-force summation over all states."""
    if diagram.is_empty:
        raise ValueError("the empty diagram has no bracket")
    delta_powers = [LaurentPoly.one()]
    acc: dict[int, GaussianInt] = {}
    for state in enumerate_states(diagram):
        k = state.loops - 1
        while len(delta_powers) <= k:
            delta_powers.append(delta_powers[-1] * DELTA)
        shift = state.a_count - state.b_count
        for exp, coeff in delta_powers[k].terms():
            key = exp + shift
            total = acc.get(key, GaussianInt(0)) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
    return LaurentPoly(acc)


def writhe(diagram: LinkDiagram) -> int:
    """Sum of the crossing signs."""
    return sum(c.sign for c in diagram.crossings)


def writhe_factor(w: int) -> LaurentPoly:
    """(-A^3)^(-w), the curl-compensation monomial."""
    return LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)


def normalize(diagram: LinkDiagram) -> tuple[LaurentPoly, QuarterLaurent]:
    """Writhe-normalized invariant f and its Jones-variable form V."""
    f = writhe_factor(writhe(diagram)) * bracket_state_sum(diagram)
    return f, to_jones_variable(f)


def add_curl(diagram: LinkDiagram, sign: int) -> LinkDiagram:
    """Insert one kink of the given sign on an arc.

    Multiplies the bracket by exactly -A^3 (sign +1) or -A^-3 (sign -1) and
    shifts the writhe by the sign, leaving f unchanged.
    """
    if sign not in (-1, 1):
        raise ValueError("curl sign must be +1 or -1")
    if diagram.is_empty:
        raise ValueError("cannot add a curl to the empty diagram")

    labels = diagram.arc_labels()
    fresh = (max(labels) + 1) if labels else 0
    if not diagram.crossings:
        # A bare loop becomes a one-crossing kink split into arcs d and c.
        d, c = fresh, fresh + 1
        slots = (c, c, d, d) if sign > 0 else (d, c, c, d)
        return LinkDiagram(
            diagram.crossings + (Crossing(slots, sign),),
            diagram.free_loops - 1,
        )

    # Cut the lowest-numbered arc: its second occurrence becomes arc b, and
    # the kink introduces a small loop arc c.
    a = labels[0]
    b, c = fresh, fresh + 1
    new_crossings = []
    seen_once = False
    for crossing in diagram.crossings:
        slots = []
        for s in crossing.slots:
            if s == a and seen_once:
                slots.append(b)
            else:
                if s == a:
                    seen_once = True
                slots.append(s)
        new_crossings.append(Crossing(tuple(slots), crossing.sign))
    kink = (c, c, a, b) if sign > 0 else (a, c, c, b)
    new_crossings.append(Crossing(kink, sign))
    return LinkDiagram(tuple(new_crossings), diagram.free_loops)


def mirror_diagram(diagram: LinkDiagram) -> LinkDiagram:
    """Swap over- and under-strands everywhere and flip all signs.

    Sends the bracket <K>(A) to <K>(A^-1).
    """
    crossings = tuple(
        Crossing((c.slots[1], c.slots[2], c.slots[3], c.slots[0]), -c.sign)
        for c in diagram.crossings
    )
    return LinkDiagram(crossings, diagram.free_loops)


def diagram_to_json(diagram: LinkDiagram) -> dict:
    return {
        "crossings": [{"slots": list(c.slots), "sign": c.sign} for c in diagram.crossings],
        "free_loops": diagram.free_loops,
    }


def diagram_from_json(data: dict) -> LinkDiagram:
    try:
        crossings = tuple(
            Crossing(tuple(int(s) for s in entry["slots"]), int(entry["sign"]))
            for entry in data["crossings"]
        )
        free_loops = int(data.get("free_loops", 0))
        return LinkDiagram(crossings, free_loops)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed diagram JSON: {exc}") from exc
