"""Based Gauss diagrams of braid closures.

The closure is traversed starting at the top of position 1: walk down the
braid, swapping position at every crossing the strand enters, and follow the
closure arc from the bottom of each position back to its top; when the walk
returns to its starting point one circle is complete, and the next circle
starts at the lowest unvisited top position.  Every crossing becomes one
arrow pointing from its over-passage to its under-passage and carrying the
crossing sign.  The base point sits in the gap just before the first
endpoint met on circle 0, so position 0 is immediately after it.

Canonical codes label arrows in order of first visit from the base point and
list one label/sign/T-or-H triple per endpoint.  The strings are stable
across releases and appear as golden values in the test suite.
"""

import dataclasses
from collections.abc import Iterable

from .braids import BraidWord

__all__ = [
    "Arrow",
    "EMPTY_CODE",
    "GaussDiagram",
    "canonical_code",
    "delete_arrows",
    "from_braid_closure",
    "gap_count",
    "isomorphic_unbased",
    "rebase",
    "writhe",
]

EMPTY_CODE = ""


@dataclasses.dataclass(frozen=True)
class Arrow:
    """One crossing: tail at the over-passage, head at the under-passage.

    Endpoints are (circle, position) pairs into a GaussDiagram.
    """

    tail: tuple[int, int]
    head: tuple[int, int]
    sign: int


@dataclasses.dataclass(frozen=True)
class GaussDiagram:
    """Signed directed chords on one or more based oriented circles.

    `endpoints[c][p]` is the endpoint at position p of circle c, stored as an
    (arrow index, is_head) pair; `arrows[i]` records where the two endpoints
    of arrow i sit.  Circle 0 carries the base point in the gap before
    position 0.  Both views must agree; the constructor checks.
    """

    endpoints: tuple[tuple[tuple[int, bool], ...], ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "endpoints", tuple(tuple(circle) for circle in self.endpoints)
        )
        object.__setattr__(self, "arrows", tuple(self.arrows))
        located: dict[tuple[int, bool], tuple[int, int]] = {}
        total = 0
        for c, circle in enumerate(self.endpoints):
            for p, (idx, is_head) in enumerate(circle):
                total += 1
                if not 0 <= idx < len(self.arrows):
                    raise ValueError(f"endpoint references arrow {idx}, out of range")
                key = (idx, is_head)
                if key in located:
                    kind = "head" if is_head else "tail"
                    raise ValueError(f"arrow {idx} has two {kind} endpoints")
                located[key] = (c, p)
        if total != 2 * len(self.arrows):
            raise ValueError(
                f"{total} endpoints for {len(self.arrows)} arrows; need exactly two each"
            )
        for i, arrow in enumerate(self.arrows):
            if arrow.sign not in (-1, 1):
                raise ValueError(f"arrow {i} has sign {arrow.sign}, expected +1 or -1")
            if located.get((i, False)) != arrow.tail or located.get((i, True)) != arrow.head:
                raise ValueError(f"arrow {i} endpoints disagree with the circle data")

    @property
    def circle_count(self) -> int:
        return len(self.endpoints)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)


def _assemble(
    endpoint_lists: Iterable[Iterable[tuple[int, bool]]], signs: tuple[int, ...]
) -> GaussDiagram:
    """Build a diagram from endpoint sequences; arrow ids must be 0..len(signs)-1."""
    lists = tuple(tuple(circle) for circle in endpoint_lists)
    tails: dict[int, tuple[int, int]] = {}
    heads: dict[int, tuple[int, int]] = {}
    for c, circle in enumerate(lists):
        for p, (idx, is_head) in enumerate(circle):
            (heads if is_head else tails)[idx] = (c, p)
    arrows = tuple(Arrow(tails[i], heads[i], signs[i]) for i in range(len(signs)))
    return GaussDiagram(lists, arrows)


def from_braid_closure(w: BraidWord) -> GaussDiagram:
    """Gauss diagram of the standard closure of `w`, one circle per component.

    For letter +i the strand in position i+1 is the overpass (arrow tail) and
    the sign is +1; for letter -i the strand in position i is the overpass
    and the sign is -1.
    """
    circles = []
    visited: set[int] = set()
    for start in range(1, w.strands + 1):
        if start in visited:
            continue
        seq: list[tuple[int, bool]] = []
        col = start
        while True:
            visited.add(col)
            for j, letter in enumerate(w.letters):
                i = abs(letter)
                if col == i or col == i + 1:
                    over_col = i + 1 if letter > 0 else i
                    seq.append((j, col != over_col))
                    col = 2 * i + 1 - col
            if col == start:
                break
        circles.append(seq)
    signs = tuple(1 if letter > 0 else -1 for letter in w.letters)
    return _assemble(circles, signs)


def writhe(g: GaussDiagram) -> int:
    """Sum of the arrow signs."""
    return sum(arrow.sign for arrow in g.arrows)


def delete_arrows(g: GaussDiagram, which: Iterable[int]) -> GaussDiagram:
    """Remove the named arrows, keeping cyclic order, base point, and arrow order."""
    doomed = set(which)
    for idx in doomed:
        if not 0 <= idx < g.arrow_count:
            raise ValueError(f"arrow index {idx} out of range 0..{g.arrow_count - 1}")
    kept = [i for i in range(g.arrow_count) if i not in doomed]
    relabel = {old: new for new, old in enumerate(kept)}
    lists = [
        [(relabel[idx], is_head) for idx, is_head in circle if idx not in doomed]
        for circle in g.endpoints
    ]
    signs = tuple(g.arrows[old].sign for old in kept)
    return _assemble(lists, signs)


def gap_count(g: GaussDiagram) -> int:
    """Number of base gaps on circle 0 (one per endpoint, or 1 on a bare circle)."""
    if g.circle_count < 1:
        raise ValueError("diagram has no circles")
    return max(1, len(g.endpoints[0]))


def rebase(g: GaussDiagram, gap: int) -> GaussDiagram:
    """Move the base to the gap before current position `gap` on circle 0.

    Gap 0 is today's base, so rebase(g, 0) returns an identical diagram.
    """
    gaps = gap_count(g)
    if not 0 <= gap < gaps:
        raise ValueError(f"gap {gap} out of range 0..{gaps - 1}")
    if gap == 0:
        return g
    circle = g.endpoints[0]
    lists = [tuple(circle[gap:]) + tuple(circle[:gap])] + [
        tuple(c) for c in g.endpoints[1:]
    ]
    signs = tuple(arrow.sign for arrow in g.arrows)
    return _assemble(lists, signs)


def canonical_code(g: GaussDiagram) -> str:
    """Base-anchored encoding of a one-circle diagram.

    Equal codes mean equal based diagrams.  The empty diagram encodes as
    EMPTY_CODE.
    """
    if g.circle_count != 1:
        raise ValueError("canonical codes are defined for one-circle diagrams only")
    labels: dict[int, int] = {}
    parts = []
    for idx, is_head in g.endpoints[0]:
        label = labels.setdefault(idx, len(labels) + 1)
        sign = "+" if g.arrows[idx].sign > 0 else "-"
        parts.append(f"{label}{sign}{'H' if is_head else 'T'}")
    return ",".join(parts)


def isomorphic_unbased(g1: GaussDiagram, g2: GaussDiagram) -> bool:
    """Whether some rebasing of g1 matches g2 as based diagrams.

    Implemented for one-circle diagrams by trying every base gap of g1
    against the canonical code of g2.
    """
    if g1.circle_count != 1 or g2.circle_count != 1:
        raise ValueError("unbased comparison is defined for one-circle diagrams only")
    if g1.arrow_count != g2.arrow_count:
        return False
    target = canonical_code(g2)
    return any(
        canonical_code(rebase(g1, gap)) == target for gap in range(gap_count(g1))
    )
