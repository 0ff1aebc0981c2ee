"""Legendrian fronts encoded as words of Morse events.

A front is read left to right as a sequence of events on numbered strand
rows (row 1 is the top).  ``L<i>`` is a left cusp that creates two new
strands at rows ``i`` and ``i+1``; ``R<i>`` is a right cusp that joins the
strands at rows ``i`` and ``i+1``; ``X<i>`` is a crossing that swaps them.
At a crossing the strand moving from row ``i`` down to row ``i+1`` has the
smaller slope and is therefore the over-strand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FrontSyntaxError, ValidationError

LEFT, RIGHT, CROSS = "L", "R", "X"
_TOKEN = re.compile(r"^([LRX])([1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class FrontEvent:
    kind: str
    row: int

    def __post_init__(self):
        if self.kind not in (LEFT, RIGHT, CROSS):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.row < 1:
            raise ValueError("event rows are 1-based")

    def __str__(self):
        return f"{self.kind}{self.row}"

    @property
    def delta(self) -> int:
        """Change in strand count caused by the event."""
        return {LEFT: 2, RIGHT: -2, CROSS: 0}[self.kind]


@dataclass
class Segment:
    """A strand piece between two consecutive events touching it.

    ``left``/``right`` are ``(kind, event_index)`` where kind is ``"L"``,
    ``"R"`` or ``"X"``.  ``prev``/``next`` link through crossings;
    ``partner`` is the other branch of the cusp at the relevant end.
    """

    id: int
    start: int
    end: int = -1
    left: tuple[str, int] = ("", -1)
    right: tuple[str, int] = ("", -1)
    prev: int | None = None
    next: int | None = None
    left_partner: int | None = None
    right_partner: int | None = None


class _Structure:
    """Segments, per-time strand lists and component traversals of a word."""

    def __init__(self, events: Sequence[FrontEvent]):
        self.segments: list[Segment] = []
        self.states: list[tuple[int, ...]] = [()]
        # per crossing event: (upper-left, lower-left, upper-right, lower-right)
        self.crossings: dict[int, tuple[int, int, int, int]] = {}
        state: list[int] = []
        for e, ev in enumerate(events):
            i = ev.row
            if ev.kind == LEFT:
                u, d = self._new(e), self._new(e)
                u.left = d.left = (LEFT, e)
                u.left_partner, d.left_partner = d.id, u.id
                state[i - 1:i - 1] = [u.id, d.id]
            else:
                a, b = self.segments[state[i - 1]], self.segments[state[i]]
                a.end = b.end = e
                if ev.kind == RIGHT:
                    a.right = b.right = (RIGHT, e)
                    a.right_partner, b.right_partner = b.id, a.id
                    del state[i - 1:i + 1]
                else:
                    a.right = b.right = (CROSS, e)
                    a2, b2 = self._new(e), self._new(e)
                    a2.left = b2.left = (CROSS, e)
                    # a (row i) descends into b2 (row i+1); b rises into a2
                    a.next, b2.prev = b2.id, a.id
                    b.next, a2.prev = a2.id, b.id
                    state[i - 1:i + 1] = [a2.id, b2.id]
                    self.crossings[e] = (a.id, b.id, a2.id, b2.id)
            self.states.append(tuple(state))
        self._traverse()

    def _new(self, e: int) -> Segment:
        seg = Segment(id=len(self.segments), start=e)
        self.segments.append(seg)
        return seg

    def _traverse(self):
        self.component_of: list[int] = [-1] * len(self.segments)
        self.canonical_dir: list[int] = [0] * len(self.segments)
        self.cycles: list[list[tuple[int, int]]] = []
        for s0 in range(len(self.segments)):
            if self.component_of[s0] >= 0:
                continue
            comp = len(self.cycles)
            cycle = []
            s, d = s0, 1
            while True:
                self.component_of[s] = comp
                self.canonical_dir[s] = d
                cycle.append((s, d))
                seg = self.segments[s]
                if d == 1:
                    if seg.right[0] == CROSS:
                        s = seg.next
                    else:
                        s, d = seg.right_partner, -1
                else:
                    if seg.left[0] == CROSS:
                        s = seg.prev
                    else:
                        s, d = seg.left_partner, 1
                if s == s0:
                    break
            self.cycles.append(cycle)

    def segment_at(self, time: int, row: int) -> int:
        return self.states[time][row - 1]


@dataclass(frozen=True)
class FrontDiagram:
    """A validated front word plus one orientation sign per component.

    ``orientations[k] == +1`` means component ``k`` is traversed in its
    canonical sense: its first segment (smallest event index, then
    smallest row) runs left to right.
    """

    events: tuple[FrontEvent, ...]
    orientations: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        validate_events(self.events)
        n = len(self._structure.cycles)
        if self.orientations is None:
            object.__setattr__(self, "orientations", (1,) * n)
        else:
            ors = tuple(int(o) for o in self.orientations)
            if len(ors) != n or any(o not in (1, -1) for o in ors):
                raise ValidationError(
                    f"need {n} orientation signs in {{+1, -1}}, got {ors!r}")
            object.__setattr__(self, "orientations", ors)

    @cached_property
    def _structure(self) -> _Structure:
        return _Structure(self.events)

    def __len__(self):
        return len(self.events)

    def __str__(self):
        return serialize_front(self)

    @property
    def n_components(self) -> int:
        return len(self._structure.cycles)

    def segment_direction(self, seg: int) -> int:
        st = self._structure
        return st.canonical_dir[seg] * self.orientations[st.component_of[seg]]

    def strand_counts(self) -> list[int]:
        return [len(s) for s in self._structure.states]

    def with_orientations(self, orientations: Iterable[int]) -> "FrontDiagram":
        return FrontDiagram(self.events, tuple(orientations))

    def reversed_component(self, k: int) -> "FrontDiagram":
        ors = list(self.orientations)
        ors[k] = -ors[k]
        return FrontDiagram(self.events, tuple(ors))


def validate_events(events: Sequence[FrontEvent]) -> None:
    """Strand-count audit; raises ValidationError naming the 1-based event."""
    count = 0
    for n, ev in enumerate(events, start=1):
        i = ev.row
        if ev.kind == LEFT:
            if not 1 <= i <= count + 1:
                raise ValidationError(
                    f"event {n} ({ev}): left cusp needs 1 <= row <= {count + 1}", index=n)
        elif not 1 <= i <= count - 1:
            raise ValidationError(
                f"event {n} ({ev}): needs row <= count - 1 = {count - 1}", index=n)
        count += ev.delta
    if count != 0:
        raise ValidationError(f"front ends with {count} open strands", index=len(events))


def parse_events(text: str) -> list[FrontEvent]:
    events = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for tok in line.split():
            m = _TOKEN.match(tok)
            if not m:
                raise FrontSyntaxError(f"bad front token {tok!r}")
            events.append(FrontEvent(m.group(1), int(m.group(2))))
    return events


def parse_front(text: str) -> FrontDiagram:
    """Parse a front word such as ``"L1 L3 X2 X2 X2 R1 R3"``."""
    return FrontDiagram(tuple(parse_events(text)))


def serialize_front(d: FrontDiagram) -> str:
    return " ".join(str(ev) for ev in d.events)


def front(text_or_events) -> FrontDiagram:
    if isinstance(text_or_events, FrontDiagram):
        return text_or_events
    if isinstance(text_or_events, str):
        return parse_front(text_or_events)
    return FrontDiagram(tuple(text_or_events))


def components(d: FrontDiagram) -> list[list[tuple[int, int]]]:
    """Components as cyclic lists of ``(segment_id, direction)`` pairs.

    Directions follow the diagram's orientation (``+1`` is left to right).
    """
    st = d._structure
    out = []
    for k, cycle in enumerate(st.cycles):
        if d.orientations[k] == 1:
            out.append(list(cycle))
        else:
            rev = [(s, -dr) for s, dr in reversed(cycle)]
            out.append(rev[-1:] + rev[:-1])
    return out


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rot: int
    writhe: int
    cusps: int
    components: int


def crossing_signs(d: FrontDiagram) -> dict[int, int]:
    """Sign of each crossing event: +1 when both strands run the same way."""
    st = d._structure
    out = {}
    for e, (ul, ll, _ur, _lr) in st.crossings.items():
        out[e] = d.segment_direction(ul) * d.segment_direction(ll)
    return out


def cusp_directions(d: FrontDiagram) -> dict[int, int]:
    """+1 for a down-cusp, -1 for an up-cusp, keyed by event index."""
    st = d._structure
    out = {}
    for e, ev in enumerate(d.events):
        if ev.kind == CROSS:
            continue
        if ev.kind == LEFT:
            upper = st.segment_at(e + 1, ev.row)
            # leaving the cusp rightwards along the upper branch means we
            # arrived on the lower branch and moved up
            out[e] = -1 if d.segment_direction(upper) == 1 else 1
        else:
            upper = st.segment_at(e, ev.row)
            out[e] = 1 if d.segment_direction(upper) == 1 else -1
    return out


def classical_invariants(d: FrontDiagram) -> ClassicalInvariants:
    writhe = sum(crossing_signs(d).values())
    cusp_dirs = cusp_directions(d)
    cusps = len(cusp_dirs)
    rot2 = sum(cusp_dirs.values())
    assert rot2 % 2 == 0
    return ClassicalInvariants(
        tb=writhe - cusps // 2,
        rot=rot2 // 2,
        writhe=writhe,
        cusps=cusps,
        components=d.n_components,
    )
