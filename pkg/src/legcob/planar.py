"""PD-code carrier for smooth link diagrams.

Each crossing is a 4-tuple of edge labels listed counterclockwise starting
at the incoming under-strand, so slots 0 and 2 are under and 1 and 3 are
over.  A crossing is positive exactly when the over-strand enters through
slot 3.  Crossingless circles are counted in ``free_loops``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import FrontSyntaxError
from .front import CROSS, FrontDiagram, components

# counterclockwise order of the four ends of an X drawn with one strand
# from north-west to south-east (the "descending" strand) and one from
# south-west to north-east (the "ascending" strand)
_CCW = ("NE", "NW", "SW", "SE")


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        if self.signs is not None:
            object.__setattr__(self, "signs", tuple(self.signs))
        check_planar_diagram(self)

    def __len__(self):
        return len(self.crossings)

    def oriented_signs(self) -> tuple[int, ...]:
        if self.signs is not None:
            return self.signs
        return infer_signs(self)

    def writhe(self) -> int:
        return sum(self.oriented_signs())

    def n_components(self) -> int:
        return len(strand_cycles(self.crossings)) + self.free_loops


def check_planar_diagram(pd: PlanarDiagram) -> None:
    if any(len(c) != 4 for c in pd.crossings):
        raise ValueError("every crossing needs exactly four edge labels")
    counts = Counter(x for c in pd.crossings for x in c)
    bad = sorted(e for e, n in counts.items() if n != 2)
    if bad:
        raise ValueError(f"edge labels must appear exactly twice; offending: {bad}")
    if pd.free_loops < 0:
        raise ValueError("free_loops must be non-negative")
    if pd.signs is not None and (
            len(pd.signs) != len(pd.crossings) or any(s not in (1, -1) for s in pd.signs)):
        raise ValueError("signs must give +1/-1 for each crossing")


def occurrences(crossings) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for x, c in enumerate(crossings):
        for k, e in enumerate(c):
            occ.setdefault(e, []).append((x, k))
    return occ


def _other(occ, e, here):
    a, b = occ[e]
    return b if a == here else a


def strand_cycles(crossings, occ=None) -> list[list[tuple[int, int]]]:
    """Walk every component; returns lists of ``(crossing, entry_slot)``.

    The first walk direction of each component is arbitrary but fixed:
    start on its smallest edge label, heading to that edge's first
    occurrence in sorted order.
    """
    if occ is None:
        occ = occurrences(crossings)
    seen_edges: set[int] = set()
    cycles = []
    for e0 in sorted(occ):
        if e0 in seen_edges:
            continue
        cyc = []
        here = min(occ[e0])
        while True:
            x, k = here
            cyc.append(here)
            out_slot = (k + 2) % 4
            e = crossings[x][out_slot]
            seen_edges.add(crossings[x][k])
            here = _other(occ, e, (x, out_slot))
            if here == cyc[0]:
                break
        seen_edges.add(e0)
        cycles.append(cyc)
    return cycles


def infer_signs(pd: PlanarDiagram) -> tuple[int, ...]:
    """Crossing signs from the labels alone.

    Under-strands run from slot 0 to slot 2.  A component never passing
    under anything is oriented so that its labels increase, which is the
    standard convention for PD codes from knot tables.
    """
    crossings = pd.crossings
    occ = occurrences(crossings)
    over_entry: dict[int, int] = {}
    for cyc in strand_cycles(crossings, occ):
        forward = None
        for x, k in cyc:
            if k in (0, 2):
                forward = (k == 0)
                break
        if forward is None:
            edges = [crossings[x][(k + 2) % 4] for x, k in cyc]
            forward = _labels_increase(edges)
        walk = cyc if forward else _reverse_walk(crossings, cyc)
        for x, k in walk:
            if k in (1, 3):
                over_entry.setdefault(x, k)
    return tuple(1 if over_entry[x] == 3 else -1 for x in range(len(crossings)))


def _labels_increase(edges: list[int]) -> bool:
    pairs = list(zip(edges, edges[1:] + edges[:1]))
    return sum(b == a + 1 for a, b in pairs) >= sum(a == b + 1 for a, b in pairs)


def _reverse_walk(crossings, cyc):
    return [(x, (k + 2) % 4) for x, k in reversed(cyc)]


def build_pd(over: dict, passes: list[list[tuple]], free_loops: int = 0) -> PlanarDiagram:
    """Assemble a PD code from a geometric crossing description.

    ``over[c]`` is ``"D"`` or ``"U"`` naming which strand is on top at
    crossing ``c`` (``D`` runs north-west to south-east, ``U`` south-west
    to north-east).  ``passes`` holds one list per component of
    ``(c, strand, direction)`` in traversal order, direction ``+1`` meaning
    the strand is traversed left to right.  Edges are labelled 1, 2, ...
    consecutively along each component.
    """
    ends: dict = {}
    dirs: dict = {}
    label = 0
    for cyc in passes:
        m = len(cyc)
        base = label
        for j, (c, strand, direction) in enumerate(cyc):
            incoming = base + (j if j > 0 else m)
            outgoing = base + j + 1
            if strand == "D":
                left, right = "NW", "SE"
            else:
                left, right = "SW", "NE"
            if direction == 1:
                ends[(c, left)], ends[(c, right)] = incoming, outgoing
            else:
                ends[(c, right)], ends[(c, left)] = incoming, outgoing
            dirs[(c, strand)] = direction
        label += m
    out, signs = [], []
    for c in sorted(over):
        top = over[c]
        under = "U" if top == "D" else "D"
        if under == "U":
            start = "SW" if dirs[(c, "U")] == 1 else "NE"
        else:
            start = "NW" if dirs[(c, "D")] == 1 else "SE"
        r = _CCW.index(start)
        order = _CCW[r:] + _CCW[:r]
        out.append(tuple(ends[(c, slot)] for slot in order))
        same = dirs[(c, "D")] * dirs[(c, "U")]
        signs.append(same if top == "D" else -same)
    return PlanarDiagram(tuple(out), free_loops, tuple(signs))


def to_planar_diagram(d: FrontDiagram) -> PlanarDiagram:
    """Resolve a front into a smooth diagram: descending strand over, cusps smoothed."""
    st = d._structure
    passes = []
    loops = 0
    for cyc in components(d):
        seq = []
        for seg, direction in cyc:
            s = st.segments[seg]
            hit = s.right if direction == 1 else s.left
            if hit[0] != CROSS:
                continue
            e = hit[1]
            ul, ll, ur, lr = st.crossings[e]
            strand = "D" if seg in (ul, lr) else "U"
            seq.append((e, strand, direction))
        if seq:
            passes.append(seq)
        else:
            loops += 1
    over = {e: "D" for e in st.crossings}
    return build_pd(over, passes, loops)


def mirror(pd: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing; the tuple is rotated so it again starts under."""
    signs = pd.oriented_signs()
    out = []
    for c, s in zip(pd.crossings, signs):
        a, b, cc, dd = c
        out.append((dd, a, b, cc) if s == 1 else (b, cc, dd, a))
    return PlanarDiagram(tuple(out), pd.free_loops, tuple(-s for s in signs))


def disjoint_union(*pds: PlanarDiagram) -> PlanarDiagram:
    crossings, signs, loops, shift = [], [], 0, 0
    for pd in pds:
        m = max((x for c in pd.crossings for x in c), default=0)
        crossings.extend(tuple(x + shift for x in c) for c in pd.crossings)
        signs.extend(pd.oriented_signs())
        loops += pd.free_loops
        shift += m
    return PlanarDiagram(tuple(crossings), loops, tuple(signs))


def relabel_canonical(crossings) -> tuple[tuple[int, ...], ...]:
    """Relabel edges 1, 2, ... in order of first use."""
    mapping: dict[int, int] = {}
    out = []
    for c in crossings:
        row = []
        for e in c:
            if e not in mapping:
                mapping[e] = len(mapping) + 1
            row.append(mapping[e])
        out.append(tuple(row))
    return tuple(out)


def format_pd(pd: PlanarDiagram) -> str:
    lines = [f"X {a} {b} {c} {d}" for a, b, c, d in pd.crossings]
    if pd.free_loops:
        lines.append(f"O {pd.free_loops}")
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> PlanarDiagram:
    crossings, loops = [], 0
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "X" and len(parts) == 5:
                labels = tuple(int(p) for p in parts[1:])
                if min(labels) < 1:
                    raise ValueError
                crossings.append(labels)
                continue
            if parts[0] == "O" and len(parts) == 2:
                loops += int(parts[1])
                continue
        except ValueError:
            pass
        raise FrontSyntaxError(f"line {n}: cannot parse PD record {line!r}")
    try:
        return PlanarDiagram(tuple(crossings), loops)
    except ValueError as exc:
        raise FrontSyntaxError(str(exc)) from exc


def read_pd(path) -> PlanarDiagram:
    return parse_pd(Path(path).read_text())
