"""Elementary cobordism moves on fronts, scripts and their bookkeeping.

Every move is a local rewrite of the event word.  Rows in the rewrite
tables are relative to the row ``j`` of the event being replaced (or, for
insertions, to the strand row ``r`` the insertion hangs from):

    R1a   strand r         ->  L(r+1) X(r) R(r+1)
    R1b   strand r         ->  L(r) X(r+1) R(r)
    R2a   L(j)             ->  L(j-1) X(j) X(j-1)      variant 0, cusp from above
          L(j)             ->  L(j+1) X(j) X(j+1)      variant 1, cusp from below
    R2b   R(j)             ->  X(j-1) X(j) R(j-1)      variant 0
          R(j)             ->  X(j+1) X(j) R(j+1)      variant 1
    R3    X(i) X(i+1) X(i) <-> X(i+1) X(i) X(i+1)
    SaddleUp   R(i) L(i)   ->  (nothing), orientations must agree
    Birth      (nothing)   ->  L(g+1) R(g+1)
    Death      L(i) R(i)   ->  (nothing), only with ``allow_caps``

Cobordism scripts are read bottom to top: the first front is the negative
end, each step is applied in order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from .errors import FrontSyntaxError, InvalidSite, StepError
from .front import (CROSS, LEFT, RIGHT, FrontDiagram, FrontEvent,
                    classical_invariants, parse_events, serialize_front)


class MoveKind(Enum):
    R1a = "R1a"
    R1b = "R1b"
    R2a = "R2a"
    R2b = "R2b"
    R1a_inv = "R1a-"
    R1b_inv = "R1b-"
    R2a_inv = "R2a-"
    R2b_inv = "R2b-"
    R3 = "R3"
    SaddleUp = "SaddleUp"
    Birth = "Birth"
    Death = "Death"
    FarCommute = "FarCommute"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, name: str) -> "MoveKind":
        name = name.replace("⁻", "-")
        for k in cls:
            if k.value == name or k.name == name:
                return k
        raise FrontSyntaxError(f"unknown move kind {name!r}")


REIDEMEISTER = frozenset({
    MoveKind.R1a, MoveKind.R1b, MoveKind.R2a, MoveKind.R2b, MoveKind.R1a_inv,
    MoveKind.R1b_inv, MoveKind.R2a_inv, MoveKind.R2b_inv, MoveKind.R3})

CHI_CHANGE = {MoveKind.Birth: 1, MoveKind.SaddleUp: -1, MoveKind.Death: 1}


@dataclass(frozen=True)
class MoveSite:
    """A move applied at event position ``index``.

    For insertions (R1a, R1b, Birth) ``index`` is the insertion slot and
    ``variant`` the 0-based strand row or gap; for R2 moves ``variant``
    picks the sub-case from the table above; otherwise it is 0.
    """

    kind: MoveKind
    index: int
    variant: int = 0

    def __str__(self):
        return f"{self.kind} {self.index} {self.variant}"


def _ev(kind, row):
    return FrontEvent(kind, row)


def _counts(events) -> list[int]:
    out = [0]
    for ev in events:
        out.append(out[-1] + ev.delta)
    return out


def _footprint(ev: FrontEvent, first: bool) -> tuple[int, int]:
    """Rows touched by ``ev`` measured in the state between two events, doubled.

    Gaps between rows sit at odd values, rows at even values.
    """
    i = ev.row
    if ev.kind == CROSS:
        return 2 * i, 2 * i + 2
    if (ev.kind == LEFT) == first:
        return 2 * i, 2 * i + 2
    return 2 * i - 1, 2 * i - 1


def far_commute(e1: FrontEvent, e2: FrontEvent):
    """Swap two adjacent events acting on separated rows, or return None."""
    lo1, hi1 = _footprint(e1, True)
    lo2, hi2 = _footprint(e2, False)
    if hi1 < lo2:
        # e2 lies below e1: it happens first, before e1 shifts rows
        return _ev(e2.kind, e2.row - e1.delta), e1
    if hi2 < lo1:
        return e2, _ev(e1.kind, e1.row + e2.delta)
    return None


def _rewrite(d: FrontDiagram, site: MoveSite, allow_caps=False, counts=None):
    """Return (start, old_length, new_events) or raise InvalidSite."""
    ev = d.events
    n = len(ev)
    k, v = site.index, site.variant
    kind = site.kind
    if counts is None:
        counts = _counts(ev)

    def at(j):
        if not 0 <= j < n:
            raise InvalidSite(f"{site}: index out of range")
        return ev[j]

    def window(length):
        if not 0 <= k or k + length > n:
            raise InvalidSite(f"{site}: window out of range")
        return ev[k:k + length]

    def need(cond, why):
        if not cond:
            raise InvalidSite(f"{site}: {why}")

    if kind in (MoveKind.R1a, MoveKind.R1b, MoveKind.Birth):
        need(0 <= k <= n, "insertion slot out of range")
        c = counts[k]
        if kind == MoveKind.Birth:
            need(0 <= v <= c, "gap out of range")
            return k, 0, [_ev(LEFT, v + 1), _ev(RIGHT, v + 1)]
        need(0 <= v < c, "no strand at that row")
        r = v + 1
        if kind == MoveKind.R1a:
            return k, 0, [_ev(LEFT, r + 1), _ev(CROSS, r), _ev(RIGHT, r + 1)]
        return k, 0, [_ev(LEFT, r), _ev(CROSS, r + 1), _ev(RIGHT, r)]

    if kind == MoveKind.R1a_inv:
        a, b, c = window(3)
        need((a.kind, b.kind, c.kind) == (LEFT, CROSS, RIGHT) and a.row >= 2
             and b.row == a.row - 1 and c.row == a.row, "no R1a kink here")
        return k, 3, []
    if kind == MoveKind.R1b_inv:
        a, b, c = window(3)
        need((a.kind, b.kind, c.kind) == (LEFT, CROSS, RIGHT)
             and b.row == a.row + 1 and c.row == a.row, "no R1b kink here")
        return k, 3, []

    if kind == MoveKind.R2a:
        e = at(k)
        need(e.kind == LEFT, "R2a needs a left cusp")
        j = e.row
        if v == 0:
            need(j >= 2, "no strand above the cusp")
            return k, 1, [_ev(LEFT, j - 1), _ev(CROSS, j), _ev(CROSS, j - 1)]
        need(v == 1 and counts[k] >= j, "no strand below the cusp")
        return k, 1, [_ev(LEFT, j + 1), _ev(CROSS, j), _ev(CROSS, j + 1)]
    if kind == MoveKind.R2b:
        e = at(k)
        need(e.kind == RIGHT, "R2b needs a right cusp")
        j = e.row
        if v == 0:
            need(j >= 2, "no strand above the cusp")
            return k, 1, [_ev(CROSS, j - 1), _ev(CROSS, j), _ev(RIGHT, j - 1)]
        need(v == 1 and counts[k] >= j + 2, "no strand below the cusp")
        return k, 1, [_ev(CROSS, j + 1), _ev(CROSS, j), _ev(RIGHT, j + 1)]
    if kind == MoveKind.R2a_inv:
        a, b, c = window(3)
        need(a.kind == LEFT and b.kind == CROSS and c.kind == CROSS, "no R2a pattern")
        m = a.row
        if v == 0:
            need(b.row == m + 1 and c.row == m, "no R2a pattern")
            return k, 3, [_ev(LEFT, m + 1)]
        need(v == 1 and m >= 2 and b.row == m - 1 and c.row == m, "no R2a pattern")
        return k, 3, [_ev(LEFT, m - 1)]
    if kind == MoveKind.R2b_inv:
        a, b, c = window(3)
        need(a.kind == CROSS and b.kind == CROSS and c.kind == RIGHT, "no R2b pattern")
        m = c.row
        if v == 0:
            need(a.row == m and b.row == m + 1, "no R2b pattern")
            return k, 3, [_ev(RIGHT, m + 1)]
        need(v == 1 and m >= 2 and a.row == m and b.row == m - 1, "no R2b pattern")
        return k, 3, [_ev(RIGHT, m - 1)]

    if kind == MoveKind.R3:
        a, b, c = window(3)
        need(a.kind == b.kind == c.kind == CROSS and a.row == c.row
             and abs(a.row - b.row) == 1, "no braid triple here")
        return k, 3, [_ev(CROSS, b.row), _ev(CROSS, a.row), _ev(CROSS, b.row)]

    if kind == MoveKind.SaddleUp:
        a, b = window(2)
        need(a.kind == RIGHT and b.kind == LEFT and a.row == b.row, "no R L pair")
        return k, 2, []
    if kind == MoveKind.Death:
        need(allow_caps, "Death moves need allow_caps")
        a, b = window(2)
        need(a.kind == LEFT and b.kind == RIGHT and a.row == b.row, "no isolated eye")
        return k, 2, []
    if kind == MoveKind.FarCommute:
        a, b = window(2)
        swapped = far_commute(a, b)
        need(swapped is not None, "events do not commute")
        return k, 2, list(swapped)
    raise InvalidSite(f"unsupported move {kind}")


def _thread_orientations(old: FrontDiagram, new_events, k, l_old, l_new):
    """Carry orientations across a rewrite of ``events[k:k+l_old]``.

    Returns (orientations, coherent).  Strand states at times up to ``k``
    and from ``k + l_new`` on are shared with the old word.
    """
    new = FrontDiagram(tuple(new_events))
    st_new, st_old = new._structure, old._structure
    wanted: dict[int, int] = {}
    coherent = True
    for t, state in enumerate(st_new.states):
        if k < t < k + l_new:
            continue
        t_old = t if t <= k else t - l_new + l_old
        old_state = st_old.states[t_old]
        for row, seg in enumerate(state):
            old_seg = old_state[row]
            comp = st_new.component_of[seg]
            o = old.segment_direction(old_seg) * st_new.canonical_dir[seg]
            if wanted.setdefault(comp, o) != o:
                coherent = False
    ors = tuple(wanted.get(c, 1) for c in range(len(st_new.cycles)))
    return ors, coherent


def _saddle_coherent(d: FrontDiagram, k: int) -> bool:
    st = d._structure
    i = d.events[k].row
    upper_in = st.segment_at(k, i)
    upper_out = st.segment_at(k + 2, i)
    return d.segment_direction(upper_in) == d.segment_direction(upper_out)


def apply_move(d: FrontDiagram, site: MoveSite, allow_caps: bool = False,
               allow_incoherent: bool = False) -> FrontDiagram:
    """Apply ``site`` to ``d``, threading orientations through the rewrite."""
    if site.kind == MoveKind.SaddleUp and not allow_incoherent:
        _rewrite(d, site)
        if not _saddle_coherent(d, site.index):
            raise InvalidSite(f"{site}: saddle joins strands with clashing orientations")
    start, length, repl = _rewrite(d, site, allow_caps)
    events = d.events[:start] + tuple(repl) + d.events[start + length:]
    ors, coherent = _thread_orientations(d, events, start, length, len(repl))
    if not coherent and not allow_incoherent:
        raise InvalidSite(f"{site}: orientations cannot be carried through")
    return FrontDiagram(events, ors)


def enumerate_moves(d: FrontDiagram, allow_caps: bool = False) -> list[MoveSite]:
    """All sites where a move schema matches as a contiguous pattern.

    Patterns hidden behind far-commuting events are reached through the
    FarCommute sites, which are listed too.
    """
    ev = d.events
    n = len(ev)
    counts = _counts(ev)
    sites: list[MoveSite] = []
    candidates = []
    for k in range(n + 1):
        # insertions always match; they are listed without a pattern check
        for v in range(counts[k] + 1):
            sites.append(MoveSite(MoveKind.Birth, k, v))
        for v in range(counts[k]):
            sites.append(MoveSite(MoveKind.R1a, k, v))
            sites.append(MoveSite(MoveKind.R1b, k, v))
    for k in range(n):
        e = ev[k]
        if e.kind == LEFT:
            candidates += [MoveSite(MoveKind.R2a, k, 0), MoveSite(MoveKind.R2a, k, 1)]
        elif e.kind == RIGHT:
            candidates += [MoveSite(MoveKind.R2b, k, 0), MoveSite(MoveKind.R2b, k, 1)]
        if k + 1 < n:
            candidates.append(MoveSite(MoveKind.FarCommute, k))
            if e.kind == RIGHT:
                candidates.append(MoveSite(MoveKind.SaddleUp, k))
            if allow_caps and e.kind == LEFT:
                candidates.append(MoveSite(MoveKind.Death, k))
        if k + 2 < n:
            if e.kind == LEFT:
                candidates += [MoveSite(MoveKind.R1a_inv, k), MoveSite(MoveKind.R1b_inv, k),
                               MoveSite(MoveKind.R2a_inv, k, 0), MoveSite(MoveKind.R2a_inv, k, 1)]
            elif e.kind == CROSS:
                candidates += [MoveSite(MoveKind.R3, k),
                               MoveSite(MoveKind.R2b_inv, k, 0), MoveSite(MoveKind.R2b_inv, k, 1)]
    # only a saddle can clash with orientations; everything else is a pattern check
    for s in candidates:
        try:
            _rewrite(d, s, allow_caps, counts)
        except InvalidSite:
            continue
        if s.kind == MoveKind.SaddleUp and not _saddle_coherent(d, s.index):
            continue
        sites.append(s)
    return sites


# --- canonical form ------------------------------------------------------

def canonical_swaps(events) -> tuple[tuple[FrontEvent, ...], list[int]]:
    """Greedy bubble sort under far commutation towards the lex-least word.

    Returns the normal form and the FarCommute indices applied in order.
    """
    ev = list(events)
    swaps = []
    k = 0
    while k < len(ev) - 1:
        sw = far_commute(ev[k], ev[k + 1])
        if sw is not None and (sw[0], sw[1]) < (ev[k], ev[k + 1]):
            ev[k], ev[k + 1] = sw
            swaps.append(k)
            k = max(k - 1, 0)
        else:
            k += 1
    return tuple(ev), swaps


def canonical_form(d: FrontDiagram) -> tuple[FrontEvent, ...]:
    return canonical_swaps(d.events)[0]


# --- scripts -------------------------------------------------------------

@dataclass(frozen=True)
class CobordismScript:
    bottom: FrontDiagram
    steps: tuple[MoveSite, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __add__(self, other: "CobordismScript") -> "CobordismScript":
        return CobordismScript(self.bottom, self.steps + other.steps)


@dataclass(frozen=True)
class CobordismReport:
    top: FrontDiagram
    chi: int
    saddles: int
    births: int
    deaths: int
    tb_bottom: int
    tb_top: int
    genus: Fraction | None
    ok: bool
    diagnostics: tuple[str, ...] = ()

    @property
    def genus_text(self) -> str:
        return "non-surface" if self.genus is None else str(self.genus)


def euler_characteristic(c: CobordismScript) -> int:
    return sum(CHI_CHANGE.get(s.kind, 0) for s in c.steps)


def _genus(chi: int, b: int) -> Fraction | None:
    g = Fraction(2 - b - chi, 2)
    if g.denominator != 1 or g < 0:
        return None
    return g


def verify_script(c: CobordismScript, allow_caps: bool = False,
                  allow_incoherent: bool = False) -> CobordismReport:
    """Replay a script and check the tb / Euler characteristic relation.

    Raises StepError (with the 0-based failing step) if a step does not
    apply.
    """
    d = c.bottom
    diags = []
    bookkeeping = True
    for n, s in enumerate(c.steps):
        if s.kind == MoveKind.SaddleUp and not _saddle_coherent_safe(d, s):
            if not allow_incoherent:
                raise StepError(f"step {n}: {s}: incoherent saddle", n)
            diags.append(f"step {n}: incoherent saddle, tb check skipped")
            bookkeeping = False
        if s.kind == MoveKind.Death:
            bookkeeping = False
        try:
            d = apply_move(d, s, allow_caps=allow_caps, allow_incoherent=allow_incoherent)
        except InvalidSite as exc:
            raise StepError(f"step {n}: {exc}", n) from exc
    if not bookkeeping and allow_caps and any(s.kind == MoveKind.Death for s in c.steps):
        diags.append("caps present, tb check skipped")
    kinds = [s.kind for s in c.steps]
    saddles, births = kinds.count(MoveKind.SaddleUp), kinds.count(MoveKind.Birth)
    deaths = kinds.count(MoveKind.Death)
    chi = births + deaths - saddles
    tb_bottom = classical_invariants(c.bottom).tb
    tb_top = classical_invariants(d).tb
    ok = True
    if bookkeeping and tb_top - tb_bottom != -chi:
        ok = False
        diags.append(f"tb_top - tb_bottom = {tb_top - tb_bottom} but -chi = {-chi}")
    genus = _genus(chi, c.bottom.n_components + d.n_components)
    return CobordismReport(d, chi, saddles, births, deaths, tb_bottom, tb_top,
                           genus, ok, tuple(diags))


def _saddle_coherent_safe(d, s) -> bool:
    try:
        _rewrite(d, s)
    except InvalidSite:
        return True  # let apply_move report the real problem
    return _saddle_coherent(d, s.index)


def format_script(c: CobordismScript) -> str:
    lines = [f"FRONT {serialize_front(c.bottom)}".rstrip()]
    lines += [f"MOVE {s.kind} {s.index} {s.variant}" for s in c.steps]
    return "\n".join(lines) + "\n"


def parse_script(text: str) -> CobordismScript:
    bottom = None
    steps = []
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "FRONT" and bottom is None:
            bottom = FrontDiagram(tuple(parse_events(" ".join(parts[1:]))))
        elif parts[0] == "MOVE" and bottom is not None and len(parts) in (3, 4):
            try:
                idx = int(parts[2])
                var = int(parts[3]) if len(parts) == 4 else 0
            except ValueError as exc:
                raise FrontSyntaxError(f"line {n}: bad move index") from exc
            steps.append(MoveSite(MoveKind.parse(parts[1]), idx, var))
        else:
            raise FrontSyntaxError(f"line {n}: cannot parse {line!r}")
    if bottom is None:
        raise FrontSyntaxError("script has no FRONT line")
    return CobordismScript(bottom, tuple(steps))


def read_script(path) -> CobordismScript:
    return parse_script(Path(path).read_text())


# --- search --------------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 4
    max_states: int = 20000
    max_events: int = 16


@dataclass(frozen=True)
class SearchResult:
    script: CobordismScript | None
    status: str  # "found", "exhausted" or "budget"
    states: int
    depth: int | None = None


def _canonical(d: FrontDiagram):
    form, swaps = canonical_swaps(d.events)
    cur = d
    for k in swaps:
        cur = apply_move(cur, MoveSite(MoveKind.FarCommute, k))
    return cur, swaps


def search_cobordism(start: FrontDiagram, target: FrontDiagram,
                     budget: SearchBudget | None = None,
                     allow_caps: bool = False) -> SearchResult:
    """Breadth-first search for a move script from ``start`` to ``target``.

    States are far-commutation normal forms.  The target is matched on its
    word; orientations of the found top may differ from ``target``'s.
    """
    budget = budget or SearchBudget()
    goal, goal_swaps = canonical_swaps(target.events)
    root, root_swaps = _canonical(start)
    prefix = [MoveSite(MoveKind.FarCommute, k) for k in root_swaps]
    suffix = [MoveSite(MoveKind.FarCommute, k) for k in reversed(goal_swaps)]

    def finish(path, depth, n_states):
        script = CobordismScript(start, tuple(prefix + path + suffix))
        report = verify_script(script, allow_caps=allow_caps)
        if not report.ok:
            raise AssertionError("search produced a script that fails verification")
        return SearchResult(script, "found", n_states, depth)

    key = (root.events, root.orientations)
    if root.events == goal:
        return finish([], 0, 1)
    parent = {key: None}
    queue = deque([(root, key, 0)])
    hit_budget = False
    while queue:
        d, dkey, depth = queue.popleft()
        if depth >= budget.max_depth:
            hit_budget = True
            continue
        for site in enumerate_moves(d, allow_caps=allow_caps):
            if site.kind == MoveKind.FarCommute:
                continue
            nxt = apply_move(d, site, allow_caps=allow_caps)
            if len(nxt.events) > budget.max_events:
                hit_budget = True
                continue
            canon, swaps = _canonical(nxt)
            nkey = (canon.events, canon.orientations)
            if nkey in parent:
                continue
            step = [site] + [MoveSite(MoveKind.FarCommute, k) for k in swaps]
            parent[nkey] = (dkey, step)
            if canon.events == goal:
                path = []
                cur = nkey
                while parent[cur] is not None:
                    prev, st = parent[cur]
                    path = st + path
                    cur = prev
                return finish(path, depth + 1, len(parent))
            if len(parent) >= budget.max_states:
                return SearchResult(None, "budget", len(parent))
            queue.append((canon, nkey, depth + 1))
    return SearchResult(None, "budget" if hit_budget else "exhausted", len(parent))
