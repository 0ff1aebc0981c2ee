"""Braid words, quasi-positive factorizations and their closures.

A letter ``g`` stands for the generator sigma_|g| raised to sign(g).
Strands are drawn left to right with position 1 on top; a positive letter
is a positive crossing, so the writhe of the closure equals the exponent
sum of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import FrontSyntaxError
from .planar import PlanarDiagram, build_pd


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) > self.n - 1:
                raise ValueError(f"letter {g} is not a generator of B_{self.n}")

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-g for g in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def __str__(self):
        return " ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class QPFactorization:
    """Factors ``(w, i)`` standing for the conjugate ``w sigma_i w^-1``."""

    n: int
    factors: tuple[tuple[BraidWord, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((w, int(i)) for w, i in self.factors))
        for w, i in self.factors:
            if w.n != self.n:
                raise ValueError("conjugating word lives on the wrong number of strands")
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} outside 1..{self.n - 1}")

    @property
    def k(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class SurfaceData:
    n: int
    k: int
    chi: int
    is_knot: bool
    is_disk: bool
    slice_genus: Fraction | None


@dataclass(frozen=True)
class Closure:
    permutation: tuple[int, ...]
    component_count: int
    is_knot: bool


def expand(q: QPFactorization) -> BraidWord:
    letters: list[int] = []
    for w, i in q.factors:
        letters.extend(w.letters)
        letters.append(i)
        letters.extend(w.inverse().letters)
    return BraidWord(q.n, tuple(letters))


def closure_components(b: BraidWord) -> Closure:
    """Permutation of the trace closure (0-based, position -> final position)."""
    where = list(range(b.n))  # where[s] = current position of the strand starting at s
    pos_to_strand = list(range(b.n))
    for g in b.letters:
        i = abs(g) - 1
        s, t = pos_to_strand[i], pos_to_strand[i + 1]
        pos_to_strand[i], pos_to_strand[i + 1] = t, s
        where[s], where[t] = i + 1, i
    perm = tuple(where)
    seen = [False] * b.n
    cycles = 0
    for s in range(b.n):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return Closure(perm, cycles, cycles == 1)


def surface_data(q: QPFactorization) -> SurfaceData:
    closure = closure_components(expand(q))
    chi = q.n - q.k
    genus = Fraction(1 - chi, 2) if closure.is_knot else None
    return SurfaceData(
        n=q.n,
        k=q.k,
        chi=chi,
        is_knot=closure.is_knot,
        is_disk=closure.is_knot and q.k == q.n - 1,
        slice_genus=genus,
    )


def self_linking(b: BraidWord) -> int:
    return b.exponent_sum() - b.n


def braid_closure_pd(b: BraidWord) -> PlanarDiagram:
    """PD code of the trace closure, one crossing per letter."""
    n = b.n
    pos_to_strand = list(range(n))
    # passes[s] = list of (crossing, strand) met by the strand entering at s
    passes: list[list[tuple[int, str, int]]] = [[] for _ in range(n)]
    for c, g in enumerate(b.letters):
        i = abs(g) - 1
        s, t = pos_to_strand[i], pos_to_strand[i + 1]
        passes[s].append((c, "D", 1))
        passes[t].append((c, "U", 1))
        pos_to_strand[i], pos_to_strand[i + 1] = t, s
    closure = closure_components(b)
    cycles = []
    loops = 0
    seen = [False] * n
    for s0 in range(n):
        if seen[s0]:
            continue
        seq = []
        s = s0
        while not seen[s]:
            seen[s] = True
            seq.extend(passes[s])
            s = closure.permutation[s]
        if seq:
            cycles.append(seq)
        else:
            loops += 1
    over = {c: ("D" if g > 0 else "U") for c, g in enumerate(b.letters)}
    return build_pd(over, cycles, loops)


def parse_braid(text: str) -> BraidWord:
    """``B<n>`` header line followed by signed integers."""
    lines = _content_lines(text)
    if not lines:
        raise FrontSyntaxError("empty braid file")
    n = _header(lines[0])
    letters = []
    for line in lines[1:]:
        try:
            letters.extend(int(tok) for tok in line.split())
        except ValueError as exc:
            raise FrontSyntaxError(f"bad braid letter in {line!r}") from exc
    try:
        return BraidWord(n, tuple(letters))
    except ValueError as exc:
        raise FrontSyntaxError(str(exc)) from exc


def parse_qp(text: str) -> QPFactorization:
    """``B<n>`` header, then one ``W <signed ints> ; I <i>`` line per factor."""
    lines = _content_lines(text)
    if not lines:
        raise FrontSyntaxError("empty QP file")
    n = _header(lines[0])
    factors = []
    for line in lines[1:]:
        try:
            w_part, i_part = line.split(";")
            w_tok, i_tok = w_part.split(), i_part.split()
            if not w_tok or w_tok[0] != "W" or len(i_tok) != 2 or i_tok[0] != "I":
                raise ValueError
            w = BraidWord(n, tuple(int(t) for t in w_tok[1:]))
            factors.append((w, int(i_tok[1])))
        except ValueError as exc:
            raise FrontSyntaxError(f"bad factor line {line!r}") from exc
    try:
        return QPFactorization(n, tuple(factors))
    except ValueError as exc:
        raise FrontSyntaxError(str(exc)) from exc


def format_qp(q: QPFactorization) -> str:
    lines = [f"B{q.n}"]
    for w, i in q.factors:
        body = " ".join(str(g) for g in w.letters)
        lines.append(f"W {body} ; I {i}" if body else f"W ; I {i}")
    return "\n".join(lines) + "\n"


def format_braid(b: BraidWord) -> str:
    return f"B{b.n}\n{b}\n"


def read_qp(path) -> QPFactorization:
    return parse_qp(Path(path).read_text())


def read_braid(path) -> BraidWord:
    return parse_braid(Path(path).read_text())


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")]


def _header(line: str) -> int:
    if not line.startswith("B") or not line[1:].isdigit():
        raise FrontSyntaxError(f"expected a B<n> header, got {line!r}")
    return int(line[1:])
