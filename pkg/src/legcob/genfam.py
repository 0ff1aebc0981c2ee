"""Generating family of the standard capping disk, and a coordinate check.

The family F(s, t, eta) = s (eta^3/3 - 3/2 (rho(s) - t^2) eta) has fiber
critical points eta* = +-sqrt(3/2 (rho(s) - t^2)), so each slice {s} is a
front with two branches z = F(s, t, eta*) meeting in cusps at t^2 = rho(s):
empty while rho < 0, a standard eye once rho > 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSample, DomainError


def _bump(x: float) -> float:
    return math.exp(-1.0 / x) if x > 0 else 0.0


@dataclass(frozen=True)
class CutoffProfile:
    """Smooth increasing rho with rho = -1 on (0, delta] and 1 on [1 - delta, oo)."""

    delta: float = 0.1

    def __post_init__(self):
        if not 0 < self.delta < 0.5:
            raise ValueError("delta must lie in (0, 1/2)")

    def rho(self, s: float) -> float:
        x = (s - self.delta) / (1 - 2 * self.delta)
        if x <= 0:
            return -1.0
        if x >= 1:
            return 1.0
        a, b = _bump(x), _bump(1 - x)
        return -1.0 + 2.0 * a / (a + b)


def genfam_value(s: float, t: float, eta: float, profile: CutoffProfile | None = None) -> float:
    if s <= 0:
        raise DomainError("s must be positive")
    profile = profile or CutoffProfile()
    r = profile.rho(s)
    return s * (eta ** 3 / 3 - 1.5 * (r - t * t) * eta)


def critical_eta(s: float, t: float, profile: CutoffProfile | None = None) -> float | None:
    """Positive fiber critical point, or None when there is none."""
    profile = profile or CutoffProfile()
    gap = profile.rho(s) - t * t
    return math.sqrt(1.5 * gap) if gap > 0 else None


@dataclass(frozen=True)
class SlicePoint:
    t: float
    z: float
    eta: float
    branch: str


@dataclass(frozen=True)
class FrontSlice:
    s: float
    rho: float
    points: tuple[SlicePoint, ...] = ()
    cusp_ts: tuple[float, ...] = ()
    birth_moment: bool = False

    @property
    def empty(self) -> bool:
        return not self.points

    def branch(self, name: str) -> list[SlicePoint]:
        return [p for p in self.points if p.branch == name]


def t_grid(n: int = 201, lo: float = -1.5, hi: float = 1.5) -> np.ndarray:
    return np.linspace(lo, hi, n)


def front_slice(s: float, profile: CutoffProfile | None = None, grid=None) -> FrontSlice:
    if s <= 0:
        raise DomainError("s must be positive")
    profile = profile or CutoffProfile()
    grid = t_grid() if grid is None else grid
    r = profile.rho(s)
    pts = []
    for t in grid:
        t = float(t)
        eta = critical_eta(s, t, profile)
        if eta is None:
            continue
        for sign, name in ((1, "+"), (-1, "-")):
            e = sign * eta
            pts.append(SlicePoint(t, -2.0 / 3.0 * s * e ** 3, e, name))
    cusps = (-math.sqrt(r), math.sqrt(r)) if r > 0 else ()
    return FrontSlice(s, r, tuple(pts), cusps, birth_moment=(r == 0))


def slice_csv(sl: FrontSlice) -> str:
    lines = ["t,z,branch"]
    lines += [f"{p.t:.6f},{p.z:.12g},{p.branch}" for p in sl.points]
    return "\n".join(lines) + "\n"


# --- symplectic coordinate check -----------------------------------------

def original_map(q1, p1, q2, p2):
    """The coordinate tuple (q2, q1 p2, ln q1, p1)."""
    return np.array([q2, q1 * p2, math.log(q1), p1])


def corrected_map(q1, p1, q2, p2):
    """(x, y, z, t) = (q2, p2/q1, p1, ln q1), pulling d(e^t(dz - y dx)) back to the canonical form."""
    return np.array([q2, p2 / q1, p1, math.log(q1)])


MAPS = {"original": original_map, "corrected": corrected_map}

# slots in (q1, p1, q2, p2)
CANONICAL = np.zeros((4, 4))
CANONICAL[0, 1], CANONICAL[1, 0] = 1.0, -1.0
CANONICAL[2, 3], CANONICAL[3, 2] = 1.0, -1.0


def _target_form(x, y, z, t) -> np.ndarray:
    """Matrix of d(e^t (dz - y dx)) = e^t (dt^dz - y dt^dx - dy^dx) in (x, y, z, t)."""
    m = np.zeros((4, 4))
    e = math.exp(t)

    def add(i, j, c):
        m[i, j] += c
        m[j, i] -= c

    X, Y, Z, T = range(4)
    add(T, Z, e)
    add(T, X, -e * y)
    add(Y, X, -e)
    return m


def _jacobian(f, p, h):
    cols = []
    for j in range(4):
        dp = np.zeros(4)
        dp[j] = h
        cols.append((f(*(p + dp)) - f(*(p - dp))) / (2 * h))
    return np.column_stack(cols)


def orderings():
    """All assignments of the four image slots to (x, y, z, t)."""
    return list(itertools.permutations(range(4)))


def pullback_deviation(sample, h: float, variant: str = "original", order=(0, 1, 2, 3)) -> float:
    q1 = sample[0]
    if q1 <= h:
        raise DegenerateSample(f"q1 = {q1} must exceed the step h = {h}")
    f = MAPS[variant]
    order = list(order)

    def g(*args):
        return f(*args)[order]

    p = np.asarray(sample, dtype=float)
    jac = _jacobian(g, p, h)
    pulled = jac.T @ _target_form(*g(*p)) @ jac
    return float(np.max(np.abs(pulled - CANONICAL)))


@dataclass(frozen=True)
class SympCheck:
    deviation: float
    ordering: tuple[int, ...]
    variant: str
    per_ordering: dict = field(default_factory=dict, compare=False)


def symplecto_check(samples, h: float = 1e-5, variant: str = "original") -> SympCheck:
    """Minimum over orderings of the worst pullback deviation over ``samples``."""
    samples = [tuple(map(float, s)) for s in samples]
    for s in samples:
        if s[0] <= h:
            raise DegenerateSample(f"q1 = {s[0]} must exceed the step h = {h}")
    per = {}
    for order in orderings():
        per[order] = max(pullback_deviation(s, h, variant, order) for s in samples)
    best = min(per, key=lambda o: (per[o], o))
    return SympCheck(per[best], best, variant, per)


def random_samples(n: int = 100, seed: int = 0, lo: float = 0.5, hi: float = 2.0):
    rng = np.random.default_rng(seed)
    return [tuple(row) for row in rng.uniform(lo, hi, size=(n, 4))]
