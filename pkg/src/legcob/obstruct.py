"""Filling consistency checks and non-collarability certificates.

A Legendrian knot K with an exact oriented Lagrangian filling of genus g
satisfies rot(K) = 0, tb(K) = 2g - 1 = TB(K) and g = g_s(K), where TB is
the maximal Thurston-Bennequin number of the smooth type and g_s its
4-ball genus.  If a transverse slice of a Lagrangian were collarable, the
piece on the concave side would be such a filling; a failed relation then
shows the slice is not collarable.

Verdicts never claim collarability.  No obstruction is reported as
``Consistent``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .braid import QPFactorization, braid_closure_pd, closure_components, expand, surface_data
from .errors import PreconditionError
from .polys import tb_upper_bound

ORIENTATION_NOTE = "filling surface assumed oriented"


class Status(Enum):
    Consistent = "Consistent"
    Violation = "Violation"
    NonCollarable = "NonCollarable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Reason:
    rule: str
    message: str

    def __str__(self):
        return self.message


@dataclass(frozen=True)
class Verdict:
    status: Status
    reasons: tuple[Reason, ...] = ()
    report: tuple[tuple[str, str], ...] = ()

    def messages(self) -> list[str]:
        return [r.message for r in self.reasons]


@dataclass(frozen=True)
class FillingClaim:
    tb: int
    rot: int
    genus: int
    slice_genus: int | None = None
    tb_max: int | None = None


@dataclass(frozen=True)
class CollarScenario:
    filling_genus_if_collared: int
    concave_side_genus: int | None = None
    tb_upper_bound: int | None = None

    def __post_init__(self):
        if self.concave_side_genus is None and self.tb_upper_bound is None:
            raise ValueError("need a concave-side genus or a tb bound")
        if self.filling_genus_if_collared < 0:
            raise ValueError("genus must be non-negative")


def fmt_int(n: int) -> str:
    """Integer with a typographic minus sign."""
    return f"−{-n}" if n < 0 else str(n)


def check_filling(c: FillingClaim) -> Verdict:
    reasons = []
    if c.rot != 0:
        reasons.append(Reason("rot", f"rot ≠ 0 (rot = {fmt_int(c.rot)})"))
    if c.tb != 2 * c.genus - 1:
        reasons.append(Reason("tb", f"tb ≠ 2g−1 ({fmt_int(c.tb)} ≠ {fmt_int(2 * c.genus - 1)})"))
    if c.slice_genus is not None and c.genus != c.slice_genus:
        reasons.append(Reason("genus", f"g ≠ g_s ({c.genus} ≠ {c.slice_genus})"))
    if c.tb_max is not None and c.tb != c.tb_max:
        reasons.append(Reason("tbmax", f"tb ≠ TB ({fmt_int(c.tb)} ≠ {fmt_int(c.tb_max)})"))
    status = Status.Violation if reasons else Status.Consistent
    report = (("assumption", ORIENTATION_NOTE),)
    return Verdict(status, tuple(reasons), report)


def collar_obstruction(s: CollarScenario) -> Verdict:
    g = s.filling_genus_if_collared
    reasons = []
    if s.concave_side_genus is not None and s.concave_side_genus != g:
        reasons.append(Reason("4-ball genus", "4-ball genus mismatch"))
    if s.tb_upper_bound is not None and s.tb_upper_bound < 2 * g - 1:
        reasons.append(Reason(
            "tb bound",
            f"tb bound {fmt_int(s.tb_upper_bound)} < {fmt_int(2 * g - 1)} = 2·{g}−1"))
    status = Status.NonCollarable if reasons else Status.Consistent
    report = [("filling_genus", str(g))]
    if s.concave_side_genus is not None:
        report.append(("concave_side_genus", str(s.concave_side_genus)))
    if s.tb_upper_bound is not None:
        report.append(("tb_upper_bound", str(s.tb_upper_bound)))
    return Verdict(status, tuple(reasons), tuple(report))


def certify_disk_slice(q: QPFactorization, crossing_cap: int | None = None) -> Verdict:
    """Run the quasi-positive disk pipeline and test the collar condition.

    The closure of a quasi-positive braid bounds a piece of complex curve
    with Euler characteristic n - k, a disk when k = n - 1.  A collarable
    boundary would then carry a genus 0 filling, forcing tb = -1.
    """
    data = surface_data(q)
    if not data.is_disk:
        raise PreconditionError(
            f"not a disk certificate: k = {data.k}, n - 1 = {data.n - 1}, knot = {data.is_knot}")
    word = expand(q)
    closure = closure_components(word)
    pd = braid_closure_pd(word)
    bound = tb_upper_bound(pd, crossing_cap)
    verdict = collar_obstruction(CollarScenario(0, tb_upper_bound=bound))
    report = (
        ("n", str(data.n)),
        ("k", str(data.k)),
        ("chi", str(data.chi)),
        ("word", str(word)),
        ("permutation", " ".join(str(p) for p in closure.permutation)),
        ("components", str(closure.component_count)),
        ("is_disk", "true"),
        ("crossings", str(len(pd.crossings))),
        ("tb_upper_bound", str(bound)),
        ("filling_genus", "0"),
    )
    return Verdict(verdict.status, verdict.reasons, report)


def format_verdict(v: Verdict) -> str:
    lines = [f"STATUS {v.status}"]
    lines += [f"{k.upper()} {val}" for k, val in v.report]
    lines += [f"REASON {r.message}" for r in v.reasons]
    return "\n".join(lines) + "\n"
