"""Reader for the bundled knot-table file.

Records are blocks of ``KEY value`` lines starting with ``NAME``.  ``PD``
lines give one crossing each, ``JONES`` holds ``t_exp:coeff`` terms,
``KAUFFMAN`` holds ``a_exp,z_exp:coeff`` terms in the knot-table
normalization and ``TBMAX`` gives the maximal tb of the knot and of its
mirror.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import FrontSyntaxError
from .laurent import LaurentPoly1, LaurentPoly2
from .planar import PlanarDiagram
from .polys import jones, jones_from_t


@dataclass(frozen=True)
class KnotRecord:
    name: str
    source: str
    pd: PlanarDiagram
    jones_t: dict | None = None
    kauffman: LaurentPoly2 | None = None
    tb_max: tuple[int, int] | None = None

    def jones_poly(self) -> LaurentPoly1 | None:
        return None if self.jones_t is None else jones_from_t(self.jones_t)


def _num(tok: str):
    return Fraction(tok) if "/" in tok else int(tok)


def parse_knot_table(text: str) -> dict[str, KnotRecord]:
    records: dict[str, KnotRecord] = {}
    cur: dict | None = None

    def flush():
        if cur is None:
            return
        if not cur["pd"]:
            raise FrontSyntaxError(f"record {cur['name']} has no PD lines")
        records[cur["name"]] = KnotRecord(
            name=cur["name"], source=cur.get("source", ""),
            pd=PlanarDiagram(tuple(cur["pd"])), jones_t=cur.get("jones"),
            kauffman=cur.get("kauffman"), tb_max=cur.get("tb"))

    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "NAME":
                flush()
                cur = {"name": rest, "pd": []}
                continue
            if cur is None:
                raise ValueError("data before NAME")
            if key == "SOURCE":
                cur["source"] = rest
            elif key == "PD":
                labels = tuple(int(t) for t in rest.split())
                if len(labels) != 4:
                    raise ValueError("PD line needs four labels")
                cur["pd"].append(labels)
            elif key == "JONES":
                cur["jones"] = {_num(e): int(c) for e, c in
                                (t.split(":") for t in rest.split())}
            elif key == "KAUFFMAN":
                terms = {}
                for t in rest.split():
                    ez, c = t.split(":")
                    a, z = ez.split(",")
                    terms[(int(a), int(z))] = int(c)
                cur["kauffman"] = LaurentPoly2(terms)
            elif key == "TBMAX":
                a, b = rest.split()
                cur["tb"] = (int(a), int(b))
            else:
                raise ValueError(f"unknown key {key}")
        except ValueError as exc:
            raise FrontSyntaxError(f"knot table line {n}: {exc}") from exc
    flush()
    return records


def load_knot_table(path=None) -> dict[str, KnotRecord]:
    if path is None:
        text = resources.files("legcob.data").joinpath("knots.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_knot_table(text)


def verified_record(name: str, path=None) -> KnotRecord:
    """Load a record after checking its stored Jones against the engine.

    Guards against a corrupted or mistyped table entry being used as a
    reference value.
    """
    rec = load_knot_table(path)[name]
    if rec.jones_t is not None and jones(rec.pd) != rec.jones_poly():
        raise ValueError(f"table Jones of {name} disagrees with its PD code")
    return rec
