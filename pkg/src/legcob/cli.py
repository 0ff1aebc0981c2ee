"""Command-line entry point ``legcob``.

Exit status: 0 on success or a Consistent verdict, 1 on a Violation,
NonCollarable verdict or failed check, 2 on usage and input errors.
Reports are plain ``KEY VALUE`` lines; figures go to the files named by
``--out``/``--plot``.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .braid import (braid_closure_pd, closure_components, expand, parse_braid, parse_qp,
                    self_linking, surface_data)
from .errors import (CrossingCapExceeded, DegenerateSample, DomainError, FrontSyntaxError,
                     InvalidSite, NonterminationGuard, PreconditionError, StepError,
                     ValidationError)
from .front import classical_invariants, parse_front, serialize_front
from .genfam import CutoffProfile, front_slice, random_samples, slice_csv, symplecto_check
from .moves import (MoveKind, MoveSite, SearchBudget, apply_move, enumerate_moves,
                    format_script, parse_script, search_cobordism, verify_script)
from .obstruct import (CollarScenario, FillingClaim, Status, certify_disk_slice,
                       check_filling, collar_obstruction, format_verdict)
from .planar import format_pd, parse_pd, to_planar_diagram
from .polys import jones, kauffman_poly, tb_upper_bound

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(path: str, args) -> Path:
    """Find an input file: as given, then in ``--fixtures``, then bundled."""
    p = Path(path)
    if p.is_file():
        return p
    if args.fixtures:
        q = Path(args.fixtures) / p.name
        if q.is_file():
            return q
    bundled = resources.files("legcob.fixtures").joinpath(p.name)
    if p.name and bundled.is_file():
        return Path(str(bundled))
    raise UsageError(f"no such file: {path}")


def _read(path: str, args) -> str:
    return _resolve(path, args).read_text()


def _front(arg: str, args):
    """A front word given inline, or the name of a file holding one."""
    try:
        return parse_front(arg)
    except FrontSyntaxError:
        return parse_front(_read(arg, args))


def _is_front_text(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return line[0] in "LR"
    return False


def _pd(arg: str, args):
    text = _read(arg, args)
    if _is_front_text(text):
        return to_planar_diagram(parse_front(text))
    return parse_pd(text)


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _verdict_exit(status: Status) -> int:
    return EXIT_OK if status == Status.Consistent else EXIT_FAIL


# --- handlers ------------------------------------------------------------

def cmd_tb(args) -> int:
    ci = classical_invariants(_front(args.front, args))
    out = [f"tb {ci.tb}"]
    if args.all:
        out += [f"rot {ci.rot}", f"writhe {ci.writhe}", f"cusps {ci.cusps}",
                f"components {ci.components}"]
    _emit(out)
    return EXIT_OK


def cmd_moves_list(args) -> int:
    d = _front(args.front, args)
    for s in enumerate_moves(d, allow_caps=args.allow_caps):
        print(f"MOVE {s}")
    return EXIT_OK


def cmd_moves_apply(args) -> int:
    d = _front(args.front, args)
    site = MoveSite(MoveKind.parse(args.kind), args.index, args.variant)
    new = apply_move(d, site, allow_caps=args.allow_caps)
    print(serialize_front(new))
    return EXIT_OK


def cmd_cob_verify(args) -> int:
    script = parse_script(_read(args.script, args))
    rep = verify_script(script, allow_caps=args.allow_caps, allow_incoherent=args.allow_incoherent)
    _emit([
        f"OK {'true' if rep.ok else 'false'}",
        f"TOP {serialize_front(rep.top)}".rstrip(),
        f"CHI {rep.chi}",
        f"BIRTHS {rep.births}",
        f"SADDLES {rep.saddles}",
        f"TB_BOTTOM {rep.tb_bottom}",
        f"TB_TOP {rep.tb_top}",
        f"GENUS {rep.genus_text}",
    ] + [f"NOTE {d}" for d in rep.diagnostics])
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_cob_search(args) -> int:
    start = _front(args.start, args) if args.start != "-" else parse_front("")
    target = _front(args.target, args) if args.target != "-" else parse_front("")
    budget = SearchBudget(args.max_depth, args.max_states, args.max_events)
    res = search_cobordism(start, target, budget, allow_caps=args.allow_caps)
    print(f"# STATUS {res.status} STATES {res.states}")
    if res.script is None:
        return EXIT_FAIL
    sys.stdout.write(format_script(res.script))
    return EXIT_OK


def cmd_braid_expand(args) -> int:
    q = parse_qp(_read(args.file, args))
    print(expand(q))
    return EXIT_OK


def cmd_braid_surface(args) -> int:
    q = parse_qp(_read(args.file, args))
    sd = surface_data(q)
    cl = closure_components(expand(q))
    _emit([
        f"N {sd.n}", f"K {sd.k}", f"CHI {sd.chi}",
        f"PERMUTATION {' '.join(map(str, cl.permutation))}",
        f"COMPONENTS {cl.component_count}",
        f"IS_KNOT {str(sd.is_knot).lower()}",
        f"IS_DISK {str(sd.is_disk).lower()}",
        f"SLICE_GENUS {'unknown' if sd.slice_genus is None else sd.slice_genus}",
        f"SELF_LINKING {self_linking(expand(q))}",
    ])
    return EXIT_OK


def cmd_braid_closure(args) -> int:
    text = _read(args.file, args)
    if any(";" in ln for ln in text.splitlines()):
        word = expand(parse_qp(text))
    else:
        word = parse_braid(text)
    sys.stdout.write(format_pd(braid_closure_pd(word)))
    return EXIT_OK


def cmd_poly(args) -> int:
    pd = _pd(args.file, args)
    if args.which == "jones":
        _emit(jones(pd, args.crossing_cap, args.threads).lines())
    elif args.which == "kauffman":
        _emit(kauffman_poly(pd, args.crossing_cap, args.threads).lines())
    else:
        print(f"tb_bound {tb_upper_bound(pd, args.crossing_cap, args.threads)}")
    return EXIT_OK


def cmd_obstruct_filling(args) -> int:
    v = check_filling(FillingClaim(args.tb, args.rot, args.genus, args.gs, args.tbmax))
    sys.stdout.write(format_verdict(v))
    return _verdict_exit(v.status)


def cmd_obstruct_collar(args) -> int:
    try:
        sc = CollarScenario(args.genus, args.concave_genus, args.tb_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    v = collar_obstruction(sc)
    sys.stdout.write(format_verdict(v))
    return _verdict_exit(v.status)


def cmd_obstruct_qp(args) -> int:
    q = parse_qp(_read(args.file, args))
    v = certify_disk_slice(q, args.crossing_cap)
    sys.stdout.write(format_verdict(v))
    return _verdict_exit(v.status)


def cmd_genfam_slice(args) -> int:
    from .render import RenderSpec, render_slice_svg
    try:
        profile = CutoffProfile(args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sl = front_slice(args.s, profile)
    _emit([
        f"S {args.s}",
        f"RHO {sl.rho:.12g}",
        f"POINTS {len(sl.points)}",
        f"EMPTY {str(sl.empty).lower()}",
        f"BIRTH_MOMENT {str(sl.birth_moment).lower()}",
        f"CUSPS {' '.join(f'{t:.12g}' for t in sl.cusp_ts)}".rstrip(),
    ])
    if args.csv:
        Path(args.csv).write_text(slice_csv(sl))
    if args.plot:
        Path(args.plot).write_text(render_slice_svg(sl, RenderSpec("svg")))
    return EXIT_OK


def cmd_genfam_symp(args) -> int:
    samples = random_samples(args.samples, args.seed)
    res = symplecto_check(samples, args.h, args.variant)
    half = symplecto_check(samples, args.h / 2, args.variant)
    ratio = res.deviation / half.deviation if half.deviation else float("inf")
    _emit([
        f"VARIANT {args.variant}",
        f"DEVIATION {res.deviation:.6e}",
        f"ORDERING {' '.join(map(str, res.ordering))}",
        f"HALF_STEP_DEVIATION {half.deviation:.6e}",
        f"RATIO {ratio:.4f}",
    ])
    return EXIT_OK if res.deviation < args.tol else EXIT_FAIL


def cmd_render(args) -> int:
    from .render import RenderSpec, render_front
    d = _front(args.front, args)
    ascii_text = render_front(d, RenderSpec("ascii", show_orientations=args.orient))
    sys.stdout.write(ascii_text)
    if args.out:
        spec = RenderSpec("svg", args.width, args.height, args.orient)
        Path(args.out).write_text(render_front(d, spec))
        print(f"# SVG {args.out}")
    return EXIT_OK


# --- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legcob", description="Legendrian fronts, cobordism moves "
                                "and non-collarability certificates.")
    p.add_argument("--version", action="version", version=f"legcob {__version__}")
    p.add_argument("--crossing-cap", type=int, default=16,
                   help="largest diagram the polynomial engines accept (default 16)")
    p.add_argument("--threads", type=int, default=1, help="worker threads for polynomial engines")
    p.add_argument("--fixtures", default=None, help="directory searched for input files")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tb", help="classical invariants of a front: tb = writhe - cusps/2")
    t.add_argument("front", help="front word such as 'L1 R1', or a file")
    t.add_argument("--all", action="store_true", help="also print rot, writhe, cusps, components")
    t.set_defaults(func=cmd_tb)

    m = sub.add_parser("moves", help="elementary moves on fronts").add_subparsers(
        dest="sub", required=True)
    ml = m.add_parser("list", help="all sites where a move applies")
    ml.add_argument("front")
    ml.add_argument("--allow-caps", action="store_true")
    ml.set_defaults(func=cmd_moves_list)
    ma = m.add_parser("apply", help="apply one move and print the new front")
    ma.add_argument("front")
    ma.add_argument("kind", help="R1a R1b R2a R2b R1a- R1b- R2a- R2b- R3 SaddleUp Birth "
                    "FarCommute Death")
    ma.add_argument("index", type=int)
    ma.add_argument("variant", type=int, nargs="?", default=0)
    ma.add_argument("--allow-caps", action="store_true")
    ma.set_defaults(func=cmd_moves_apply)

    c = sub.add_parser("cobordism", help="move scripts read bottom to top").add_subparsers(
        dest="sub", required=True)
    cv = c.add_parser("verify", help="replay a script and check tb_top - tb_bottom = -chi")
    cv.add_argument("script")
    cv.add_argument("--allow-caps", action="store_true", help="admit Death moves, no tb check")
    cv.add_argument("--allow-incoherent", action="store_true",
                    help="admit saddles with clashing orientations, no tb check")
    cv.set_defaults(func=cmd_cob_verify)
    cs = c.add_parser("search", help="breadth-first search for a move script ('-' is empty)")
    cs.add_argument("start")
    cs.add_argument("target")
    cs.add_argument("--max-depth", type=int, default=4)
    cs.add_argument("--max-states", type=int, default=20000)
    cs.add_argument("--max-events", type=int, default=16)
    cs.add_argument("--allow-caps", action="store_true")
    cs.set_defaults(func=cmd_cob_search)

    b = sub.add_parser("braid", help="quasi-positive braids").add_subparsers(dest="sub", required=True)
    be = b.add_parser("expand", help="expand a QP factorization into a signed word")
    be.add_argument("file")
    be.set_defaults(func=cmd_braid_expand)
    bs = b.add_parser("surface", help="Euler characteristic n - k and closure data")
    bs.add_argument("file")
    bs.set_defaults(func=cmd_braid_surface)
    bc = b.add_parser("closure-pd", help="PD code of the braid closure")
    bc.add_argument("file")
    bc.set_defaults(func=cmd_braid_closure)

    po = sub.add_parser("poly", help="skein polynomials of a PD file").add_subparsers(
        dest="sub", required=True)
    for name, text in (("jones", "Jones polynomial in A, t = A^-4 (exp:coeff lines)"),
                       ("kauffman", "writhe-normalized Dubrovnik polynomial (a z coeff lines)"),
                       ("tb-bound", "upper bound -deg_a F - 1 on the Thurston-Bennequin number")):
        pp = po.add_parser(name, help=text)
        pp.add_argument("file")
        pp.set_defaults(func=cmd_poly, which=name)

    o = sub.add_parser("obstruct", help="filling checks and collar certificates").add_subparsers(
        dest="sub", required=True)
    of = o.add_parser("filling", help="check rot = 0, tb = 2g - 1, g = g_s, tb = TB")
    of.add_argument("--tb", type=int, required=True)
    of.add_argument("--rot", type=int, required=True)
    of.add_argument("--genus", type=int, required=True)
    of.add_argument("--gs", type=int, default=None)
    of.add_argument("--tbmax", type=int, default=None)
    of.set_defaults(func=cmd_obstruct_filling)
    oc = o.add_parser("collar", help="obstruct a collar from genus or tb data")
    oc.add_argument("--genus", type=int, required=True, help="filling genus if collared")
    oc.add_argument("--concave-genus", type=int, default=None)
    oc.add_argument("--tb-bound", type=int, default=None)
    oc.set_defaults(func=cmd_obstruct_collar)
    oq = o.add_parser("qp-disk", help="certificate for the disk of a quasi-positive braid")
    oq.add_argument("file")
    oq.set_defaults(func=cmd_obstruct_qp)

    g = sub.add_parser("genfam", help="generating family of the capping disk").add_subparsers(
        dest="sub", required=True)
    gs = g.add_parser("slice", help="front of the slice at s (CSV columns t,z,branch)")
    gs.add_argument("--s", type=float, required=True)
    gs.add_argument("--delta", type=float, default=0.1)
    gs.add_argument("--csv", default=None)
    gs.add_argument("--plot", default=None, help="write an SVG plot of the slice")
    gs.set_defaults(func=cmd_genfam_slice)
    gy = g.add_parser("sympcheck", help="finite-difference check of the coordinate map")
    gy.add_argument("--samples", type=int, default=100)
    gy.add_argument("--h", type=float, default=1e-5)
    gy.add_argument("--seed", type=int, default=0)
    gy.add_argument("--tol", type=float, default=1e-6)
    gy.add_argument("--variant", choices=("original", "corrected"), default="original",
                    help="original: (q2, q1 p2, ln q1, p1); corrected: (q2, p2/q1, p1, ln q1)")
    gy.set_defaults(func=cmd_genfam_symp)

    r = sub.add_parser("render", help="draw a front: ASCII to stdout, SVG to --out")
    r.add_argument("front")
    r.add_argument("--out", default=None)
    r.add_argument("--width", type=int, default=640)
    r.add_argument("--height", type=int, default=320)
    r.add_argument("--orient", action="store_true", help="mark strand orientations")
    r.set_defaults(func=cmd_render)
    return p


INPUT_ERRORS = (UsageError, FrontSyntaxError, ValidationError, InvalidSite, PreconditionError,
                CrossingCapExceeded, DomainError, DegenerateSample, OSError)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except StepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NonterminationGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
