"""Skein polynomials of planar diagrams.

The Kauffman bracket is evaluated as a state sum swept crossing by
crossing, keeping only the pairing of open edges as the state.  The
two-variable Kauffman polynomial is computed in Dubrovnik form by the
switch-and-smooth reduction towards descending diagrams.

Conventions: ``t = A**-4`` for the Jones polynomial.  The Dubrovnik
polynomial D is a regular-isotopy invariant with D(unknot) = 1, a positive
curl multiplying by ``a``, and D(L+) - D(L-) = z (D(L0) - D(Linf)) where
L0 is the oriented smoothing.  The ambient invariant is F = a**(-writhe) D.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .errors import CrossingCapExceeded, NonterminationGuard
from .laurent import LaurentPoly1, LaurentPoly2
from .planar import PlanarDiagram, mirror, occurrences, relabel_canonical, strand_cycles

DEFAULT_CROSSING_CAP = 16

A = LaurentPoly1.monomial(1)
BRACKET_LOOP = LaurentPoly1({2: -1, -2: -1})  # -A^2 - A^-2

# 1 + (a - a^-1) z^-1
DUBROVNIK_LOOP = LaurentPoly2({(0, 0): 1, (1, -1): 1, (-1, -1): -1})


def _check_cap(pd: PlanarDiagram, cap: int | None):
    cap = DEFAULT_CROSSING_CAP if cap is None else cap
    if len(pd.crossings) > cap:
        raise CrossingCapExceeded(
            f"diagram has {len(pd.crossings)} crossings; cap is {cap}")


def _sweep_order(crossings) -> list[int]:
    """Greedy order keeping the set of half-processed edges small."""
    n = len(crossings)
    if n == 0:
        return []
    order = [0]
    done = {0}
    open_edges: dict[int, int] = {}
    for e in crossings[0]:
        open_edges[e] = open_edges.get(e, 0) + 1
    while len(order) < n:
        best, best_score = None, None
        for x in range(n):
            if x in done:
                continue
            score = sum(1 for e in crossings[x] if open_edges.get(e, 0) == 1)
            if best_score is None or score > best_score:
                best, best_score = x, score
        order.append(best)
        done.add(best)
        for e in crossings[best]:
            open_edges[e] = open_edges.get(e, 0) + 1
    return order


def _join(pairs: dict[int, int], u: int, v: int) -> int:
    """Connect edge ends ``u`` and ``v``; returns the number of closed loops."""
    u_open, v_open = u in pairs, v in pairs
    if u_open and v_open:
        if pairs[u] == v:
            del pairs[u], pairs[v]
            return 1
        pu, pv = pairs.pop(u), pairs.pop(v)
        pairs[pu], pairs[pv] = pv, pu
        return 0
    if u_open:
        pu = pairs.pop(u)
        pairs[pu], pairs[v] = v, pu
        return 0
    if v_open:
        pv = pairs.pop(v)
        pairs[pv], pairs[u] = u, pv
        return 0
    if u == v:
        return 1
    pairs[u], pairs[v] = v, u
    return 0


def _add_into(acc: dict, key, poly: dict[int, int], shift: int, loops: int, loop_pows):
    target = acc.setdefault(key, {})
    lp = loop_pows[loops]
    for e, c in poly.items():
        for e2, c2 in lp.items():
            k = e + e2 + shift
            v = target.get(k, 0) + c * c2
            if v:
                target[k] = v
            else:
                target.pop(k, None)


def _sweep(states, crossings, order, loop_pows):
    for x in order:
        a, b, c, d = crossings[x]
        nxt: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            for shift, (p, q) in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                pairs = key_to_pairs(key)
                loops = _join(pairs, *p) + _join(pairs, *q)
                _add_into(nxt, pairs_to_key(pairs), poly, shift, loops, loop_pows)
        states = {k: v for k, v in nxt.items() if v}
    return states


def kauffman_bracket(pd: PlanarDiagram, crossing_cap: int | None = None,
                     order: list[int] | None = None, threads: int = 1) -> LaurentPoly1:
    """Unnormalized bracket: empty diagram 1, each circle ``-A^2 - A^-2``.

    ``order`` fixes the sweep order of the crossings; the result does not
    depend on it.  With ``threads > 1`` the states are split into chunks
    swept independently and summed in a fixed order.
    """
    _check_cap(pd, crossing_cap)
    crossings = pd.crossings
    if order is None:
        order = _sweep_order(crossings)
    loop_pows = [{0: 1}, BRACKET_LOOP.terms, (BRACKET_LOOP ** 2).terms]
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    if threads <= 1:
        states = _sweep(states, crossings, order, loop_pows)
        total = LaurentPoly1(states.get((), {}))
    else:
        k = 0
        while k < len(order) and len(states) < threads:
            states = _sweep(states, crossings, order[k:k + 1], loop_pows)
            k += 1
        keys = sorted(states)
        chunks = [{key: states[key] for key in keys[i::threads]} for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ch: _sweep(ch, crossings, order[k:], loop_pows), chunks))
        total = LaurentPoly1()
        for part in parts:
            total = total + LaurentPoly1(part.get((), {}))
    return total * BRACKET_LOOP ** pd.free_loops


def key_to_pairs(key) -> dict[int, int]:
    out = {}
    for u, v in key:
        out[u], out[v] = v, u
    return out


def pairs_to_key(pairs: dict[int, int]) -> tuple:
    return tuple(sorted((u, v) for u, v in pairs.items() if u < v))


def jones(pd: PlanarDiagram, crossing_cap: int | None = None, threads: int = 1) -> LaurentPoly1:
    """Jones polynomial in the variable A (``t = A^-4``), unknot normalized to 1.

    Orientation comes from ``pd.signs`` (or is inferred from the labels).
    """
    if not pd.crossings and pd.free_loops == 0:
        raise ValueError("the Jones polynomial of the empty link is undefined")
    bracket = kauffman_bracket(pd, crossing_cap, threads=threads)
    w = pd.writhe()
    factor = LaurentPoly1.monomial(-3 * w, -1 if w % 2 else 1)
    return (factor * bracket).exact_div(BRACKET_LOOP)


def jones_in_t(poly: LaurentPoly1) -> dict:
    """Rewrite a Jones polynomial in A as ``{t_exponent: coeff}``.

    Exponents are Fractions when the link has an even number of components.
    """
    from fractions import Fraction
    return {Fraction(-e, 4) if e % 4 else -e // 4: c for e, c in poly.items()}


def jones_from_t(terms: dict) -> LaurentPoly1:
    return LaurentPoly1({int(-4 * e): c for e, c in terms.items()})


# --- Dubrovnik / Kauffman polynomial -------------------------------------

def _remove_kink(crossings):
    """Find one curl; returns (new_crossings, writhe_of_curl, loops) or None."""
    for x, c in enumerate(crossings):
        for i in range(4):
            if c[i] == c[(i + 1) % 4]:
                f, g = c[(i + 2) % 4], c[(i + 3) % 4]
                # walk: enter at i+2, leave at i, come back in at i+1
                entries = ((i + 2) % 4, (i + 1) % 4)
                under = entries[0] if entries[0] % 2 == 0 else entries[1]
                over = entries[1] if under == entries[0] else entries[0]
                sign = 1 if over == (under + 3) % 4 else -1
                rest = crossings[:x] + crossings[x + 1:]
                if f == g:
                    # the whole component was this figure-eight curl
                    return rest, sign, 1
                rest = tuple(tuple(f if e == g else e for e in cc) for cc in rest)
                return rest, sign, 0
    return None


def _smooth(crossings, x, pairs):
    labels = list(crossings[x])
    rest = [list(c) for i, c in enumerate(crossings) if i != x]
    loops = 0
    for i, j in pairs:
        u, v = labels[i], labels[j]
        if u == v:
            loops += 1
            continue
        for c in rest:
            for k in range(4):
                if c[k] == v:
                    c[k] = u
        labels = [u if e == v else e for e in labels]
    return tuple(tuple(c) for c in rest), loops


def _walk_profile(crossings):
    """First-visit data along the canonical walk.

    Returns (bad, sign_and_entries, n_components): ``bad`` lists crossings
    first met from below, in walk order; ``sign_and_entries[x]`` is
    (sign, under_entry, over_entry) with respect to the walk orientation.
    """
    occ = occurrences(crossings)
    cycles = strand_cycles(crossings, occ)
    first: dict[int, int] = {}
    under_entry: dict[int, int] = {}
    over_entry: dict[int, int] = {}
    bad = []
    for cyc in cycles:
        for x, k in cyc:
            if k % 2 == 0:
                under_entry[x] = k
            else:
                over_entry[x] = k
            if x not in first:
                first[x] = k
                if k % 2 == 0:
                    bad.append(x)
    info = {}
    for x in range(len(crossings)):
        u, o = under_entry[x], over_entry[x]
        info[x] = (1 if o == (u + 3) % 4 else -1, u, o)
    return bad, info, len(cycles)


class _DubrovnikEngine:
    def __init__(self, threads: int = 1):
        self.threads = threads
        self.memo: dict[tuple, LaurentPoly2] = {}
        self.loop_pows = [LaurentPoly2.const(1)]

    def loop_pow(self, k: int) -> LaurentPoly2:
        while len(self.loop_pows) <= k:
            self.loop_pows.append(self.loop_pows[-1] * DUBROVNIK_LOOP)
        return self.loop_pows[k]

    def value(self, crossings, loops: int, bound=None) -> LaurentPoly2:
        """D of the diagram ``crossings`` plus ``loops`` free circles (>= 1 component)."""
        framing = 0
        while True:
            r = _remove_kink(crossings)
            if r is None:
                break
            crossings, s, extra = r
            framing += s
            loops += extra
        mono = LaurentPoly2.monomial(framing, 0)
        if not crossings:
            return mono * self.loop_pow(loops - 1)
        key = relabel_canonical(crossings)
        core = self.memo.get(key)
        if core is None:
            core = self._core(crossings, bound)
            self.memo[key] = core
        return mono * core * self.loop_pow(loops)

    def _core(self, crossings, bound) -> LaurentPoly2:
        bad, info, ncomp = _walk_profile(crossings)
        measure = (len(crossings), len(bad))
        if bound is not None and not measure < bound:
            raise NonterminationGuard(f"reduction measure {measure} did not drop below {bound}")
        if not bad:
            w = sum(s for s, _, _ in info.values())
            return LaurentPoly2.monomial(w, 0) * self.loop_pow(ncomp - 1)
        x = bad[0]
        s, u, o = info[x]
        c = crossings[x]
        switched = crossings[:x] + ((c[1], c[2], c[3], c[0]),) + crossings[x + 1:]
        oriented, l0 = _smooth(crossings, x, ((u, (o + 2) % 4), (o, (u + 2) % 4)))
        other, l1 = _smooth(crossings, x, ((u, o), ((u + 2) % 4, (o + 2) % 4)))
        if self.threads > 1:
            # fan the three subproblems out once, each with its own memo
            n, self.threads = self.threads, 1
            with ThreadPoolExecutor(max_workers=min(n, 3)) as pool:
                f_sub = pool.submit(lambda: _DubrovnikEngine()._switch_value(switched, measure))
                f0 = pool.submit(lambda: _DubrovnikEngine().value(oriented, l0, measure))
                finf = pool.submit(lambda: _DubrovnikEngine().value(other, l1, measure))
                sub, d0, dinf = f_sub.result(), f0.result(), finf.result()
        else:
            sub = self._switch_value(switched, measure)
            d0 = self.value(oriented, l0, measure)
            dinf = self.value(other, l1, measure)
        zterm = LaurentPoly2.monomial(0, 1, s)
        return sub + zterm * (d0 - dinf)

    def _switch_value(self, crossings, bound) -> LaurentPoly2:
        # same labels, same walk: exactly one fewer bad crossing
        key = relabel_canonical(crossings)
        core = self.memo.get(key)
        if core is None:
            core = self._core(crossings, bound)
            self.memo[key] = core
        return core


def dubrovnik(pd: PlanarDiagram, crossing_cap: int | None = None, threads: int = 1) -> LaurentPoly2:
    """Regular-isotopy Dubrovnik polynomial D of the diagram."""
    _check_cap(pd, crossing_cap)
    if not pd.crossings and pd.free_loops == 0:
        raise ValueError("the Kauffman polynomial of the empty link is undefined")
    return _DubrovnikEngine(threads).value(pd.crossings, pd.free_loops)


def kauffman_poly(pd: PlanarDiagram, crossing_cap: int | None = None,
                  threads: int = 1) -> LaurentPoly2:
    """Writhe-normalized Dubrovnik polynomial ``F = a^(-writhe) D``."""
    d = dubrovnik(pd, crossing_cap, threads)
    return LaurentPoly2.monomial(-pd.writhe(), 0) * d


def dubrovnik_to_kauffman(f: LaurentPoly2, n_components: int) -> LaurentPoly2:
    """Convert to the L+ + L- = z(L0 + Linf) normalization used by knot tables.

    Uses F_K(a, z) = (-1)^(c-1) F_D(i a, -i z); every term of a Dubrovnik
    polynomial has a + z + c - 1 even, so the result is again integral.
    """
    out = {}
    for (p, q), c in f.items():
        # i^p (-i)^q = i^(p+q) (-1)^q
        k = (p + q) % 4
        if k % 2:
            raise ValueError("term parity incompatible with the Dubrovnik form")
        sign = (1 if k == 0 else -1) * (-1) ** q * (-1) ** (n_components - 1)
        out[(p, q)] = sign * c
    return LaurentPoly2(out)


def tb_upper_bound(pd: PlanarDiagram, crossing_cap: int | None = None, threads: int = 1) -> int:
    """Kauffman-polynomial bound on the Thurston-Bennequin number: -deg_a F - 1."""
    return -kauffman_poly(pd, crossing_cap, threads).deg_a() - 1


def mirror_kauffman(f: LaurentPoly2) -> LaurentPoly2:
    """F of the mirror image: F(a^-1, -z) in the Dubrovnik normalization.

    Switching every crossing exchanges L+ and L- in the skein relation, so
    ``z`` changes sign along with the inversion of ``a``.  After
    :func:`dubrovnik_to_kauffman` the mirror is inversion of ``a`` alone.
    """
    return f.invert_a().negate_z()
