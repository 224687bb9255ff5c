"""Two-stage reduction of the compiled pairing system.

Stage one rewrites the system on [1, 24u + 24v] down to the three
pairings {f, g, h} on [1, 2u + 2v], by transmitting every pairing off
each edge block through that block's carrier pairing and truncating the
block away.  Stage two runs the subtractive-Euclid orbit count on
{f, g, h}; the pair of widths (|f|, |g|) walks the gcd recurrence, so the
orbit count is gcd(u, v).
"""

from dataclasses import dataclass
from math import gcd

from .compiler import (CARRIER_SIGNATURES, PointIndexing, canonical_arc_tag,
                       compile_surface, locate_carriers)
from .intervals import (Pairing, PairingSystem, PairingError, count_orbits,
                        push_range, reflect, split, transmit, trim,
                        truncate_left, truncate_right)
from .normal_surface import SurfaceCoefficients, coordinates


class ConventionMismatchError(PairingError):
    """The reduced system does not contain the expected pairing signatures."""

    def __init__(self, message, pairings):
        super().__init__(message)
        self.pairings = pairings


@dataclass(frozen=True)
class TraceStep:
    index: int
    f_width: int
    g_width: int
    h_width: int
    move: str
    batch: int = 1

    def format(self):
        move = "batch(%d)" % self.batch if self.batch != 1 else self.move
        return "step %d |f|=%d |g|=%d |h|=%d move=%s" % (
            self.index, self.f_width, self.g_width, self.h_width, move)


def build_fgh(coeff):
    """The target system of stage one: f, g, h reversing on [1, 2u + 2v]."""
    u, v = coeff.u, coeff.v
    pairings = []
    if u > 0:
        pairings.append(Pairing(1, u, u + 1, 2 * u, reversing=True, tag="f"))
    if v > 0:
        pairings.append(Pairing(2 * u + 1, 2 * u + v, 2 * u + v + 1, 2 * u + 2 * v,
                                reversing=True, tag="g"))
    pairings.append(Pairing(1, u + v, u + v + 1, 2 * (u + v), reversing=True, tag="h"))
    return PairingSystem(1, 2 * (u + v), tuple(pairings))


class _Script:
    """Bookkeeping for a move sequence with optional orbit-count checking."""

    def __init__(self, sys, check_orbits=False):
        self.sys = sys
        self.check = check_orbits
        self.moves = []
        self.orbits = count_orbits(sys) if check_orbits else None

    def step(self, new_sys, desc, preserves=True):
        if self.check and preserves:
            after = count_orbits(new_sys)
            if after != self.orbits:
                raise AssertionError(
                    "move %r changed orbit count %d -> %d" % (desc, self.orbits, after))
        elif self.check:
            self.orbits = count_orbits(new_sys)
        self.sys = new_sys
        self.moves.append(desc)


def _eliminate_block(script, carriers, lo, hi):
    """Transmit everything off the rightmost block [lo, hi], then truncate it.

    ``carriers`` are the pairings whose ranges partition the block and whose
    domains lie to its left.  Movers are processed in descending range
    position; a mover whose range straddles two carrier ranges is split
    first, and a mover whose domain partially overlaps the acting carrier's
    range has only its range composed away (its domain is handled on a
    later pass, once canonical storage turns it into the range).
    """
    carrier_tags = {c.tag for c in carriers}
    while True:
        sys = script.sys
        cs = sorted((sys.by_tag(t) for t in carrier_tags), key=lambda c: -c.ran_lo)
        movers = [p for p in sys.pairings
                  if p.tag not in carrier_tags and p.ran_hi >= lo]
        if not movers:
            break
        m = max(movers, key=lambda p: (p.ran_lo, p.tag))
        if m.ran_lo < lo:
            raise PairingError("range of %r straddles the block boundary %d" % (m, lo))
        c = next((c for c in cs if c.ran_lo <= m.ran_lo and m.ran_hi <= c.ran_hi), None)
        if c is None:
            boundary = next(c.ran_hi for c in cs if c.ran_hi < m.ran_hi
                            and c.ran_hi >= m.ran_lo)
            script.step(split(sys, m.tag, boundary),
                        "split %s at %d" % (m.tag, boundary))
            continue
        dom_inside = c.ran_lo <= m.dom_lo and m.dom_hi <= c.ran_hi
        dom_touches = m.dom_hi >= c.ran_lo and m.dom_lo <= c.ran_hi
        if dom_touches and not dom_inside:
            script.step(sys.replace_pairing(m, push_range(c, m)),
                        "compose %s into %s" % (m.tag, c.tag))
        else:
            script.step(transmit(sys, m.tag, c.tag),
                        "transmit %s by %s" % (m.tag, c.tag))
    # peel the carriers off, rightmost range first
    while script.sys.hi >= lo:
        sys = script.sys
        g = max((p for p in sys.pairings if p.tag in carrier_tags),
                key=lambda p: p.ran_hi)
        if g.ran_hi != sys.hi:
            raise PairingError("carrier %s does not reach the block end" % g.tag)
        script.step(truncate_right(sys, g.ran_lo - 1), "truncate %s" % g.tag)


# order in which the edge blocks are peeled off (right to left), with the
# carrier(s) used for each
ELIMINATION_PLAN = (
    (7, ("t7",)), (5, ("t5",)), (4, ("t4",)), (3, ("t3",)), (2, ("t2",)),
    (0, ("t0",)), (9, ("t9",)), (6, ("t6",)), (8, ("t8b", "t8a")),
)


def _signature_triple(u, v):
    """Expected (f1, g1, h1) on [1, 4u + 4v] after the eliminations."""
    f1 = Pairing(1, u + 3 * v, u + v + 1, 2 * u + 4 * v, reversing=True, tag="f1")
    g1 = Pairing(2 * v + 1, 3 * (u + v), u + 3 * v + 1, 4 * (u + v),
                 reversing=True, tag="g1")
    h1 = Pairing(u + 3 * v + 1, 2 * u + 4 * v, 3 * (u + v) + 1, 4 * (u + v),
                 reversing=False, tag="h1")
    return f1, g1, h1


def _find_matching(sys, sig):
    for p in sys.pairings:
        if p.same_map(sig):
            return p
    return None


def claim1_reduce(sys, coeff, tri, check_orbits=False):
    """Reduce a compiled system to build_fgh(coeff); returns (system, moves).

    Follows the fixed script: eliminate the edge blocks right to left
    through their carriers, keep the three special composite pairings on
    [1, 4u + 4v], trim two of them, fold the third through one of the
    trimmed ones, truncate both flanks and translate.  With
    ``check_orbits`` every move is verified to preserve the union-find
    orbit count.
    """
    u, v = coeff.u, coeff.v
    if u < 1 or v < 1:
        raise PairingError(
            "the reduction script needs u >= 1 and v >= 1; the composite "
            "pairings it selects degenerate on the axes (use the width "
            "recurrence or the gluing oracle there)")
    indexing = PointIndexing(coordinates(coeff), tri)
    locate_carriers(sys, tri, u, v)   # width sanity before we start
    script = _Script(sys, check_orbits=check_orbits)
    name_to_tag = {name: canonical_arc_tag(tri, *sig)
                   for name, sig in CARRIER_SIGNATURES.items()}
    for cls, names in ELIMINATION_PLAN:
        lo, hi = indexing.block(cls)
        if lo > hi:
            continue
        if hi != script.sys.hi:
            raise PairingError("block e%d is not rightmost" % cls)
        tags = []
        for name in names:
            tag = name_to_tag[name]
            try:
                script.sys.by_tag(tag)
            except KeyError:
                raise PairingError("carrier %s missing for block e%d" % (name, cls))
            tags.append(tag)
        carriers = [script.sys.by_tag(t) for t in tags]
        _eliminate_block(script, carriers, lo, hi)
    if script.sys.hi != 4 * (u + v):
        raise PairingError("eliminations left carrier [%d, %d], expected [1, %d]"
                           % (script.sys.lo, script.sys.hi, 4 * (u + v)))

    sigs = _signature_triple(u, v)
    matched = [_find_matching(script.sys, s) for s in sigs]
    if not all(matched):
        script.step(reflect(script.sys), "reflect")
        matched = [_find_matching(script.sys, s) for s in sigs]
    if not all(matched):
        raise ConventionMismatchError(
            "expected pairings %r not present on [1, %d]" % (sigs, 4 * (u + v)),
            script.sys.pairings)
    f1, g1, h1 = matched
    extras = len(script.sys.pairings) - 3

    def retag(p, tag):
        return Pairing(p.dom_lo, p.dom_hi, p.ran_lo, p.ran_hi,
                       reversing=p.reversing, tag=tag)

    f2 = retag(trim(f1) if f1.overlapping() else f1, "f1")
    script.step(script.sys.replace_pairing(f1, f2), "trim f1")
    g2 = retag(trim(g1) if g1.overlapping() else g1, "g1")
    script.step(script.sys.replace_pairing(g1, g2), "trim g1")
    h2 = push_range(g2, h1, tag="h1")
    script.step(script.sys.replace_pairing(h1, h2), "compose h1 with g1")
    # discard everything but {f2, g2, h2}; drops extra relations, which can
    # only leave the orbit count an upper bound -- exactness comes from the
    # disjoint-copies lower bound
    kept = tuple(script.sys.by_tag(t) for t in ("f1", "g1", "h1"))
    script.step(PairingSystem(script.sys.lo, script.sys.hi, kept),
                "discard %d extra pairings" % extras, preserves=False)
    if 2 * u + 4 * v < script.sys.hi:
        script.step(truncate_right(script.sys, 2 * u + 4 * v), "truncate g1")
    if 2 * v + 1 > script.sys.lo:
        script.step(truncate_left(script.sys, 2 * v + 1), "truncate f1, translate")
    final = script.sys
    target = build_fgh(coeff)
    ours = sorted((p.dom_lo, p.dom_hi, p.ran_lo, p.ran_hi, p.reversing)
                  for p in final.pairings)
    want = sorted((p.dom_lo, p.dom_hi, p.ran_lo, p.ran_hi, p.reversing)
                  for p in target.pairings)
    if (final.lo, final.hi) != (target.lo, target.hi) or ours != want:
        raise ConventionMismatchError(
            "reduced system %r differs from the expected f, g, h" % (final,),
            final.pairings)
    return target, script.moves


def _roles(sys):
    """Identify (f, g, h) in a reduced system by position and span."""
    ps = sorted(sys.pairings, key=lambda p: (p.dom_lo, -p.width))
    h = next((p for p in ps if p.dom_lo == sys.lo and p.ran_hi == sys.hi
              and 2 * p.width == sys.width and p.reversing), None)
    if h is None:
        raise PairingError("no full-span reversing pairing in %r" % (sys,))
    rest = [p for p in ps if p is not h]
    if len(rest) == 0:
        return None, None, h
    if len(rest) == 1:
        p = rest[0]
        return (p, None, h) if p.dom_lo == sys.lo else (None, p, h)
    if len(rest) != 2:
        raise PairingError("expected at most 3 pairings, got %d" % len(sys.pairings))
    left, right = rest
    return left, right, h


def _check_state(sys, f, g, h):
    fw = f.width if f else 0
    gw = g.width if g else 0
    if h.width != fw + gw:
        raise AssertionError("|h| = %d but |f| + |g| = %d" % (h.width, fw + gw))
    if f and (f.dom_lo != sys.lo or f.ran_hi != sys.lo + 2 * fw - 1):
        raise AssertionError("f does not occupy the leftmost 2|f| points")
    if g and g.ran_hi != sys.hi:
        raise AssertionError("g does not occupy the rightmost 2|g| points")


def _claim2_widths(u, v):
    """Accelerated width-only run; batches runs of identical subtractions.

    One batched entry stands for ``batch`` consecutive applications of the
    width recurrence (|f|, |g|) -> (max(|g|, |f| - |g|), min(|g|, |f| - |g|)).
    """
    trace = []
    f, g = max(u, v), min(u, v)
    if u < v:
        trace.append(TraceStep(len(trace), f, g, f + g, "reflect"))
    while g > 0 and f != g:
        q, r = divmod(f, g)
        k = q - 1 if r == 0 else q
        trace.append(TraceStep(len(trace), f, g, f + g,
                               "batch" if k > 1 else "transmit+truncate+assign",
                               batch=k))
        f, g = (g, g) if r == 0 else (max(g, r), min(g, r))
    trace.append(TraceStep(len(trace), f, g, f + g, "final"))
    return f, trace


def claim2_run(arg, accelerated=False, check_orbits=False):
    """Orbit count of an (f, g, h) system, with the width trace.

    ``arg`` is either a (u, v) pair of widths or a PairingSystem holding
    the three pairings.  The unaccelerated mode performs the actual moves
    on the system (transmit g by h, truncate h, reassign, reflecting when
    the wider pairing sits on the right); the accelerated mode iterates
    the width recurrence only, batching identical subtraction steps.
    """
    if isinstance(arg, PairingSystem):
        sys = arg
        if accelerated:
            f, g, _h = _roles(sys)
            return _claim2_widths(f.width if f else 0, g.width if g else 0)
    else:
        u, v = arg
        if u < 0 or v < 0 or (u, v) == (0, 0):
            raise ValueError("widths must be nonnegative and not both zero")
        if accelerated:
            return _claim2_widths(u, v)
        sys = build_fgh(SurfaceCoefficients(u, v))

    trace = []
    idx = 0
    orbits = count_orbits(sys) if check_orbits else None

    def checked(new_sys, desc):
        nonlocal sys
        if check_orbits:
            after = count_orbits(new_sys)
            if after != orbits:
                raise AssertionError("move %r changed orbit count" % desc)
        sys = new_sys

    while True:
        f, g, h = _roles(sys)
        _check_state(sys, f, g, h)
        fw, gw = (f.width if f else 0), (g.width if g else 0)
        if g is None or f is None:
            trace.append(TraceStep(idx, fw or gw, 0, h.width, "final"))
            return h.width, trace
        if fw == gw:
            trace.append(TraceStep(idx, fw, gw, h.width, "final"))
            return fw, trace
        if fw < gw:
            checked(reflect(sys), "reflect")
            trace.append(TraceStep(idx, gw, fw, h.width, "reflect"))
            continue
        trace.append(TraceStep(idx, fw, gw, h.width, "transmit+truncate+assign"))
        idx += 1
        checked(transmit(sys, g.tag, h.tag), "transmit g by h")
        checked(truncate_right(sys, sys.hi - 2 * gw), "truncate h")
        # roles for the next round: h <- f, f/g <- wider/narrower survivor;
        # position alone determines them, so nothing to rewrite


def components_via_reduction(coeff):
    """Component count of uF + vG through the width recurrence.

    The stage-one reduction makes gcd(u, v) an upper bound; it is exact
    because uF + vG contains gcd(u, v) disjoint copies of the primitive
    surface (u/d)F + (v/d)G with d = gcd(u, v).
    """
    count, _ = _claim2_widths(coeff.u, coeff.v)
    return count


def reduce_compiled(coeff, tri, check_orbits=False):
    """Compile uF + vG and run both reduction stages; returns (count, moves, trace)."""
    sys = compile_surface(coordinates(coeff), tri)
    fgh, moves = claim1_reduce(sys, coeff, tri, check_orbits=check_orbits)
    count, trace = claim2_run(fgh, check_orbits=check_orbits)
    assert count == gcd(coeff.u, coeff.v)
    return count, moves, trace
