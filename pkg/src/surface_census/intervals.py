"""Integer-interval pairing systems and the elementary moves on them.

A pairing is a bijection between two subintervals of a carrier interval
[lo, hi], either orientation preserving (a translation) or orientation
reversing (a reflection).  A collection of pairings generates a
pseudogroup on the carrier; the moves implemented here (trimming,
truncation, transmission, splitting, reflection, translation) all leave
the number of orbits unchanged, which is what makes them useful for
component counting.
"""

from dataclasses import dataclass, field, replace

from .unionfind import UnionFind

DEFAULT_ORBIT_CAP = 10 ** 7


class PairingError(ValueError):
    """A move was applied outside its precondition."""


class OrbitSizeError(PairingError):
    """Carrier too large for direct union-find orbit counting."""


@dataclass(frozen=True)
class Pairing:
    """A partial bijection [dom_lo, dom_hi] -> [ran_lo, ran_hi].

    Stored canonically with dom_lo <= ran_lo, so a pairing and its
    inverse are the same object.  Orientation preserving pairings map
    x to x + (ran_lo - dom_lo); reversing ones map x to dom_lo + ran_hi - x.
    """

    dom_lo: int
    dom_hi: int
    ran_lo: int
    ran_hi: int
    reversing: bool
    tag: str = ""

    def __post_init__(self):
        if self.dom_lo > self.dom_hi or self.ran_lo > self.ran_hi:
            raise PairingError("empty interval in pairing %r" % (self,))
        if self.dom_hi - self.dom_lo != self.ran_hi - self.ran_lo:
            raise PairingError("domain and range widths differ in %r" % (self,))
        if self.dom_lo > self.ran_lo:
            d = (self.dom_lo, self.dom_hi)
            object.__setattr__(self, "dom_lo", self.ran_lo)
            object.__setattr__(self, "dom_hi", self.ran_hi)
            object.__setattr__(self, "ran_lo", d[0])
            object.__setattr__(self, "ran_hi", d[1])

    @property
    def width(self):
        return self.dom_hi - self.dom_lo + 1

    def same_map(self, other):
        """True when both pairings define the same bijection (tags ignored).

        Width-1 pairings are the same map in either orientation.
        """
        if (self.dom_lo, self.dom_hi, self.ran_lo, self.ran_hi) != (
                other.dom_lo, other.dom_hi, other.ran_lo, other.ran_hi):
            return False
        return self.width == 1 or self.reversing == other.reversing

    def in_domain(self, x):
        return self.dom_lo <= x <= self.dom_hi

    def in_range(self, x):
        return self.ran_lo <= x <= self.ran_hi

    def apply(self, x):
        """Image of a domain point."""
        if not self.in_domain(x):
            raise PairingError("%d not in domain of %r" % (x, self))
        if self.reversing:
            return self.dom_lo + self.ran_hi - x
        return x + (self.ran_lo - self.dom_lo)

    def apply_inverse(self, y):
        """Preimage of a range point."""
        if not self.in_range(y):
            raise PairingError("%d not in range of %r" % (y, self))
        if self.reversing:
            return self.dom_lo + self.ran_hi - y
        return y - (self.ran_lo - self.dom_lo)

    def invert(self):
        """Swap domain and range; canonical storage gives back an equal map."""
        return replace(self, dom_lo=self.ran_lo, dom_hi=self.ran_hi,
                       ran_lo=self.dom_lo, ran_hi=self.dom_hi)

    def overlapping(self):
        """True when domain and range intersect."""
        return self.dom_hi >= self.ran_lo


def pairing_from_map(lo, hi, fn, tag=""):
    """Build a pairing from an affine map given by evaluation on [lo, hi]."""
    y1, y2 = fn(lo), fn(hi)
    if abs(y2 - y1) != hi - lo:
        raise PairingError("map on [%d, %d] is not affine of slope +-1" % (lo, hi))
    if y1 <= y2:
        return Pairing(lo, hi, y1, y2, reversing=False, tag=tag)
    return Pairing(lo, hi, y2, y1, reversing=True, tag=tag)


@dataclass(frozen=True)
class PairingSystem:
    """A carrier interval with a collection of pairings on its subintervals."""

    lo: int
    hi: int
    pairings: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(self.pairings))
        for p in self.pairings:
            if p.dom_lo < self.lo or p.ran_hi > self.hi:
                raise PairingError(
                    "pairing %r leaves the carrier [%d, %d]" % (p, self.lo, self.hi))

    @property
    def width(self):
        return self.hi - self.lo + 1

    def by_tag(self, tag):
        for p in self.pairings:
            if p.tag == tag:
                return p
        raise KeyError("no pairing tagged %r" % tag)

    def replace_pairing(self, old, new):
        """Return a system with ``old`` swapped for ``new`` (or removed if None)."""
        out = []
        done = False
        for p in self.pairings:
            if not done and p is old:
                done = True
                if new is not None:
                    out.append(new)
            else:
                out.append(p)
        if not done:
            raise PairingError("pairing not in system")
        return PairingSystem(self.lo, self.hi, tuple(out))


def trim(p):
    """Make an overlapping orientation reversing pairing disjoint.

    The pairing is a reflection of [a, d] about its midpoint; the result
    keeps only the identifications below/above the midpoint.  When the
    endpoint sum is even the fixed midpoint is dropped.  Returns None for
    width <= 1 supports.
    """
    if not p.reversing:
        raise PairingError("trim requires an orientation reversing pairing")
    if not p.overlapping():
        raise PairingError("trim requires overlapping domain and range")
    a, d = p.dom_lo, p.ran_hi
    s = a + d
    if s % 2 == 0:
        dom = (a, s // 2 - 1)
        ran = (s // 2 + 1, d)
    else:
        dom = (a, (s - 1) // 2)
        ran = ((s + 1) // 2, d)
    if dom[0] > dom[1]:
        return None
    return Pairing(dom[0], dom[1], ran[0], ran[1], reversing=True, tag=p.tag)


def split(sys, tag, point):
    """Cut the tagged pairing's range at ``point`` into two pairings.

    The range is partitioned into [ran_lo, point] and [point + 1, ran_hi]
    with the domain partitioned correspondingly; the union of the two new
    pairings is the original map.  Both parts must be nonempty, so
    ran_lo <= point < ran_hi.
    """
    p = sys.by_tag(tag)
    if not (p.ran_lo <= point < p.ran_hi):
        raise PairingError("split point %d not strictly inside range of %r" % (point, p))
    left = pairing_from_map(p.ran_lo, point, p.apply_inverse, tag=p.tag + ".a")
    right = pairing_from_map(point + 1, p.ran_hi, p.apply_inverse, tag=p.tag + ".b")
    out = [q for q in sys.pairings if q is not p] + [left, right]
    return PairingSystem(sys.lo, sys.hi, tuple(out))


def reflect(sys):
    """Conjugate every pairing by x -> lo + hi - x; orbits are relabelled only."""
    s = sys.lo + sys.hi
    out = []
    for p in sys.pairings:
        out.append(Pairing(s - p.ran_hi, s - p.ran_lo, s - p.dom_hi, s - p.dom_lo,
                           reversing=p.reversing, tag=p.tag))
    return PairingSystem(sys.lo, sys.hi, tuple(out))


def translate(sys, delta):
    """Shift the carrier and every pairing by ``delta``."""
    out = [Pairing(p.dom_lo + delta, p.dom_hi + delta, p.ran_lo + delta,
                   p.ran_hi + delta, reversing=p.reversing, tag=p.tag)
           for p in sys.pairings]
    return PairingSystem(sys.lo + delta, sys.hi + delta, tuple(out))


def _touchers(sys, lo, hi):
    """Pairings whose domain or range meets [lo, hi], with the side(s)."""
    hits = []
    for p in sys.pairings:
        dom = p.dom_hi >= lo and p.dom_lo <= hi
        ran = p.ran_hi >= lo and p.ran_lo <= hi
        if dom or ran:
            hits.append((p, dom, ran))
    return hits


def truncate_right(sys, cut):
    """Peel the subinterval [cut + 1, hi] off the carrier.

    The peeled subinterval must lie in the range of exactly one pairing g
    (with g.ran_hi == hi) and meet no domain; g is trimmed first if it is
    reversing with overlapping support.  Each peeled point is paired with
    exactly one surviving point, so the orbit count is unchanged.
    """
    if not sys.lo <= cut < sys.hi:
        raise PairingError("cut %d outside carrier [%d, %d]" % (cut, sys.lo, sys.hi))
    hits = _touchers(sys, cut + 1, sys.hi)
    if len(hits) != 1:
        raise PairingError(
            "peeled subinterval [%d, %d] must meet exactly one pairing, got %s"
            % (cut + 1, sys.hi, [p.tag or repr(p) for p, _, _ in hits]))
    g, dom_hit, _ = hits[0]
    if g.reversing and g.overlapping():
        g2 = trim(g)
        if g2 is None:
            raise PairingError("pairing %r trims to nothing; peel it directly" % (g,))
        return truncate_right(sys.replace_pairing(g, g2), cut)
    if dom_hit:
        raise PairingError(
            "domain of %r meets the peeled subinterval [%d, %d]"
            % (g, cut + 1, sys.hi))
    if g.ran_hi != sys.hi:
        raise PairingError("range of %r does not reach the carrier end" % (g,))
    peel = sys.hi - cut
    if cut < g.ran_lo:
        if cut != g.ran_lo - 1:
            raise PairingError("cut %d strands part of the domain of %r" % (cut, g))
        new = None
    elif g.reversing:
        new = Pairing(g.dom_lo + peel, g.dom_hi, g.ran_lo, cut,
                      reversing=True, tag=g.tag)
    else:
        new = Pairing(g.dom_lo, g.dom_hi - peel, g.ran_lo, cut,
                      reversing=False, tag=g.tag)
    out = tuple(p for p in sys.pairings if p is not g) + ((new,) if new else ())
    return PairingSystem(sys.lo, cut, out)


def truncate_left(sys, cut):
    """Peel [lo, cut - 1] off the carrier and rebase it to start at ``lo``.

    Mirror of truncate_right: implemented by reflecting, truncating on the
    right, and reflecting back, which also performs the rebasing translation.
    """
    if not sys.lo < cut <= sys.hi:
        raise PairingError("cut %d outside carrier [%d, %d]" % (cut, sys.lo, sys.hi))
    mirrored = reflect(sys)
    trimmed = truncate_right(mirrored, sys.lo + sys.hi - cut)
    return reflect(trimmed)


def push_range(carrier, mover, tag=None):
    """Compose ``mover`` with the inverse of ``carrier`` on its range side.

    Requires mover.range contained in carrier.range; the domain is left
    untouched.  Since the carrier stays in the system, replacing the mover
    by the composite never changes the generated pseudogroup.
    """
    if carrier.overlapping():
        raise PairingError("carrier %r has overlapping domain and range" % (carrier,))
    if not (carrier.ran_lo <= mover.ran_lo and mover.ran_hi <= carrier.ran_hi):
        raise PairingError("range of %r not inside range of %r" % (mover, carrier))
    fn = lambda y: carrier.apply_inverse(mover.apply(y))
    return pairing_from_map(mover.dom_lo, mover.dom_hi, fn,
                            tag=mover.tag if tag is None else tag)


def transmit(sys, mover_tag, carrier_tag):
    """Transmit the mover pairing by the carrier pairing.

    The carrier must have disjoint domain and range and the mover's range
    must lie inside the carrier's range.  If the mover's domain is disjoint
    from the carrier's range the mover becomes carrier^-1 o mover; if it is
    contained in it, carrier^-1 o mover o carrier.  Partial domain overlap
    is rejected (split the mover first).
    """
    mover = sys.by_tag(mover_tag)
    carrier = sys.by_tag(carrier_tag)
    if mover is carrier:
        raise PairingError("cannot transmit a pairing by itself")
    if carrier.overlapping():
        raise PairingError("carrier %r has overlapping domain and range" % (carrier,))
    if not (carrier.ran_lo <= mover.ran_lo and mover.ran_hi <= carrier.ran_hi):
        raise PairingError("range of %r not inside range of %r" % (mover, carrier))
    inside = (carrier.ran_lo <= mover.dom_lo and mover.dom_hi <= carrier.ran_hi)
    touches = mover.dom_hi >= carrier.ran_lo and mover.dom_lo <= carrier.ran_hi
    if touches and not inside:
        raise PairingError(
            "domain of %r partially overlaps range of %r; split it first"
            % (mover, carrier))
    if inside:
        # the conjugate carrier^-1 o mover o carrier lives on carrier^-1(dom)
        fn = lambda x: carrier.apply_inverse(mover.apply(carrier.apply(x)))
        a = carrier.apply_inverse(mover.dom_lo)
        b = carrier.apply_inverse(mover.dom_hi)
        new = pairing_from_map(min(a, b), max(a, b), fn, tag=mover.tag)
    else:
        new = push_range(carrier, mover)
    return sys.replace_pairing(mover, new)


def count_orbits(sys, cap=DEFAULT_ORBIT_CAP):
    """Exact orbit count of the carrier under the pairings, by union-find."""
    n = sys.width
    if n > cap:
        raise OrbitSizeError(
            "carrier width %d exceeds the union-find cap %d; "
            "use the reduction path" % (n, cap))
    uf = UnionFind(n)
    base = sys.lo
    for p in sys.pairings:
        for x in range(p.dom_lo, p.dom_hi + 1):
            uf.union(x - base, p.apply(x) - base)
    return uf.count


def orbit_partition(sys, cap=DEFAULT_ORBIT_CAP):
    """The orbits themselves, as sorted lists of carrier points."""
    n = sys.width
    if n > cap:
        raise OrbitSizeError("carrier width %d exceeds the cap %d" % (n, cap))
    uf = UnionFind(n)
    for p in sys.pairings:
        for x in range(p.dom_lo, p.dom_hi + 1):
            uf.union(x - sys.lo, p.apply(x) - sys.lo)
    return [sorted(x + sys.lo for x in grp) for grp in uf.groups().values()]


def write_system(sys):
    """Serialize a pairing system in the one-per-file text format."""
    lines = ["interval %d %d" % (sys.lo, sys.hi)]
    for p in sys.pairings:
        sign = "-" if p.reversing else "+"
        line = "pair %d %d %d %d %s" % (p.dom_lo, p.dom_hi, p.ran_lo, p.ran_hi, sign)
        if p.tag:
            line += " " + p.tag
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_system(text):
    """Parse the text format produced by write_system."""
    carrier = None
    pairings = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "interval":
            if len(parts) != 3:
                raise PairingError("bad interval line: %r" % raw)
            carrier = (int(parts[1]), int(parts[2]))
        elif parts[0] == "pair":
            if len(parts) not in (6, 7):
                raise PairingError("bad pair line: %r" % raw)
            a, b, c, d = map(int, parts[1:5])
            if parts[5] not in "+-":
                raise PairingError("bad orientation flag in %r" % raw)
            tag = parts[6] if len(parts) == 7 else ""
            pairings.append(Pairing(a, b, c, d, reversing=parts[5] == "-", tag=tag))
        else:
            raise PairingError("unknown directive %r" % parts[0])
    if carrier is None:
        raise PairingError("missing interval line")
    return PairingSystem(carrier[0], carrier[1], tuple(pairings))
