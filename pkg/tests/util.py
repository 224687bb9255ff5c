"""Shared test helpers: randomized pairing systems and move enumeration."""

from surface_census import intervals as iv


def random_system(rng, max_n=200, max_pairings=6):
    """A pairing system on [1, n], n <= max_n, with random pairings."""
    n = rng.randint(2, max_n)
    pairings = []
    for idx in range(rng.randint(1, max_pairings)):
        w = rng.randint(1, n)
        a = rng.randint(1, n - w + 1)
        c = rng.randint(1, n - w + 1)
        pairings.append(iv.Pairing(a, a + w - 1, c, c + w - 1,
                                   reversing=rng.random() < 0.5,
                                   tag="p%d" % idx))
    return iv.PairingSystem(1, n, tuple(pairings))


def applicable_moves(sys, rng):
    """Yield (description, moved system) for every move whose precondition
    holds on ``sys``, sampling random parameters for the parametrised ones."""
    yield "reflect", iv.reflect(sys)
    yield "translate", iv.translate(sys, rng.randint(-7, 7))
    for p in sys.pairings:
        if p.reversing and p.overlapping():
            yield "trim %s" % p.tag, sys.replace_pairing(p, iv.trim(p))
        if p.width >= 2:
            point = rng.randint(p.ran_lo, p.ran_hi - 1)
            yield "split %s at %d" % (p.tag, point), iv.split(sys, p.tag, point)
    for cut in {sys.hi - 1, rng.randint(sys.lo, sys.hi - 1)}:
        try:
            moved = iv.truncate_right(sys, cut)
        except iv.PairingError:
            continue
        yield "truncate_right at %d" % cut, moved
    for cut in {sys.lo + 1, rng.randint(sys.lo + 1, sys.hi)}:
        try:
            moved = iv.truncate_left(sys, cut)
        except iv.PairingError:
            continue
        yield "truncate_left at %d" % cut, moved
    for mover in sys.pairings:
        for carrier in sys.pairings:
            if mover is carrier:
                continue
            try:
                moved = iv.transmit(sys, mover.tag, carrier.tag)
            except iv.PairingError:
                continue
            yield "transmit %s by %s" % (mover.tag, carrier.tag), moved
