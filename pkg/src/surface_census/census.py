"""Genus-indexed census of connected surfaces uF + vG.

For Euler characteristic -2n the candidate surfaces are the lattice
points on u + v = n; the census counts how many of them are connected
and compares against the Euler totient of n.  Three counting methods of
increasing directness are available: the coprimality count, the interval
reduction, and the disk-gluing oracle.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .normal_surface import SurfaceCoefficients, coordinates, glue_components
from .reduction import components_via_reduction

ORACLE_CAP = 64

METHODS = ("gcd", "reduction", "oracle")


def _prime_factors(n):
    """Sorted distinct prime factors, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def totient(n):
    """Euler's totient, via the factorization of n."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    phi = n
    for p in _prime_factors(n):
        phi -= phi // p
    return phi


def totient_sieve(max_n):
    """phi(0..max_n) by the standard multiplicative sieve."""
    phi = list(range(max_n + 1))
    for p in range(2, max_n + 1):
        if phi[p] == p:   # p prime
            for k in range(p, max_n + 1, p):
                phi[k] -= phi[k] // p
    return phi


def _spf_sieve(max_n):
    """Smallest prime factor of every integer up to max_n."""
    spf = list(range(max_n + 1))
    for p in range(2, int(max_n ** 0.5) + 1):
        if spf[p] == p:
            for k in range(p * p, max_n + 1, p):
                if spf[k] == k:
                    spf[k] = p
    return spf


def _distinct_primes(n, spf):
    out = []
    while n > 1:
        p = spf[n]
        out.append(p)
        while n % p == 0:
            n //= p
    return out


def coprime_pair_count(n, primes=None):
    """#{(u, v) : u + v = n, u, v >= 0, gcd(u, v) = 1}.

    Since gcd(u, n - u) = gcd(u, n), this is the number of u in [1, n - 1]
    sharing no prime with n, counted by inclusion-exclusion over n's
    distinct primes (the endpoints u = 0, n have gcd n).  n = 1 has the
    two pairs (0, 1) and (1, 0).
    """
    if n == 1:
        return 2
    if primes is None:
        primes = _prime_factors(n)
    total = n - 1
    for k in range(1, len(primes) + 1):
        sign = -1 if k % 2 else 1
        for sub in combinations(primes, k):
            d = 1
            for p in sub:
                d *= p
            total += sign * (n // d - 1)
    return total


@dataclass(frozen=True)
class CensusRow:
    n: int
    count: int
    phi: int
    agree: bool   # None for n = 1, where the totient identity is not claimed

    def as_dict(self):
        return {"n": self.n, "count": self.count, "phi": self.phi,
                "agree": self.agree}


def _count_connected(n, components_fn):
    return sum(1 for u in range(n + 1)
               if components_fn(u, n - u) == 1)


def census(max_n, method="gcd", tri=None):
    """Census rows for 1 <= n <= max_n using the chosen counting method.

    gcd: coprimality count (inclusion-exclusion; scales to large max_n).
    reduction: per-pair interval reduction (width recurrence).
    oracle: per-pair disk gluing; capped at max_n <= 64.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if method not in METHODS:
        raise ValueError("unknown method %r" % method)
    if method == "oracle":
        if max_n > ORACLE_CAP:
            raise ValueError("oracle method is capped at max_n <= %d" % ORACLE_CAP)
        if tri is None:
            from .triangulation import build_paper_triangulation
            tri = build_paper_triangulation()
    phi = totient_sieve(max_n)
    rows = []
    if method == "gcd":
        spf = _spf_sieve(max_n)
        for n in range(1, max_n + 1):
            count = coprime_pair_count(n, primes=_distinct_primes(n, spf))
            rows.append(CensusRow(n, count, phi[n], count == phi[n] if n > 1 else None))
        return rows
    if method == "reduction":
        fn = lambda u, v: components_via_reduction(SurfaceCoefficients(u, v))
    else:
        fn = lambda u, v: glue_components(coordinates(SurfaceCoefficients(u, v)), tri)[0]
    for n in range(1, max_n + 1):
        count = _count_connected(n, fn)
        rows.append(CensusRow(n, count, phi[n], count == phi[n] if n > 1 else None))
    return rows


def components(u, v, method="gcd", tri=None, uf_cap=None):
    """Component count of uF + vG by the requested method."""
    coeff = SurfaceCoefficients(u, v)
    if method == "gcd":
        return gcd(u, v)
    if method == "reduction":
        return components_via_reduction(coeff)
    if tri is None:
        from .triangulation import build_paper_triangulation
        tri = build_paper_triangulation()
    if method == "gluing":
        return glue_components(coordinates(coeff), tri)[0]
    if method == "unionfind":
        from .compiler import compile_surface
        from .intervals import DEFAULT_ORBIT_CAP, count_orbits
        sys = compile_surface(coordinates(coeff), tri)
        return count_orbits(sys, cap=uf_cap or DEFAULT_ORBIT_CAP)
    raise ValueError("unknown method %r" % method)
