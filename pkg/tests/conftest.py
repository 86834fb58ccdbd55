"""Shared brute-force helpers for the test suite.

These recompute everything definitionally (rotations enumerated one by one)
so the production paths are always checked against an independent
implementation.
"""

from itertools import product

from necklaces.words import NkString, fundamental_period, min_rotation


def all_words(n, q):
    return [NkString(n, q, digs) for digs in product(range(q), repeat=n)]


def brute_min_rotation(x):
    n = x.n
    doubled = x.digits + x.digits
    return min(doubled[s:s + n] for s in range(n))


def brute_orbit_below(y, x):
    n = y.n
    doubled = y.digits + y.digits
    return any(doubled[s:s + n] < x.digits for s in range(n))


def brute_count_below(x, period=None, dividing=False):
    """Words below x filtered by orbit size (exact or dividing)."""
    count = 0
    for y in all_words(x.n, x.q):
        if not brute_orbit_below(y, x):
            continue
        p = fundamental_period(y)
        if period is None or (dividing and period % p == 0) or (not dividing and p == period):
            count += 1
    return count


def brute_necklaces_below(x):
    seen = set()
    for y in all_words(x.n, x.q):
        if brute_orbit_below(y, x):
            seen.add(min_rotation(y)[0].digits)
    return len(seen)


def brute_witnesses(bits):
    """The witness set of a binary word, as a set of bit tuples."""
    out = set()
    for k, b in enumerate(bits):
        if b == 1:
            out.add(tuple(bits[:k]) + (0,))
    return out
