"""Counting words and orbits below a threshold, by orbit-size class.

The quantities: for a threshold word x of length n and a divisor p of n,

  * count_words_below_period_dividing(x, p): words whose orbit size divides p
    and whose orbit contains a word strictly below x;
  * count_words_below_period_exact(x, p): same with orbit size exactly p,
    recovered by Mobius inversion over divisors;
  * count_necklaces_below(x): orbits with a member strictly below x, summing
    the exact counts weighted by 1/orbit-size;
  * count_lyndon_below(x): orbits of full size n below x.

For p = n the dividing count is the accepted-word count of the rotation
automaton; for p < n a word with orbit size dividing p is a repetition of a
length-p block, and the count reduces to a length-p instance plus an easily
decided correction of one extra orbit.

Three interchangeable evaluation paths are kept: "auto" evaluates the
automaton arithmetically (polynomial in n and log q), "direct" materializes
a q-ary branching program (small q only), "encoded" materializes the
bit-level blocked programs over the binary expansion.  They are
cross-validated against each other and against brute force in the tests.
"""

from functools import lru_cache

from . import engine
from .errors import NotADivisor, TooBig
from .words import NkString, bin_encode, bits_for, fundamental_period, min_rotation

PATHS = ("auto", "direct", "encoded")
DIRECT_LIMIT = 16


def divisors(n):
    """Divisors of n in ascending order."""
    if n < 1:
        raise ValueError("divisors of a positive integer only")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(m):
    """Standard Mobius function, by trial division."""
    if m < 1:
        raise ValueError("mobius is defined on positive integers")
    mu = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            mu = -mu
        d += 1
    if m > 1:
        mu = -mu
    return mu


def _resolve_path(path, q):
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}; expected one of {PATHS}")
    return path


def _count_full(digits, q, path):
    """#{y : some rotation of y below the threshold}, full length."""
    if path == "auto":
        return engine.count_below(digits, q)
    x = NkString(len(digits), q, digits)
    if path == "direct":
        if q > DIRECT_LIMIT:
            raise TooBig(f"direct path materializes q={q} arcs per node")
        from .programs import (
            build_contiguous_qary,
            build_union,
            build_wraparound_qary,
            count_accepted,
        )

        bp = build_union(build_contiguous_qary(x), build_wraparound_qary(x))
        return count_accepted(bp)
    from .programs import (
        build_alphabet_restriction,
        build_intersection,
        build_rotation_witness,
        count_accepted,
    )

    t = bits_for(q)
    ax = build_rotation_witness(bin_encode(x), t)
    a0 = build_alphabet_restriction(x.n, t, q)
    return count_accepted(build_intersection(ax, a0))


@lru_cache(maxsize=None)
def _count_dividing_cached(digits, q, p, path):
    n = len(digits)
    if all(d == 0 for d in digits):
        return 0
    if p == n:
        return _count_full(digits, q, path)

    # Words with orbit size dividing p < n are repetitions of a length-p
    # block a.  Their orbit is below x either because the block's own orbit
    # is below the first block of x, or because all blocks of x up to some
    # run boundary equal the repeated block and the next block of x exceeds
    # it; the latter adds the orbit of x's first block, provided that block
    # is not already counted (it is its own minimal rotation).
    head = digits[:p]
    count = _count_dividing_cached(head, q, p, path)
    blocks = [digits[i:i + p] for i in range(0, n, p)]
    run = 1
    while run < len(blocks) and blocks[run] == head:
        run += 1
    if run < len(blocks) and head < blocks[run]:
        head_word = NkString(p, q, head)
        if min_rotation(head_word)[0].digits == head:
            count += fundamental_period(head_word)
    return count


def count_words_below_period_dividing(x, p, path="auto"):
    """#{y : orbit size of y divides p, some rotation of y below x}."""
    if x.n % p != 0 or p < 1:
        raise NotADivisor(f"period {p} does not divide length {x.n}")
    return _count_dividing_cached(x.digits, x.q, p, _resolve_path(path, x.q))


def count_words_below_period_exact(x, p, path="auto"):
    """#{y : orbit size exactly p, some rotation of y below x}."""
    if x.n % p != 0 or p < 1:
        raise NotADivisor(f"period {p} does not divide length {x.n}")
    path = _resolve_path(path, x.q)
    total = 0
    for i in divisors(p):
        total += mobius(p // i) * _count_dividing_cached(x.digits, x.q, i, path)
    return total


def count_necklaces_below(x, path="auto"):
    """Number of orbits containing at least one word strictly below x."""
    path = _resolve_path(path, x.q)
    total = 0
    for i in divisors(x.n):
        exact = count_words_below_period_exact(x, i, path)
        orbits, rem = divmod(exact, i)
        if rem:
            raise RuntimeError(
                f"orbit count for size {i} not divisible by {i}; counting bug"
            )
        total += orbits
    return total


def count_lyndon_below(x, path="auto"):
    """Number of orbits of full size n below x (aperiodic orbits)."""
    exact = count_words_below_period_exact(x, x.n, path)
    orbits, rem = divmod(exact, x.n)
    if rem:
        raise RuntimeError("aperiodic word count not divisible by n; counting bug")
    return orbits


def count_necklaces(n, q, path="auto"):
    """Total number of orbits of length-n words over a size-q alphabet."""
    top = NkString(n, q, (q - 1,) * n)
    return count_necklaces_below(top, path) + 1


def count_lyndon(n, q, path="auto"):
    """Total number of aperiodic orbits (equivalently, Lyndon words)."""
    top = NkString(n, q, (q - 1,) * n)
    extra = 1 if n == 1 else 0  # the all-max word is periodic unless n = 1
    return count_lyndon_below(top, path) + extra


def count_words_below_with_ceiling(x, ceiling):
    """#{y : some rotation below x and no rotation above the ceiling}.

    Joint two-sided count used to rank orbits that must stay entirely below
    a bound; evaluated arithmetically only.
    """
    if x.n != ceiling.n or x.q != ceiling.q:
        raise ValueError("threshold and ceiling must share length and alphabet")
    return engine.count_below_with_ceiling(x.digits, ceiling.digits, x.q)


def clear_caches():
    _count_dividing_cached.cache_clear()
    engine.count_below_cached.cache_clear()
