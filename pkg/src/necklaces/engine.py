"""Exact counting of words with a rotation below (or above) a threshold.

Counts #{y in Sigma^n : some rotation of y < x} by a forward dynamic program
over an implicit deterministic automaton, without enumerating the alphabet:
at every step the symbol space {0, ..., q-1} is split into the few intervals
on which the transition is constant, and each interval contributes its size
(an exact big integer) as a multiplicity.  This keeps the work polynomial in
n and log q.

The automaton decides "some rotation of y is strictly below x" as the union
of two events:

  * contiguous: y contains a substring x[0:m]c with c < x[m] (the rotation
    through that substring drops below x while still inside the copied part);
  * wraparound: for some a >= 1, y ends with x[0:a] and y[0:n-a] < x[a:n]
    (the rotation by a starts with x's own prefix and drops strictly later).

The contiguous side is a border-chain (KMP) state plus an absorbing fired
bit.  For the wraparound side, all still-open comparisons of y's prefix
against suffixes of x have read the same symbols, so the open set is
determined by one anchor suffix plus the layer; when the last comparison
closes, the full profile of resolved outcomes is a function of (anchor,
layer, rank of the closing symbol) and x's self-comparison table, and is
immediately collapsed to the only thing the future can ask: the set of
final border-chain lengths that would certify acceptance, stored as a
bitmask.  States with equal masks merge, which keeps the frontier small.
"""

from functools import lru_cache

from .words import NkString, complement


class _Tables:
    """Per-threshold precomputation: borders, border chains, suffix LCPs."""

    def __init__(self, digits, q):
        self.x = digits
        self.q = q
        n = len(digits)
        self.n = n

        border = [0] * (n + 1)
        k = 0
        for i in range(1, n):
            while k > 0 and digits[i] != digits[k]:
                k = border[k]
            if digits[i] == digits[k]:
                k += 1
            border[i + 1] = k
        self.border = border

        chains = []
        for ell in range(n + 1):
            c = [ell]
            while c[-1] > 0:
                c.append(border[c[-1]])
            chains.append(tuple(c))
        self.chains = chains

        # up_mask[m]: bitmask of match lengths whose border chain contains m,
        # i.e. the final states in which a word ending with x[0:m] is ending
        # with that border of the matched prefix as well.
        up_mask = [0] * (n + 1)
        for ell in range(n + 1):
            for m in chains[ell]:
                if m >= 1:
                    up_mask[m] |= 1 << ell
        self.up_mask = up_mask

        # eqmap[ell]: symbol value -> next match length (longest extension);
        # fire_above[ell]: a contiguous witness fires iff the symbol is below
        # this, the largest digit on the border chain.
        self.eqmap = []
        self.fire_above = []
        for ell in range(n):
            m_of = {}
            for m in chains[ell]:
                v = digits[m]
                if v not in m_of or m > m_of[v]:
                    m_of[v] = m
            self.eqmap.append({v: m + 1 for v, m in m_of.items()})
            self.fire_above.append(max(m_of))
        self.eqmap.append(None)
        self.fire_above.append(None)

        # lcp[a][b] = length of the longest common prefix of x[a:] and x[b:].
        lcp = [[0] * (n + 1) for _ in range(n + 1)]
        for a in range(n - 1, -1, -1):
            row = lcp[a]
            nxt = lcp[a + 1]
            for b in range(n - 1, -1, -1):
                if digits[a] == digits[b]:
                    row[b] = nxt[b + 1] + 1
        self.lcp = lcp

        self._lives_cache = {}

    def lives(self, j, anchor):
        """Open wraparound shifts after j symbols equal to x[anchor:anchor+j]."""
        key = (j, anchor)
        got = self._lives_cache.get(key)
        if got is None:
            lcp_a = self.lcp[anchor]
            got = tuple(a for a in range(1, self.n - j) if lcp_a[a] >= j)
            self._lives_cache[key] = got
        return got

    def death_mask(self, anchor, layer, closing):
        """Acceptance mask after the last open comparison closes.

        The open comparisons at (anchor, layer) each read `closing` next; a
        shift m ends strictly below when its next threshold digit exceeds the
        symbol read.  Already-resolved shifts are recovered from the suffix
        LCP table.  The result is the OR of up_mask over all below-shifts.
        """
        x, lcp, n = self.x, self.lcp, self.n
        mask = 0
        lcp_a = lcp[anchor]
        for m in range(1, n):
            horizon = n - m
            d = lcp_a[m]
            if d < layer and d < horizon:
                if x[m + d] > x[anchor + d]:
                    mask |= self.up_mask[m]
            elif horizon > layer and x[m + layer] > closing:
                mask |= self.up_mask[m]
        return mask


# Wraparound keys: ("L", anchor) while comparisons are open, afterwards the
# integer acceptance mask (0 when nothing can certify, or when n == 1).


def _step_breakpoints(tab, ell, wkey, j):
    vals = set(tab.eqmap[ell])
    if type(wkey) is tuple:
        vals.update(tab.x[a + j] for a in tab.lives(j, wkey[1]))
    return vals


def _step(tab, ell, wkey, j, c):
    """Advance one unfired state by symbol c; returns "FIRED" or (ell', wkey')."""
    if c < tab.fire_above[ell]:
        return "FIRED"
    ell2 = tab.eqmap[ell].get(c, 0)
    if type(wkey) is not tuple:
        return ell2, wkey
    anchor = wkey[1]
    lives = tab.lives(j, anchor)
    boundary = tab.n - j - 1
    survivors = [a for a in lives if tab.x[a + j] == c and a < boundary]
    if survivors:
        return ell2, ("L", survivors[0])
    return ell2, tab.death_mask(anchor, j, c)


def _pieces(q, breakpoints):
    """Split {0,...,q-1} into constant-transition pieces: (representative, size)."""
    out = []
    prev = -1
    for v in sorted(breakpoints):
        if v >= q:
            continue
        gap = v - prev - 1
        if gap > 0:
            out.append((prev + 1, gap))
        out.append((v, 1))
        prev = v
    gap = q - prev - 1
    if gap > 0:
        out.append((prev + 1, gap))
    return out


def _final_accepts(ell, wkey):
    return type(wkey) is int and (wkey >> ell) & 1


def count_below(digits, q):
    """#{y in Sigma^n : some rotation of y is lexicographically below digits}."""
    n = len(digits)
    if all(d == 0 for d in digits):
        return 0
    tab = _Tables(tuple(digits), q)
    pow_q = [1] * (n + 1)
    for i in range(1, n + 1):
        pow_q[i] = pow_q[i - 1] * q

    # Once the wraparound side is resolved its mask is inert, so those states
    # move by the match length alone; their piece transitions are layer-free
    # and shared.  States with open comparisons are handled individually.
    fired_of = {}

    def moves(ell):
        got = fired_of.get(ell)
        if got is None:
            got = []
            for c, size in _pieces(q, set(tab.eqmap[ell])):
                if c < tab.fire_above[ell]:
                    got.append((size, None))
                else:
                    got.append((size, tab.eqmap[ell].get(c, 0)))
            fired_of[ell] = got
        return got

    live = {(0, ("L", 1)): 1} if n >= 2 else {}
    dead = {} if n >= 2 else {(0, 0): 1}
    fired_total = 0
    for j in range(n):
        tail = pow_q[n - j - 1]
        nxt_live = {}
        nxt_dead = {}
        for (ell, wkey), cnt in live.items():
            for c, size in _pieces(q, _step_breakpoints(tab, ell, wkey, j)):
                res = _step(tab, ell, wkey, j, c)
                if res == "FIRED":
                    fired_total += cnt * size * tail
                elif type(res[1]) is tuple:
                    nxt_live[res] = nxt_live.get(res, 0) + cnt * size
                else:
                    nxt_dead[res] = nxt_dead.get(res, 0) + cnt * size
        for (ell, mask), cnt in dead.items():
            for size, ell2 in moves(ell):
                if ell2 is None:
                    fired_total += cnt * size * tail
                else:
                    key = (ell2, mask)
                    nxt_dead[key] = nxt_dead.get(key, 0) + cnt * size
        live = nxt_live
        dead = nxt_dead

    total = fired_total
    for (ell, mask), cnt in dead.items():
        if (mask >> ell) & 1:
            total += cnt
    return total


def count_below_with_ceiling(digits, ceiling, q):
    """#{y : some rotation below `digits` and no rotation above `ceiling`}.

    The "above" side reuses the "below" machinery on complemented words: a
    rotation of y exceeds the ceiling exactly when the matching rotation of
    the complemented word drops below the complemented ceiling.
    """
    n = len(digits)
    if all(d == 0 for d in digits):
        return 0
    lo = _Tables(tuple(digits), q)
    hi = _Tables(complement(NkString(n, q, tuple(ceiling))).digits, q)

    start = ("L", 1) if n >= 2 else 0
    # lo-side state becomes the string "FIRED" once a contiguous witness fires.
    frontier = {((0, start), (0, start)): 1}
    for j in range(n):
        nxt = {}
        for (slo, shi), cnt in frontier.items():
            vals = set()
            if slo != "FIRED":
                vals.update(_step_breakpoints(lo, slo[0], slo[1], j))
            # hi side reads complemented symbols: map its breakpoints back.
            vals.update(q - 1 - v for v in _step_breakpoints(hi, shi[0], shi[1], j))
            for c, size in _pieces(q, vals):
                if slo == "FIRED":
                    slo2 = "FIRED"
                else:
                    slo2 = _step(lo, slo[0], slo[1], j, c)
                shi2 = _step(hi, shi[0], shi[1], j, q - 1 - c)
                if shi2 == "FIRED":
                    continue  # some rotation already exceeds the ceiling
                key = (slo2, shi2)
                nxt[key] = nxt.get(key, 0) + cnt * size
        frontier = nxt

    total = 0
    for (slo, shi), cnt in frontier.items():
        if _final_accepts(*shi):
            continue
        if slo == "FIRED" or _final_accepts(*slo):
            total += cnt
    return total


@lru_cache(maxsize=None)
def count_below_cached(digits, q):
    return count_below(digits, q)
