"""Indexing monic irreducible polynomials of degree n over F_q.

A degree-n irreducible corresponds to the orbit of its roots under the
q-power map; writing a nonzero field element as a power g^a of a primitive
root and a in base q identifies these orbits with aperiodic rotation orbits
of base-q words (multiplication by q rotates the digit word).  Indexing an
irreducible therefore unranks a Lyndon word, exponentiates, and multiplies
the conjugate linear factors back together.

The index order is inherited from the Lyndon lexicographic order of the
exponent words; it is not lexicographic on polynomial coefficients.
"""

from . import counting, indexing
from .errors import NotAperiodic
from .indexing import TOO_LARGE
from .gf import minimal_polynomial


def count_irreducible(q, n):
    """|I_{q,n}|: all monic linear polynomials for n = 1, else Lyndon totals.

    For n >= 2 the all-(q-1) digit word is periodic, so the excluded residue
    of the exponent correspondence never meets an aperiodic orbit and no
    correction is needed.
    """
    if n == 1:
        return q
    return counting.count_lyndon(n, q)


def index_irreducible(fctx, i):
    """The i-th monic irreducible of degree n over F_q, or TOO_LARGE.

    Requires primitive advice: fctx.modulus must have a primitive root as
    the class of T.  Distinct indices give distinct polynomials, and the
    image over i = 1..count is exactly the set of monic irreducibles.
    """
    if not fctx.primitive:
        raise ValueError("irreducible indexing requires certified primitive advice")
    if i < 1:
        raise ValueError("indices are 1-based")
    q, n = fctx.q, fctx.n
    if i > count_irreducible(q, n):
        return TOO_LARGE
    if n == 1:
        # The root correspondence misses P(T) = T (root 0); prepend it.
        if i == 1:
            return (fctx.base.zero, fctx.base.one)
        root = fctx.pow(fctx.generator, i - 2)
        scalar = root[0] if root else fctx.base.zero
        return (fctx.base.neg(scalar), fctx.base.one)
    word = indexing.index_lyndon(n, q, i)
    if word is TOO_LARGE:  # unreachable: count checked above
        raise NotAperiodic("lyndon index out of range")
    # aperiodicity excludes the all-(q-1) word, the missing exponent residue
    assert any(d != q - 1 for d in word.digits)
    exponent = word.to_int()
    alpha = fctx.pow(fctx.generator, exponent)
    return minimal_polynomial(fctx, alpha)


def exponent_word(fctx, i):
    """The Lyndon exponent word backing index i (n >= 2); test/debug helper."""
    return indexing.index_lyndon(fctx.n, fctx.q, i)


def format_poly(fctx, poly):
    """Low-first coefficient list, each coefficient an F_p vector."""
    e = fctx.base.e
    out = []
    for coeff in poly:
        vec = list(coeff) + [0] * (e - len(coeff))
        out.append(",".join(str(c) for c in vec))
    return " ".join(out)
