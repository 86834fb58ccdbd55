"""Finite field towers F_p <= F_q <= F_{q^n} with explicit coefficient vectors.

Elements of F_q = F_p[u]/g(u) are tuples of ints (low degree first, trailing
zeros stripped, () is zero); elements of F_{q^n} = F_q[T]/F(T) are tuples of
F_q elements in the same convention.  Polynomial arithmetic is generic over
a coefficient field object, so the same routines serve both levels of the
tower.  p and q are arbitrary-precision; only the extension degrees need to
stay reasonable.

The advice file format (normative for interoperability):

    line 1: "p e"
    line 2: coefficients of g over F_p, space-separated, low first
            (omitted entirely when e = 1)
    line 3: "n"
    line 4: coefficients of F over F_q, space-separated, low first; each
            coefficient is a comma-separated F_p vector padded to length e
    line 5: optional "factors r1 r2 ..." (primes of q^n - 1, multiplicity)
"""

import random

from .errors import (
    BadFactorization,
    CoefficientNotInBase,
    ConjugatesCollide,
    InvalidAdvice,
)

# ---------------------------------------------------------------------------
# integer primality and factoring (desk scale)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(m):
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_rho(m):
    if m % 2 == 0:
        return 2
    rng = random.Random(m)
    while True:
        c = rng.randrange(1, m)
        f = lambda v: (v * v + c) % m
        x = y = rng.randrange(2, m)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = _gcd(abs(x - y), m)
        if d != m:
            return d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def factorize(m):
    """Prime factors of m with multiplicity, ascending; trial division + rho."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    for p in (2, 3, 5, 7, 11, 13):
        while m % p == 0:
            out.append(p)
            m //= p
    stack = [m] if m > 1 else []
    d = 17
    while stack and stack[-1] < 10**12:
        m = stack.pop()
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                m //= d
            else:
                d += 2
        if m > 1:
            out.append(m)
        d = 17
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out.append(m)
            continue
        d2 = _pollard_rho(m)
        stack.extend((d2, m // d2))
    return sorted(out)


# ---------------------------------------------------------------------------
# generic polynomial arithmetic over a coefficient field object


class _PrimeField:
    """F_p with plain int elements; the ground level of the tower."""

    def __init__(self, p):
        self.p = p
        self.size = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in a prime field")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0


def pstrip(field, c):
    c = list(c)
    while c and field.is_zero(c[-1]):
        c.pop()
    return tuple(c)


def padd(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = field.add(out[i], v)
    return pstrip(field, out)


def psub(field, a, b):
    out = list(a) + [field.zero] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = field.sub(out[i], v)
    return pstrip(field, out)


def pmul(field, a, b):
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if field.is_zero(va):
            continue
        for j, vb in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(va, vb))
    return pstrip(field, out)


def pdivmod(field, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = field.inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), pstrip(field, rem)
    quo = [field.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        coef = rem[i]
        if field.is_zero(coef):
            continue
        factor = field.mul(coef, lead_inv)
        quo[i - db] = factor
        for j in range(db + 1):
            rem[i - db + j] = field.sub(rem[i - db + j], field.mul(factor, b[j]))
    return pstrip(field, quo), pstrip(field, rem)


def pmod(field, a, b):
    return pdivmod(field, a, b)[1]


def pmonic(field, a):
    if not a:
        return a
    inv = field.inv(a[-1])
    return pstrip(field, [field.mul(c, inv) for c in a])


def pgcd(field, a, b):
    while b:
        a, b = b, pmod(field, a, b)
    return pmonic(field, a)


def ppow_mod(field, base, exp, mod):
    result = (field.one,)
    base = pmod(field, base, mod)
    while exp > 0:
        if exp & 1:
            result = pmod(field, pmul(field, result, base), mod)
        base = pmod(field, pmul(field, base, base), mod)
        exp >>= 1
    return result


def peval(field, a, point):
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, point), c)
    return acc


def pinv_mod(field, a, mod):
    """Inverse of a modulo mod via the extended Euclidean algorithm."""
    r0, r1 = mod, pmod(field, a, mod)
    s0, s1 = (), (field.one,)
    while r1:
        q, r2 = pdivmod(field, r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, psub(field, s0, pmul(field, q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the modulus")
    inv_lead = field.inv(r0[0])
    return pstrip(field, [field.mul(c, inv_lead) for c in s0])


def is_irreducible(field, f):
    """Irreducibility over the field of size field.size; f monic, degree >= 1.

    Standard criterion: T^(size^m) = T mod f, and for every prime r | m the
    gcd of T^(size^(m/r)) - T with f is trivial.
    """
    m = len(f) - 1
    if m < 1:
        raise ValueError("degree must be at least 1")
    if m == 1:
        return True
    size = field.size
    X = (field.zero, field.one)
    powers = {0: pmod(field, X, f)}
    cur = powers[0]
    for i in range(1, m + 1):
        cur = ppow_mod(field, cur, size, f)
        powers[i] = cur
    if powers[m] != pmod(field, X, f):
        return False
    for r in sorted(set(factorize(m))):
        w = psub(field, powers[m // r], X)
        if len(pgcd(field, w, f)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# F_q = F_p[u]/g(u)


class FqCtx:
    """Description of F_q as F_p[u]/g(u); elements are low-first int tuples."""

    def __init__(self, p, e, g=None):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be positive")
        base = _PrimeField(p)
        if g is None:
            if e != 1:
                raise ValueError("a modulus polynomial is required when e > 1")
            g = (0, 1)
        g = tuple(c % p for c in g)
        if len(g) != e + 1 or g[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if e > 1 and not is_irreducible(base, g):
            raise ValueError("modulus polynomial is reducible")
        self.p = p
        self.e = e
        self.g = g
        self.q = p**e
        self.size = self.q
        self.base = base
        self.zero = ()
        self.one = (1,)

    def __repr__(self):
        return f"FqCtx(p={self.p}, e={self.e})"

    def add(self, a, b):
        return padd(self.base, a, b)

    def sub(self, a, b):
        return psub(self.base, a, b)

    def neg(self, a):
        return pstrip(self.base, [-c % self.p for c in a])

    def mul(self, a, b):
        return pmod(self.base, pmul(self.base, a, b), self.g)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pinv_mod(self.base, a, self.g)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero(self, a):
        return a == ()

    def element_from_int(self, v):
        if not (0 <= v < self.q):
            raise ValueError("element index out of range")
        out = []
        while v:
            v, r = divmod(v, self.p)
            out.append(r)
        return tuple(out)

    def element_to_int(self, a):
        v = 0
        for c in reversed(a):
            v = v * self.p + c
        return v


def element_to_int(ctx, a):
    return ctx.element_to_int(a)


def default_fq_ctx(q):
    """Canonical context for F_q: the first irreducible modulus in integer order."""
    factors = factorize(q)
    p = factors[0]
    if any(f != p for f in factors):
        raise ValueError(f"{q} is not a prime power")
    e = len(factors)
    if e == 1:
        return FqCtx(p, 1)
    base = _PrimeField(p)
    for v in range(p**e):
        coeffs = []
        rest = v
        for _ in range(e):
            rest, c = divmod(rest, p)
            coeffs.append(c)
        g = tuple(coeffs) + (1,)
        if is_irreducible(base, g):
            return FqCtx(p, e, g)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# F_{q^n} = F_q[T]/F(T)


class FqnCtx:
    """The extension F_q[T]/F(T); elements are low-first tuples of F_q elements."""

    def __init__(self, base, n, modulus, primitive=False, _verified=False):
        if n < 1:
            raise ValueError("extension degree must be positive")
        modulus = pstrip(base, modulus)
        if len(modulus) != n + 1 or modulus[-1] != base.one:
            raise ValueError("modulus must be monic of degree n")
        if not _verified and n > 1 and not is_irreducible(base, modulus):
            raise ValueError("modulus polynomial is reducible")
        self.base = base
        self.n = n
        self.modulus = modulus
        self.primitive = primitive
        self.q = base.q
        self.order = base.q**n - 1
        self.zero = ()
        self.one = (base.one,)
        self.generator = pmod(base, (base.zero, base.one), modulus)

    def __repr__(self):
        return f"FqnCtx(q={self.q}, n={self.n}, primitive={self.primitive})"

    def add(self, a, b):
        return padd(self.base, a, b)

    def sub(self, a, b):
        return psub(self.base, a, b)

    def neg(self, a):
        return pstrip(self.base, [self.base.neg(c) for c in a])

    def mul(self, a, b):
        return pmod(self.base, pmul(self.base, a, b), self.modulus)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pinv_mod(self.base, a, self.modulus)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero(self, a):
        return a == ()

    def element_from_int(self, v):
        """Index elements by base-q packing of their F_q coordinates."""
        if not (0 <= v < self.q**self.n):
            raise ValueError("element index out of range")
        out = []
        while v:
            v, r = divmod(v, self.q)
            out.append(self.base.element_from_int(r))
        return tuple(out)

    def element_to_int(self, a):
        v = 0
        for c in reversed(a):
            v = v * self.q + self.base.element_to_int(c)
        return v


def frobenius(fctx, a):
    """The q-power map, the generating automorphism of F_{q^n} over F_q."""
    return fctx.pow(a, fctx.q)


def minimal_polynomial(fctx, a):
    """Monic polynomial over F_q with root a, of degree n.

    Requires the n conjugate powers a, a^q, ... to be pairwise distinct;
    the product of (T - conjugate) then has coefficients that collapse into
    F_q, which is verified coefficient by coefficient.
    """
    n = fctx.n
    conjugates = [a]
    cur = a
    for _ in range(n - 1):
        cur = frobenius(fctx, cur)
        conjugates.append(cur)
    if len(set(conjugates)) != n:
        raise ConjugatesCollide("element lies in a proper subfield")
    # product over F_{q^n}[T]
    poly = (fctx.one,)
    for c in conjugates:
        poly = _poly_shift_mul(fctx, poly, c)
    out = []
    for coeff in poly:
        if len(coeff) > 1:
            raise CoefficientNotInBase("conjugate product left the base field")
        out.append(coeff[0] if coeff else fctx.base.zero)
    return tuple(out)


def _poly_shift_mul(fctx, poly, root):
    """Multiply a polynomial over F_{q^n} by (T - root)."""
    neg = fctx.neg(root)
    out = [fctx.zero] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] = fctx.add(out[i + 1], c)
        out[i] = fctx.add(out[i], fctx.mul(c, neg))
    return tuple(out)


def check_factorization(order, factors):
    if not factors:
        if order == 1:
            return
        raise BadFactorization("empty factor list")
    prod = 1
    for r in factors:
        if not is_probable_prime(r):
            raise BadFactorization(f"{r} is not prime")
        prod *= r
    if prod != order:
        raise BadFactorization("factor product does not match the group order")


def find_primitive_polynomial(base, n, factors, rng_seed):
    """Random search for a monic irreducible F with T primitive mod F.

    factors must be the complete prime factorization of q^n - 1 (with
    multiplicity); determinism follows from the seed.
    """
    order = base.q**n - 1
    check_factorization(order, factors)
    distinct = sorted(set(factors))
    rng = random.Random(rng_seed)
    while True:
        coeffs = [base.element_from_int(rng.randrange(base.q)) for _ in range(n)]
        coeffs.append(base.one)
        f = pstrip(base, coeffs)
        if len(f) != n + 1:
            continue
        if n > 1 and not is_irreducible(base, f):
            continue
        ctx = FqnCtx(base, n, f, primitive=False, _verified=True)
        g = ctx.generator
        if all(ctx.pow(g, order // r) != ctx.one for r in distinct):
            ctx.primitive = True
            return ctx


def certify_primitive(ctx, factors):
    """Verify that the class of T generates the multiplicative group."""
    check_factorization(ctx.order, factors)
    g = ctx.generator
    return all(ctx.pow(g, ctx.order // r) != ctx.one for r in sorted(set(factors)))


# ---------------------------------------------------------------------------
# advice files

_AUTO_FACTOR_LIMIT = 2**80


def format_advice(fctx, factors=None):
    base = fctx.base
    lines = [f"{base.p} {base.e}"]
    if base.e > 1:
        lines.append(" ".join(str(c) for c in base.g))
    lines.append(str(fctx.n))
    padded = []
    for coeff in fctx.modulus:
        vec = list(coeff) + [0] * (base.e - len(coeff))
        padded.append(",".join(str(c) for c in vec))
    lines.append(" ".join(padded))
    if factors:
        lines.append("factors " + " ".join(str(r) for r in factors))
    return "\n".join(lines) + "\n"


def parse_advice(text):
    """Parse and fully verify an advice file; returns a primitive FqnCtx.

    Verification always includes irreducibility of both moduli and the
    primitivity of the class of T; the factorization of q^n - 1 is taken
    from the file or computed at desk scale.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    try:
        p_str, e_str = lines[0].split()
        p, e = int(p_str), int(e_str)
        at = 1
        if e > 1:
            g = tuple(int(tok) for tok in lines[at].split())
            at += 1
        else:
            g = None
        n = int(lines[at])
        at += 1
        coeff_tokens = lines[at].split()
        at += 1
        factors = None
        if at < len(lines):
            head, *rest = lines[at].split()
            if head != "factors":
                raise InvalidAdvice(f"unexpected trailing line {lines[at]!r}")
            factors = [int(tok) for tok in rest]
    except InvalidAdvice:
        raise
    except (ValueError, IndexError) as exc:
        raise InvalidAdvice(f"malformed advice file: {exc}") from exc

    try:
        base = FqCtx(p, e, g)
    except ValueError as exc:
        raise InvalidAdvice(f"bad base field description: {exc}") from exc

    modulus = []
    for tok in coeff_tokens:
        vec = tuple(int(v) % p for v in tok.split(","))
        if len(vec) > e:
            raise InvalidAdvice("coefficient vector longer than the extension degree")
        modulus.append(pstrip(base.base, vec))
    try:
        ctx = FqnCtx(base, n, tuple(modulus))
    except ValueError as exc:
        raise InvalidAdvice(f"bad extension modulus: {exc}") from exc

    if factors is None:
        if ctx.order > _AUTO_FACTOR_LIMIT:
            raise InvalidAdvice(
                "q^n - 1 is too large to factor here; supply a factors line"
            )
        factors = factorize(ctx.order)
    try:
        ok = certify_primitive(ctx, factors)
    except BadFactorization as exc:
        raise InvalidAdvice(f"bad factors line: {exc}") from exc
    if not ok:
        raise InvalidAdvice("the class of T does not generate the multiplicative group")
    ctx.primitive = True
    return ctx


def load_advice(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_advice(fh.read())


# ---------------------------------------------------------------------------
# linear algebra over F_q (used for subfield bases)


def fq_kernel_basis(ctx, rows, width):
    """Deterministic echelon basis of the kernel of a matrix over F_q.

    rows: list of length-`width` lists of F_q elements.  Returns kernel
    vectors (as lists) in order of their leading free column.
    """
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        pivot = None
        for i in range(r, len(mat)):
            if not ctx.is_zero(mat[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = ctx.inv(mat[r][col])
        mat[r] = [ctx.mul(v, inv) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not ctx.is_zero(mat[i][col]):
                factor = mat[i][col]
                mat[i] = [
                    ctx.sub(a, ctx.mul(factor, b)) for a, b in zip(mat[i], mat[r])
                ]
        pivots.append(col)
        r += 1
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ctx.zero] * width
        vec[fc] = ctx.one
        for ri, pc in enumerate(pivots):
            vec[pc] = ctx.neg(mat[ri][fc])
        basis.append(vec)
    return basis
