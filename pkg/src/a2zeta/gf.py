"""Finite fields GF(q) and polynomials over them.

Field elements are the integers 0..q-1.  For prime q the element i is the
residue class of i.  For q = p^k in {4, 8, 9} the integer i encodes a
polynomial over F_p in little-endian base-p digits, reduced modulo a fixed
irreducible:

    GF(4): x^2 + x + 1      GF(8): x^3 + x + 1      GF(9): x^2 + 1

This encoding doubles as the canonical element order, so every artifact
built on top of it (planes, presentations, complexes) is byte-reproducible.

Polynomials over GF(q) in the variable t are plain tuples of field elements
indexed by degree with no trailing zeros; () is the zero polynomial.  They
model the ring F_q[t] with t the uniformizer of F_q((t)).
"""

from fractions import Fraction

from .errors import UnsupportedOrder

_MODULUS = {4: (2, 2, (1, 1)), 8: (2, 3, (1, 1, 0)), 9: (3, 2, (1, 0))}


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GF:
    """Arithmetic in GF(q) for prime q or q in {4, 8, 9}."""

    def __init__(self, q):
        if is_prime(q):
            self.q, self.p, self.k = q, q, 1
            self._mul = None
        elif q in _MODULUS:
            self.q = q
            self.p, self.k, mod = _MODULUS[q]
            self._build_tables(mod)
        else:
            raise UnsupportedOrder(f"q={q} is not a prime or one of 4, 8, 9")

    def _build_tables(self, mod):
        p, k, q = self.p, self.k, self.q
        # x^k = -(mod) in the quotient; reduce products digit by digit.
        def digits(i):
            return [(i // p**j) % p for j in range(k)]

        def undig(ds):
            return sum(d * p**j for j, d in enumerate(ds))

        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                da, db = digits(a), digits(b)
                self._add[a][b] = undig([(x + y) % p for x, y in zip(da, db)])
                prod = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for i in range(2 * k - 2, k - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j, m in enumerate(mod):
                            prod[i - k + j] = (prod[i - k + j] - c * m) % p
                self._mul[a][b] = undig(prod[:k])
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def add(self, a, b):
        if self._mul is None:
            return (a + b) % self.q
        return self._add[a][b]

    def neg(self, a):
        if self._mul is None:
            return (-a) % self.q
        return self._add[a].index(0)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul is None:
            return (a * b) % self.q
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        if self._mul is None:
            return pow(a, self.q - 2, self.q)
        return self._inv[a]

    def elements(self):
        return range(self.q)


# ----------------------------------------------------------------------
# polynomials over GF(q), tuples indexed by degree


def ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = F.add(out[i], x)
    return ptrim(out)


def pneg(F, a):
    return tuple(F.neg(x) for x in a)


def psub(F, a, b):
    return padd(F, a, pneg(F, b))


def pmul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pshift(a, k):
    """Multiply by t^k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def pval(a):
    """t-adic valuation; None for the zero polynomial."""
    for i, x in enumerate(a):
        if x:
            return i
    return None


def pdiv_tpow(a, k):
    """Exact division by t^k; caller guarantees val(a) >= k."""
    if not a:
        return ()
    assert all(x == 0 for x in a[:k])
    return ptrim(a[k:])


def pmod_tpow(a, k):
    return ptrim(a[:k])


def punit_inverse(F, u, n):
    """Inverse of a unit u (u[0] != 0) in F_q[[t]] modulo t^n."""
    inv0 = F.inv(u[0])
    out = [inv0] + [0] * (n - 1)
    for i in range(1, n):
        s = 0
        for j in range(1, min(i, len(u) - 1) + 1):
            s = F.add(s, F.mul(u[j], out[i - j]))
        out[i] = F.neg(F.mul(inv0, s))
    return ptrim(out)


def pconst(c):
    return (c,) if c else ()


def pfloordiv_tpow(a, k):
    """Coefficients of t^k and above, i.e. a div t^k."""
    return ptrim(a[k:])


def parse_poly(F, text):
    """Parse a polynomial in t such as '1+t^2+2t' over GF(q)."""
    text = text.replace(" ", "").replace("-", "+-")
    coeffs = {}
    for term in text.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if "t" in term:
            head, _, tail = term.partition("t")
            c = int(head) if head else 1
            e = int(tail[1:]) if tail.startswith("^") else (1 if not tail else int(tail))
        else:
            c, e = int(term), 0
        c %= F.q  # literal coefficients are element ids
        if neg:
            c = F.neg(c)
        coeffs[e] = F.add(coeffs.get(e, 0), c)
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return ptrim(out)


def format_poly(a):
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}t" if c != 1 else "t")
        else:
            terms.append(f"{c}t^{i}" if c != 1 else f"t^{i}")
    return "+".join(terms)


def newton_slopes(vals):
    """Root valuations of a polynomial from the valuations of its coefficients.

    ``vals`` maps degree i to the valuation of coefficient a_i (degrees with
    zero coefficient omitted).  Returns the list of root valuations, smallest
    first, as Fractions: each lower-hull segment from (i1,v1) to (i2,v2)
    contributes i2-i1 roots of valuation (v1-v2)/(i2-i1).
    """
    pts = sorted(vals.items())
    hull = [pts[0]]
    for p in pts[1:]:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y1 - y2, x2 - x1)] * (x2 - x1))
    return sorted(slopes)
