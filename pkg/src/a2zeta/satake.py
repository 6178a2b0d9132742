"""Symmetric-function verification of the spherical transform computations.

SymPoly models the ring of Laurent polynomials in z1, z2, z3 modulo
z1 z2 z3 = 1: a monomial z1^a z2^b z3^c is stored under the exponent key
(a - c, b - c).  The transform identities under test are finite families of
coefficient equalities at a concrete integer q, decidable exactly with
Fraction coefficients.

One display in the source derivation carries a sign slip: the constant side
of the degree-aggregation identity must be -(q-1)(q^2-1) u^3/(1-u^3) for
the chain to match its own logarithmic-derivative form (the check here
recomputes both sides independently, which is how the slip shows up).
"""

from fractions import Fraction


class SymPoly:
    """Finitely supported Fraction combination of monomial classes."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, val in terms.items():
                v = Fraction(val)
                if v:
                    self.terms[key] = v

    @classmethod
    def monomial(cls, e1, e2, e3, coeff=1):
        return cls({(e1 - e3, e2 - e3): Fraction(coeff)})

    @classmethod
    def scalar(cls, c):
        return cls({(0, 0): Fraction(c)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - v
        return SymPoly(out)

    def __neg__(self):
        return SymPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return SymPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymPoly) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def is_symmetric(self):
        """Invariance under all permutations of (z1, z2, z3)."""
        for perm in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            moved = {}
            for (i, j), v in self.terms.items():
                e = (i, j, 0)
                p = (e[perm[0]], e[perm[1]], e[perm[2]])
                k = (p[0] - p[2], p[1] - p[2])
                moved[k] = moved.get(k, Fraction(0)) + v
            if {k: v for k, v in moved.items() if v} != self.terms:
                return False
        return True

    def __repr__(self):
        if not self.terms:
            return "SymPoly(0)"
        parts = [f"{v}*z^{k}" for k, v in sorted(self.terms.items())]
        return "SymPoly(" + " + ".join(parts) + ")"


ZERO = SymPoly()
ONE = SymPoly.scalar(1)


def sigma(k, kind):
    """The three symmetric degree-k sums.

    kind 1: z1^k + z2^k + z3^k
    kind 2: sum over 1 <= a <= k-1 of z1^a z2^(k-a) + z2^a z3^(k-a) + z3^a z1^(k-a)
    kind 3: sum over a, b, c >= 1, a+b+c = k of z1^a z2^b z3^c
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out = ZERO
    if kind == 1:
        for e in ((k, 0, 0), (0, k, 0), (0, 0, k)):
            out = out + SymPoly.monomial(*e)
    elif kind == 2:
        for a in range(1, k):
            for e in ((a, k - a, 0), (0, a, k - a), (k - a, 0, a)):
                out = out + SymPoly.monomial(*e)
    elif kind == 3:
        for a in range(1, k - 1):
            for b in range(1, k - a):
                c = k - a - b
                if c >= 1:
                    out = out + SymPoly.monomial(a, b, c)
    else:
        raise ValueError("kind must be 1, 2 or 3")
    return out


def transform_a1(q):
    """Image of the degree-1 vertex operator: q(z1 + z2 + z3)."""
    return q * sigma(1, 1)


def transform_a2(q):
    """Image of the degree-2 vertex operator: q(z1 z2 + z2 z3 + z3 z1)."""
    return q * sigma(2, 2)


def transform_Tk(q, k):
    """Image of the degree-k aggregate: q^k (s_k1 + s_k2 + (q^3-1)/q^3 s_k3)."""
    return (q**k) * (
        sigma(k, 1) + sigma(k, 2) + Fraction(q**3 - 1, q**3) * sigma(k, 3)
    )


def transform_Tk0(q, k):
    """Image of the degree-k type-1 operator.

    q^k (s_k1 + (q-1)/q s_k2 + (q-1)^2/q^2 s_k3).
    """
    return (q**k) * (
        sigma(k, 1)
        + Fraction(q - 1, q) * sigma(k, 2)
        + Fraction((q - 1) ** 2, q * q) * sigma(k, 3)
    )


# ----------------------------------------------------------------------
# series with SymPoly coefficients (plain lists, index = degree)


def series_mul(a, b, order):
    out = [ZERO] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out

def series_sub(a, b):
    n = min(len(a), len(b))
    return [x - y for x, y in zip(a[:n], b[:n])]


def series_inverse(a, order):
    inv0 = a[0]
    assert inv0 == ONE, "series inversion implemented for constant term 1"
    out = [ONE] + [ZERO] * order
    for k in range(1, order + 1):
        acc = ZERO
        for j in range(1, k + 1):
            if j < len(a) and not a[j].is_zero():
                acc = acc + a[j] * out[k - j]
        out[k] = -acc
    return out


def geometric_u3(order, ratio=1):
    """1/(1 - ratio*u^3) as a scalar SymPoly series."""
    out = [ZERO] * (order + 1)
    acc = 1
    for k in range(0, order + 1, 3):
        out[k] = SymPoly.scalar(acc)
        acc *= ratio
    return out


def verify_sigma3_identity(order):
    """sum s_k3 u^k == u^3/(1-u^3) (1 + sum_{k>=1}(s_k1 + s_k2) u^k), to order."""
    residuals = []
    for K in range(order + 1):
        lhs = sigma(K, 3) if K >= 1 else ZERO
        rhs = ZERO
        j = 3
        while j <= K:
            i = K - j
            if i == 0:
                rhs = rhs + ONE
            else:
                rhs = rhs + sigma(i, 1) + sigma(i, 2)
            j += 3
        residuals.append(lhs - rhs)
    return all(r.is_zero() for r in residuals), residuals


def verify_recursion_42(q, order):
    """The degree-aggregation recursion at a concrete q, checked three ways.

    A:  q sum_k Tk0 u^k  -  (q-1) (sum_k Tk u^k)(1-q^2 u^3)/(1-u^3)
    B:  sum_k s_k1 (qu)^k  -  (q+1)(q-1)^2 u^3/(1-u^3)
    C:  u d/du log[(1-u^3)^r / prod_i (1 - q z_i u)],  3r = (q+1)(q-1)^2

    A == B == C termwise to the given order; returns (passed, residuals)
    with residuals the termwise A-C differences.
    """
    n = order
    tk0 = [ZERO] + [transform_Tk0(q, k) for k in range(1, n + 1)]
    tk = [ZERO] + [transform_Tk(q, k) for k in range(1, n + 1)]
    one_minus_q2u3 = [ONE, ZERO, ZERO, SymPoly.scalar(-q * q)] + [ZERO] * max(0, n - 3)
    a = series_sub(
        [q * x for x in tk0],
        series_mul(
            series_mul([(q - 1) * x for x in tk], one_minus_q2u3, n),
            geometric_u3(n),
            n,
        ),
    )

    b = [ZERO] * (n + 1)
    for k in range(1, n + 1):
        b[k] = (q**k) * sigma(k, 1)
    three_r = (q + 1) * (q - 1) ** 2
    for k in range(3, n + 1, 3):
        b[k] = b[k] - SymPoly.scalar(three_r)

    # C: expand prod (1 - q z_i u) = 1 - qA1-image u + q^2 e2 u^2 - q^3 u^3
    p = [
        ONE,
        -q * sigma(1, 1),
        (q * q) * sigma(2, 2),
        SymPoly.scalar(-(q**3)),
    ] + [ZERO] * max(0, n - 3)
    dp = [((i + 1) * p[i + 1]) for i in range(len(p) - 1)]
    u_dp = [ZERO] + dp[:n]
    c_prod = series_mul(u_dp, series_inverse(p, n), n)  # u P'/P
    c = [-x for x in c_prod]
    for k in range(3, n + 1, 3):
        c[k] = c[k] - SymPoly.scalar(three_r)

    res_ab = series_sub(a, b)
    res_ac = series_sub(a, c)
    passed = all(r.is_zero() for r in res_ab) and all(r.is_zero() for r in res_ac)
    return passed, res_ac
