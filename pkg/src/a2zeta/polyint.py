"""Exact polynomial linear algebra over the integers.

IntPoly is a tuple of arbitrary-precision integer coefficients indexed by
degree, with no trailing zeros (canonical form; () is zero).  PolyMatrix
determinants are computed two ways: evaluation at the fixed integer points
0, 1, -1, 2, -2, ... followed by exact interpolation, and fraction-free
Bareiss elimination directly over Z[u].  Dimensions up to 12 always run
both and cross-check.  Series carry exact Fraction coefficients to a
recorded truncation order.
"""

from fractions import Fraction

from .errors import A2ZetaError


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # -- constructors

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls((0,) * degree + (c,))

    # -- basic structure

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other):
        """Exact polynomial division; raises if the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if self.is_zero():
            return IntPoly()
        if self.degree < d:
            raise A2ZetaError("inexact polynomial division")
        q = [0] * (self.degree - d + 1)
        for i in range(self.degree - d, -1, -1):
            c = rem[i + d]
            if c % lead:
                raise A2ZetaError("inexact polynomial division")
            q[i] = c // lead
            if q[i]:
                for j in range(d + 1):
                    rem[i + j] -= q[i] * other.coeffs[j]
        if any(rem):
            raise A2ZetaError("inexact polynomial division")
        return IntPoly(q)

    def divides(self, other):
        """True if self divides other exactly (over Q, checked over Z)."""
        try:
            other.divexact(self)
            return True
        except A2ZetaError:
            return False

    # -- calculus and substitution

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_int(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, k):
        """p(u) -> p(u^k)."""
        if self.is_zero():
            return IntPoly()
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    def substitute_neg(self):
        """p(u) -> p(-u)."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    # -- gcd over Z (primitive PRS)

    def content(self):
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self):
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs])

    def gcd(self, other):
        a, b = self.primitive(), other.primitive()
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        while not b.is_zero():
            # pseudo-remainder, then strip content
            lead = b.coeffs[-1]
            shift = a.degree - b.degree
            if shift < 0:
                a, b = b, a
                continue
            r = a * (lead ** (shift + 1))
            q_deg = r.degree - b.degree
            rem = list(r.coeffs)
            for i in range(q_deg, -1, -1):
                c = rem[i + b.degree]
                if c == 0:
                    continue
                f = c // lead
                assert f * lead == c
                for j in range(b.degree + 1):
                    rem[i + j] -= f * b.coeffs[j]
            a, b = b, IntPoly(rem).primitive()
        if a.coeffs and a.coeffs[-1] < 0:
            a = -a
        return a

    def squarefree_decomposition(self):
        """Yun's algorithm: [(factor, multiplicity)] with factors squarefree.

        Factors are primitive and only determined up to sign, which is all
        root finding needs.  Exact integer arithmetic throughout.
        """
        p = self.primitive()
        if p.degree < 1:
            return []
        g = p.gcd(p.derivative())
        if g.degree < 1:
            return [(p, 1)]
        c = p.divexact(g)
        d = p.derivative().divexact(g) - c.derivative()
        out = []
        i = 1
        while c.degree > 0:
            a = c.gcd(d)
            if a.degree > 0:
                out.append((a, i))
            c = c.divexact(a) if not a.is_zero() else c
            d = d.divexact(a) - c.derivative()
            i += 1
        return out

    # -- formatting

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def format(self):
        """The line format 'poly <deg>: c0 c1 ... cdeg'."""
        if self.is_zero():
            return "poly -1:"
        body = " ".join(str(c) for c in self.coeffs)
        return f"poly {self.degree}: {body}"


def parse_poly_line(text):
    head, _, body = text.partition(":")
    if not head.startswith("poly"):
        raise A2ZetaError(f"not a poly line: {text!r}")
    coeffs = [int(tok) for tok in body.split()]
    return IntPoly(coeffs)


ZERO = IntPoly()
ONE = IntPoly.const(1)
U = IntPoly.monomial(1)


# ----------------------------------------------------------------------
# integer and polynomial determinants


def bareiss_det_int(rows):
    """Exact determinant of a square integer matrix (fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pkk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


class PolyMatrix:
    """Square matrix with IntPoly entries."""

    def __init__(self, entries):
        self.entries = [[e if isinstance(e, IntPoly) else IntPoly.const(e) for e in row] for row in entries]
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise A2ZetaError("PolyMatrix must be square")
        self.n = n

    @classmethod
    def from_int_pencil(cls, *terms):
        """Sum of degree-shifted integer matrices: terms are (matrix, degree, scale)."""
        n = len(terms[0][0])
        entries = [[IntPoly() for _ in range(n)] for _ in range(n)]
        for mat, deg, scale in terms:
            for i in range(n):
                for j in range(n):
                    v = mat[i][j] * scale
                    if v:
                        entries[i][j] = entries[i][j] + IntPoly.monomial(deg, v)
        return cls(entries)

    def max_entry_degree(self):
        return max((e.degree for row in self.entries for e in row), default=-1)

    def eval_int(self, x):
        return [[e.eval_int(x) for e in row] for row in self.entries]

    def det_interpolation(self, jobs=1):
        d = max(self.max_entry_degree(), 0)
        npts = self.n * d + 1
        xs = evaluation_points(npts)
        evaluated = [self.eval_int(x) for x in xs]
        if jobs > 1 and self.n >= 16:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                ys = list(pool.map(bareiss_det_int, evaluated))
        else:
            ys = [bareiss_det_int(m) for m in evaluated]
        return interpolate_integer(xs, ys)

    def det_fraction_free(self):
        """Bareiss elimination directly over Z[u]."""
        n = self.n
        if n == 0:
            return ONE
        m = [row[:] for row in self.entries]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero():
                pivot = next(
                    (i for i in range(k + 1, n) if not m[i][k].is_zero()), None
                )
                if pivot is None:
                    return ZERO
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
                m[i][k] = ZERO
            prev = m[k][k]
        return m[n - 1][n - 1] * sign


def evaluation_points(npts):
    """The fixed sequence 0, 1, -1, 2, -2, ..."""
    pts = [0]
    k = 1
    while len(pts) < npts:
        pts.append(k)
        if len(pts) < npts:
            pts.append(-k)
        k += 1
    return pts[:npts]


def interpolate_integer(xs, ys):
    """Exact interpolation through integer points; result must be integral."""
    # Newton divided differences over Fractions, then expand.
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    poly[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly <- poly * (u - xs[i]) + coef[i]
        for j in range(deg, -1, -1):
            poly[j + 1] += poly[j]
            poly[j] *= -xs[i]
        deg += 1
        poly[0] += coef[i]
    out = []
    for c in poly:
        if c.denominator != 1:
            raise A2ZetaError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return IntPoly(out)


CROSSCHECK_DIM = 12


def det_poly(matrix, jobs=1):
    """Exact determinant of a PolyMatrix.

    Uses evaluation plus interpolation; dimensions up to 12 also run
    fraction-free elimination and assert agreement.  jobs > 1 evaluates
    the points on a process pool; the interpolation is a deterministic
    reduce, so the result is independent of scheduling.
    """
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix(matrix)
    det = matrix.det_interpolation(jobs=jobs)
    if matrix.n <= CROSSCHECK_DIM:
        other = matrix.det_fraction_free()
        if det != other:
            raise A2ZetaError("determinant cross-check failed")
    return det


# ----------------------------------------------------------------------
# rational functions and series


class RationalFunction:
    """A reduced quotient of integer polynomials with den(0) = 1."""

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g != ONE:
            num = num.divexact(g)
            den = den.divexact(g)
        # also cancel integer content
        from math import gcd as igcd

        c = igcd(num.content(), den.content())
        if c > 1:
            num = IntPoly([x // c for x in num.coeffs])
            den = IntPoly([x // c for x in den.coeffs])
        if den[0] == -1:
            num, den = -num, -den
        if den[0] != 1:
            raise A2ZetaError(f"denominator constant term is {den[0]}, not 1")
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        return RationalFunction(self.num * other.den, self.den * other.num)

    def substitute_power(self, k):
        return RationalFunction(
            self.num.substitute_power(k), self.den.substitute_power(k)
        )

    def substitute_neg(self):
        return RationalFunction(self.num.substitute_neg(), self.den.substitute_neg())

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


class Series:
    """Truncated power series with exact Fraction coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    @classmethod
    def from_poly(cls, p, order):
        return cls([Fraction(c) for c in p.coeffs], order)

    def __eq__(self, other):
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __add__(self, other):
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self):
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has no inverse: zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            s = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -inv0 * s
        return Series(out, self.order)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def integer_coeffs(self):
        """Coefficients as ints; raises if any is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise A2ZetaError(f"non-integer series coefficient {c}")
            out.append(int(c))
        return out

    def __repr__(self):
        return f"Series({self.coeffs}, order={self.order})"


def poly_log_derivative(p, order):
    """u d/du log p as a Series, requiring p(0) != 0."""
    if p[0] == 0:
        raise A2ZetaError("log derivative needs a nonzero constant term")
    ps = Series.from_poly(p, order)
    dp = Series.from_poly(p.derivative(), order)
    u = Series([0, 1], order)
    return u * dp * ps.inverse()


def series_log_derivative(rf, order):
    """u d/du log(num/den) as a Series with exact coefficients."""
    return poly_log_derivative(rf.num, order) - poly_log_derivative(rf.den, order)


def rational_series(rf, order):
    """Power series expansion of a rational function."""
    num = Series.from_poly(rf.num, order)
    den = Series.from_poly(rf.den, order)
    return num * den.inverse()


def newton_power_sums(p, order):
    """Power sums Tr X^n, 1 <= n <= order, from p = det(I - X u).

    The coefficient of u^n in -u p'/p is the n-th power sum; p must have
    constant term 1.
    """
    if p[0] != 1:
        raise A2ZetaError("newton_power_sums expects constant term 1")
    series = poly_log_derivative(p, order)
    return [-c for c in series.integer_coeffs()][1:]
