"""Dense univariate polynomials over an exact field, plus resultants.

Coefficients ascend; the zero polynomial has an empty coefficient tuple.
The Sylvester resultant runs fraction-free Bareiss elimination so it also
works when the entries are themselves polynomials (exact division only).
"""

from fractions import Fraction

from .numtheory import factorize


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce_other(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(self.field, other)

    def __add__(self, other):
        other = self._coerce_other(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.const(self.field, self.field.one)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if self.is_constant():
            try:
                return self.constant_value() == self.field.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def scale(self, c):
        c = self.field.coerce(c)
        if not c:
            return UniPoly.zero(self.field)
        return UniPoly(self.field, tuple(c * v for v in self.coeffs))

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == self.field.one:
            return self
        return self.scale(self.field.one / lc)

    def divrem(self, other):
        """Quotient and remainder; the divisor must be nonzero."""
        other = self._coerce_other(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        r = list(self.coeffs)
        d = other.degree()
        lc = other.coeffs[-1]
        if len(r) - 1 < d:
            return UniPoly.zero(field), self
        q = [field.zero] * (len(r) - d)
        for i in range(len(r) - 1, d - 1, -1):
            ci = r[i]
            if not ci:
                continue
            f = ci / lc
            q[i - d] = f
            for j, cb in enumerate(other.coeffs):
                r[i - d + j] = r[i - d + j] - f * cb
        return UniPoly(field, q), UniPoly(field, r[:d])

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, self._coerce_other(other)
        while not b.is_zero():
            a, b = b, a.divrem(b)[1]
        return a.monic()

    def ext_gcd(self, other):
        """(d, s, t) with s*self + t*other = d, d monic."""
        field = self.field
        other = self._coerce_other(other)
        r0, r1 = self, other
        s0, s1 = UniPoly.const(field, field.one), UniPoly.zero(field)
        t0, t1 = UniPoly.zero(field), UniPoly.const(field, field.one)
        while not r1.is_zero():
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lc = r0.leading()
        inv = field.one / lc
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def lcm(self, other):
        other = self._coerce_other(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field)
        g = self.gcd(other)
        return (self * other).divrem(g)[0].monic()

    def compose(self, inner):
        """self(inner(x)) by Horner."""
        inner = self._coerce_other(inner)
        field = self.field
        out = UniPoly.zero(field)
        for c in reversed(self.coeffs):
            out = out * inner + UniPoly.const(field, c)
        return out

    def evaluate(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_compose(self, a, b):
        """self(a*x + b) for field elements a, b."""
        return self.compose(UniPoly(self.field, (b, a)))

    def map_coefficients(self, fn, field):
        return UniPoly(field, tuple(fn(c) for c in self.coeffs))

    def __repr__(self):
        from .render import render_unipoly
        return f"UniPoly({render_unipoly(self, 'x')})"


def _exact_div(a, b):
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return a / b


def bareiss_det(rows, zero, one):
    """Fraction-free determinant over an integral domain with exact division.

    Mutates a copy of rows; entries need -, *, equality with zero via
    truthiness, and either / (fields) or exact_div (polynomial rings).
    """
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            pivot = None
            for i in range(k + 1, n):
                if m[i][k]:
                    pivot = i
                    break
            if pivot is None:
                return zero
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pkk - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = zero
        prev = pkk
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_resultant_lists(fc, gc, zero, one):
    """Resultant of two coefficient lists (ascending) over a domain."""
    while fc and not fc[-1]:
        fc = fc[:-1]
    while gc and not gc[-1]:
        gc = gc[:-1]
    if not fc or not gc:
        raise ValueError("resultant of the zero polynomial")
    m = len(fc) - 1
    n = len(gc) - 1
    if m == 0 and n == 0:
        return one
    size = m + n
    rows = []
    fdesc = list(reversed(fc))
    gdesc = list(reversed(gc))
    for i in range(n):
        rows.append([zero] * i + fdesc + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + gdesc + [zero] * (size - i - n - 1))
    return bareiss_det(rows, zero, one)


def resultant(f: UniPoly, g: UniPoly):
    """Sylvester resultant of two univariate polynomials over a field."""
    return sylvester_resultant_lists(list(f.coeffs), list(g.coeffs),
                                     f.field.zero, f.field.one)


def rational_roots(f: UniPoly):
    """All rational roots of a polynomial over the rationals, sorted.

    Rational root theorem on the cleared-denominator integer polynomial.
    """
    if f.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    if f.degree() == 0:
        return []
    den = 1
    for c in f.coeffs:
        c = Fraction(c)
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    roots = set()
    k = 0
    while ints[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        ints = ints[k:]
    if len(ints) > 1:
        a0 = abs(ints[0])
        ad = abs(ints[-1])
        for p in _divisors(a0):
            for q in _divisors(ad):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in roots:
                        continue
                    if _eval_int_poly(ints, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return []
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(set(divs))


def _eval_int_poly(ints, x):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


class RationalFunction:
    """Reduced univariate fraction with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den=None):
        field = num.field
        if den is None:
            den = UniPoly.const(field, field.one)
        elif not isinstance(den, UniPoly):
            den = UniPoly.const(field, den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.divrem(g)[0]
            den = den.divrem(g)[0]
        lc = den.leading()
        if lc != field.one:
            inv = field.one / lc
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    def is_polynomial(self):
        return self.den.degree() == 0

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, UniPoly):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UniPoly):
            return RationalFunction(other)
        return RationalFunction(UniPoly.const(self.field, other))

    def compose(self, inner: UniPoly):
        """Substitute a polynomial for the variable.

        Raises when the denominator collapses to zero (a substitution pole).
        """
        den = self.den.compose(inner)
        if den.is_zero():
            raise ZeroDivisionError("substitution pole")
        return RationalFunction(self.num.compose(inner), den)

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError("evaluation pole")
        return self.num.evaluate(x) / d

    def __repr__(self):
        from .render import render_rational
        return f"RationalFunction({render_rational(self, 'x')})"
