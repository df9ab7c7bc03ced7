"""Number field towers of height at most two and their elements.

A tower is QQ, QQ(a) or QQ(g)(a): each level adjoins a root of a monic
irreducible polynomial over the level below.  Elements are coefficient
vectors over the base level, reduced against the defining polynomial.
Irreducibility, roots inside a field, primitive elements and subfield
membership are all decided exactly, using linear algebra and Groebner
bases over the rationals (no polynomial factorization routines).
"""

from fractions import Fraction

from . import linalg
from .groebner import rational_solutions
from .mpoly import MultiPoly
from .upoly import UniPoly, rational_roots


class RationalField:
    """The rationals; coefficients are fractions.Fraction."""

    zero = Fraction(0)
    one = Fraction(1)
    degree = 1
    height = 0

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, FieldElement):
            raise TypeError("field element does not embed into QQ")
        return Fraction(v)

    def qq_dim(self):
        return 1

    def flatten(self, x):
        return [self.coerce(x)]

    def unflatten(self, vec):
        return vec[0]

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ReduciblePolynomialError(ValueError):
    """Raised when a would-be minimal polynomial factors; carries a witness."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(
            f"reducible minimal polynomial, witness factor {factor!r}")


class FieldTower:
    """An extension field base(name) defined by a monic minimal polynomial."""

    __slots__ = ("base", "name", "minpoly", "degree", "height", "zero",
                 "one", "_gen_powers")

    def __init__(self, base, name, minpoly: UniPoly):
        if not minpoly.is_monic():
            raise ValueError("defining polynomial must be monic")
        if minpoly.degree() < 2:
            raise ValueError("extension degree must be at least 2")
        self.base = base
        self.name = name
        self.minpoly = minpoly
        self.degree = minpoly.degree()
        self.height = base.height + 1
        self.zero = FieldElement(self, (base.zero,) * self.degree)
        one = [base.zero] * self.degree
        one[0] = base.one
        self.one = FieldElement(self, tuple(one))
        self._gen_powers = None

    def gen(self):
        v = [self.base.zero] * self.degree
        v[1] = self.base.one
        return FieldElement(self, tuple(v))

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field is self:
                return v
            if v.field is self.base:
                vec = [self.base.zero] * self.degree
                vec[0] = v
                return FieldElement(self, tuple(vec))
            raise TypeError("element of an unrelated field")
        c = self.base.coerce(v)
        vec = [self.base.zero] * self.degree
        vec[0] = c
        return FieldElement(self, tuple(vec))

    def element(self, coeffs):
        base = self.base
        cs = [base.coerce(c) for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError("coefficient vector too long")
        cs += [base.zero] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def _power_table(self):
        # gen^d .. gen^(2d-2) reduced, used by multiplication
        if self._gen_powers is None:
            d = self.degree
            base = self.base
            mp = self.minpoly.coeffs
            rows = []
            cur = [-c for c in mp[:-1]]
            rows.append(tuple(cur))
            for _ in range(d - 2):
                nxt = [base.zero] + cur[:-1]
                top = cur[-1]
                if top:
                    for i in range(d):
                        nxt[i] = nxt[i] - top * mp[i]
                cur = nxt
                rows.append(tuple(cur))
            self._gen_powers = rows
        return self._gen_powers

    def qq_dim(self):
        return self.degree * self.base.qq_dim()

    def flatten(self, x):
        """Coordinates over QQ; index k*r+j is gen^k times base-basis j."""
        x = self.coerce(x)
        out = []
        for c in x.coeffs:
            out.extend(self.base.flatten(c))
        return out

    def unflatten(self, vec):
        r = self.base.qq_dim()
        coeffs = []
        for k in range(self.degree):
            coeffs.append(self.base.unflatten(vec[k * r:(k + 1) * r]))
        return FieldElement(self, tuple(coeffs))

    def qq_basis(self):
        dim = self.qq_dim()
        out = []
        for i in range(dim):
            vec = [Fraction(0)] * dim
            vec[i] = Fraction(1)
            out.append(self.unflatten(vec))
        return out

    def __repr__(self):
        return f"{self.base!r}({self.name})"


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement) and other.field is self.field:
            return self.coeffs == other.coeffs
        try:
            other = self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _other(self, v):
        return self.field.coerce(v)

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, tuple(a + b for a, b in
                                              zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, tuple(a - b for a, b in
                                              zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        f = self.field
        base = f.base
        d = f.degree
        a, b = self.coeffs, o.coeffs
        prod = [base.zero] * (2 * d - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    prod[i + j] = prod[i + j] + ca * cb
        out = list(prod[:d])
        table = f._power_table()
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = table[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] = out[i] + c * row[i]
        return FieldElement(f, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        base = f.base
        num = UniPoly(base, self.coeffs)
        d, s, _ = num.ext_gcd(f.minpoly)
        if d.degree() != 0:
            raise ArithmeticError("defining polynomial is not irreducible")
        inv = s.scale(base.one / d.constant_value())
        return f.element(inv.coeffs)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        c = self.coeffs[0]
        if isinstance(c, FieldElement):
            return c.rational_value()
        return c

    def canonical_key(self):
        """Total order key: lexicographic on the flattened QQ coordinates,
        each fraction compared as its (numerator, denominator) pair."""
        flat = self.field.flatten(self)
        return tuple((c.numerator, c.denominator) for c in flat)

    def __repr__(self):
        from .render import render_field_element
        return f"FieldElement({render_field_element(self)})"


def canonical_key(x):
    if isinstance(x, FieldElement):
        return x.canonical_key()
    q = Fraction(x)
    return ((q.numerator, q.denominator),)


# ---------------------------------------------------------------------------
# irreducibility and extension construction


def make_extension(base, minpoly: UniPoly, name=None):
    """Build base(name) after verifying the defining polynomial is
    irreducible over base; raises ReduciblePolynomialError with a witness
    factor otherwise."""
    minpoly = minpoly.monic()
    if minpoly.degree() < 1:
        raise ValueError("defining polynomial must be nonconstant")
    ok, factor = is_irreducible(minpoly)
    if not ok:
        raise ReduciblePolynomialError(factor)
    if name is None:
        name = "a" if base is QQ or base.height == 0 else "b"
    return FieldTower(base, name, minpoly)


def is_irreducible(f: UniPoly):
    """Exact irreducibility over the coefficient field of f.

    Returns (True, None) or (False, witness_factor).  Linear factors are
    found through roots in the field; higher splits through monic
    coefficient matching solved over QQ.
    """
    d = f.degree()
    if d < 1:
        raise ValueError("constants are neither reducible nor irreducible")
    if d == 1:
        return True, None
    f = f.monic()
    field = f.field
    roots = roots_in_field(f, field)
    if roots:
        root = roots[0]
        x = UniPoly(field, (field.zero, field.one))
        return False, x - UniPoly.const(field, root)
    for d1 in range(2, d // 2 + 1):
        factor = _find_split(f, d1)
        if factor is not None:
            return False, factor
    return True, None


def _find_split(f: UniPoly, d1):
    """A monic degree-d1 factor of monic f, or None.

    Unknown factor coefficients are written in QQ coordinates of the
    coefficient field and matched against f, giving a zero-dimensional
    system over QQ.
    """
    field = f.field
    d = f.degree()
    d2 = d - d1
    sym = SymbolicElements(field, (d1 + d2) * field_qq_dim(field))
    gvec = [sym.unknown(k) for k in range(d1)] + [sym.one_elem()]
    hvec = [sym.unknown(d1 + k) for k in range(d2)] + [sym.one_elem()]
    prod = [sym.zero_elem() for _ in range(d + 1)]
    for i, gi in enumerate(gvec):
        for j, hj in enumerate(hvec):
            prod[i + j] = sym.add(prod[i + j], sym.mul(gi, hj))
    eqs = []
    for k in range(d + 1):
        target = sym.constant(f[k])
        diff = sym.sub(prod[k], target)
        eqs.extend(p for p in diff if not p.is_zero())
    sols = rational_solutions(eqs, sym.nvars)
    if not sols:
        return None
    sol = sols[0]
    coeffs = []
    for k in range(d1):
        coeffs.append(sym.element_from_solution(sol, k))
    coeffs.append(field.one)
    return UniPoly(field, coeffs)


def field_qq_dim(field):
    return 1 if isinstance(field, RationalField) else field.qq_dim()


class SymbolicElements:
    """Field elements whose QQ coordinates are polynomial unknowns.

    An element is a list of MultiPoly over QQ, one per QQ-basis vector of
    the field; multiplication goes through precomputed structure constants.
    """

    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars
        self.dim = field_qq_dim(field)
        if isinstance(field, RationalField):
            self._table = [[[Fraction(1)]]]
            self._basis = [Fraction(1)]
        else:
            self._basis = field.qq_basis()
            self._table = [
                [field.flatten(bi * bj) for bj in self._basis]
                for bi in self._basis
            ]

    def zero_elem(self):
        return [MultiPoly.zero(QQ, self.nvars) for _ in range(self.dim)]

    def one_elem(self):
        out = self.zero_elem()
        out[0] = MultiPoly.const(QQ, self.nvars, 1)
        return out

    def constant(self, x):
        if isinstance(self.field, RationalField):
            flat = [Fraction(x)]
        else:
            flat = self.field.flatten(self.field.coerce(x))
        return [MultiPoly.const(QQ, self.nvars, c) for c in flat]

    def unknown(self, start_index):
        """Element whose coordinates are fresh variables starting there."""
        out = []
        for i in range(self.dim):
            out.append(MultiPoly.var(QQ, self.nvars,
                                     start_index * self.dim + i))
        return out

    def add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def sub(self, u, v):
        return [a - b for a, b in zip(u, v)]

    def mul(self, u, v):
        out = [MultiPoly.zero(QQ, self.nvars) for _ in range(self.dim)]
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                uv = ui * vj
                row = self._table[i][j]
                for k in range(self.dim):
                    if row[k]:
                        out[k] = out[k] + uv.scale(row[k])
        return out

    def eval_unipoly(self, f: UniPoly, u):
        acc = self.constant(f[f.degree()])
        for k in range(f.degree() - 1, -1, -1):
            acc = self.add(self.mul(acc, u), self.constant(f[k]))
        return acc

    def element_from_solution(self, sol, slot):
        """Rebuild the field element in the given unknown slot from a
        rational solution vector."""
        vec = [sol[slot * self.dim + i] for i in range(self.dim)]
        if isinstance(self.field, RationalField):
            return vec[0]
        return self.field.unflatten(vec)


# ---------------------------------------------------------------------------
# roots inside a field


def roots_in_field(f: UniPoly, field):
    """All roots of f lying in the given field, canonically sorted.

    Over QQ this is the rational root theorem; over an extension the root
    is written in unknown QQ coordinates and the resulting restriction of
    scalars system is solved over QQ.
    """
    if f.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    if isinstance(field, RationalField):
        g = f.map_coefficients(lambda c: Fraction(c), QQ)
        return rational_roots(g)
    f = _coerce_unipoly(f, field)
    d = f.degree()
    if d <= 0:
        return []
    if d == 1:
        return [-f[0] / f[1]]
    dim = field.qq_dim()
    sym = SymbolicElements(field, dim)
    u = [MultiPoly.var(QQ, dim, i) for i in range(dim)]
    val = sym.eval_unipoly(f, u)
    eqs = [p for p in val if not p.is_zero()]
    sols = rational_solutions(eqs, dim)
    roots = [field.unflatten(list(sol)) for sol in sols]
    roots.sort(key=lambda x: x.canonical_key())
    return roots


def _coerce_unipoly(f: UniPoly, field):
    if f.field is field:
        return f
    return UniPoly(field, tuple(field.coerce(c) for c in f.coeffs))


# ---------------------------------------------------------------------------
# subfields of a height-one field


def min_poly_over_q(x: FieldElement) -> UniPoly:
    """Monic minimal polynomial over QQ of an element of QQ(a)."""
    field = x.field
    n = field.qq_dim()
    rows = [field.flatten(field.one)]
    power = field.one
    for k in range(1, n + 1):
        power = power * x
        vec = field.flatten(power)
        # is vec a combination of the previous rows?
        A = [[rows[j][i] for j in range(len(rows))] for i in range(n)]
        sol = linalg.solve(A, vec, QQ)
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            return UniPoly(QQ, coeffs)
        rows.append(vec)
    raise ArithmeticError("no linear dependency found, tower is corrupt")


class SubfieldEmbedding:
    """QQ(gamma) inside a height-one field QQ(a).

    gamma generates the subfield; minpoly is its monic minimal polynomial
    over QQ of degree r.  r = 1 is normalized to gamma = 0, minpoly = x.
    """

    __slots__ = ("ambient", "gamma", "minpoly", "r", "subfield",
                 "_gamma_powers", "_membership_matrix")

    def __init__(self, ambient, gamma, minpoly=None):
        self.ambient = ambient
        gamma = ambient.coerce(gamma)
        if minpoly is None:
            minpoly = min_poly_over_q(gamma)
        self.minpoly = minpoly
        self.r = minpoly.degree()
        if self.r == 1:
            self.gamma = ambient.zero
            self.minpoly = UniPoly(QQ, (Fraction(0), Fraction(1)))
            self.subfield = QQ
        else:
            self.gamma = gamma
            self.subfield = FieldTower(QQ, "g", self.minpoly)
        self._gamma_powers = None
        self._membership_matrix = None

    def gamma_powers(self):
        if self._gamma_powers is None:
            out = [self.ambient.one]
            for _ in range(1, self.r):
                out.append(out[-1] * self.gamma)
            self._gamma_powers = out
        return self._gamma_powers

    def membership(self, x):
        """QQ coordinates of x in the gamma power basis, or None."""
        x = self.ambient.coerce(x)
        if self.r == 1:
            if x.is_rational():
                return (x.rational_value(),)
            return None
        if self._membership_matrix is None:
            n = self.ambient.qq_dim()
            cols = [self.ambient.flatten(p) for p in self.gamma_powers()]
            self._membership_matrix = [
                [cols[j][i] for j in range(self.r)] for i in range(n)
            ]
        sol = linalg.solve(self._membership_matrix,
                           self.ambient.flatten(x), QQ)
        if sol is None:
            return None
        return tuple(sol)

    def lift(self, x):
        """x as an element of the abstract subfield; None when outside."""
        coords = self.membership(x)
        if coords is None:
            return None
        if self.r == 1:
            return coords[0]
        return self.subfield.element(coords)

    def push(self, c):
        """Subfield element (or rational) into the ambient field."""
        if self.r == 1:
            return self.ambient.coerce(c)
        if isinstance(c, FieldElement) and c.field is self.subfield:
            acc = self.ambient.zero
            for coeff, p in zip(c.coeffs, self.gamma_powers()):
                if coeff:
                    acc = acc + p * coeff
            return acc
        return self.ambient.coerce(c)

    def __repr__(self):
        return f"SubfieldEmbedding(r={self.r})"


def trivial_embedding(ambient):
    return SubfieldEmbedding(ambient, ambient.zero,
                             UniPoly(QQ, (Fraction(0), Fraction(1))))


def primitive_element(ambient, gens, cap=200):
    """A subfield embedding for QQ(gens).

    Deterministic search: each generator in input order, then sums
    g_i + lam * g_j with lam = 1, 2, ...; a candidate wins when every
    generator is a member of QQ(candidate).
    """
    gens = [ambient.coerce(g) for g in gens]
    if all(g.is_rational() for g in gens):
        return trivial_embedding(ambient)

    def works(cand):
        emb = SubfieldEmbedding(ambient, cand)
        for g in gens:
            if emb.membership(g) is None:
                return None
        return emb

    tried = 0
    for cand in gens:
        tried += 1
        if tried > cap:
            break
        emb = works(cand)
        if emb is not None:
            return emb
    for lam in range(1, cap):
        for i in range(len(gens)):
            for j in range(len(gens)):
                if i == j:
                    continue
                tried += 1
                if tried > cap:
                    raise ArithmeticError(
                        "primitive element search exceeded its cap")
                emb = works(gens[i] + lam * gens[j])
                if emb is not None:
                    return emb
    raise ArithmeticError("primitive element search exceeded its cap")


def relative_min_poly(emb: SubfieldEmbedding) -> UniPoly:
    """Minimal polynomial of the ambient generator over QQ(gamma).

    Solves a QQ-linear system in the combined basis gamma^j * a^k; the
    result is monic of degree n / r with subfield coefficients.
    """
    ambient = emb.ambient
    n = ambient.qq_dim()
    r = emb.r
    if n % r:
        raise ArithmeticError("subfield degree does not divide field degree")
    m = n // r
    alpha = ambient.gen()
    apow = [ambient.one]
    for _ in range(m):
        apow.append(apow[-1] * alpha)
    gpow = emb.gamma_powers()
    cols = []
    for k in range(m):
        for j in range(r):
            cols.append(ambient.flatten(gpow[j] * apow[k]))
    A = [[cols[c][i] for c in range(n)] for i in range(n)]
    b = ambient.flatten(-apow[m])
    sol = linalg.solve_unique(A, b, QQ)
    coeffs = []
    for k in range(m):
        coords = sol[k * r:(k + 1) * r]
        if r == 1:
            coeffs.append(coords[0])
        else:
            coeffs.append(emb.subfield.element(coords))
    sub = emb.subfield
    one = sub.one if r > 1 else Fraction(1)
    coeffs.append(one)
    return UniPoly(sub if r > 1 else QQ, coeffs)


class TowerContext:
    """QQ(g)(a) built on a subfield embedding, with maps both ways."""

    __slots__ = ("emb", "tower", "_matrix_inv")

    def __init__(self, emb: SubfieldEmbedding, rel_minpoly=None):
        if emb.r == 1:
            raise ValueError("tower over a trivial subfield is the field")
        self.emb = emb
        if rel_minpoly is None:
            rel_minpoly = relative_min_poly(emb)
        self.tower = FieldTower(emb.subfield, emb.ambient.name, rel_minpoly)
        self._matrix_inv = None

    def _inverse_matrix(self):
        if self._matrix_inv is None:
            ambient = self.emb.ambient
            n = ambient.qq_dim()
            m = self.tower.degree
            r = self.emb.r
            alpha = ambient.gen()
            apow = [ambient.one]
            for _ in range(m - 1):
                apow.append(apow[-1] * alpha)
            gpow = self.emb.gamma_powers()
            cols = []
            for k in range(m):
                for j in range(r):
                    cols.append(ambient.flatten(apow[k] * gpow[j]))
            aug = [[cols[c][i] for c in range(n)] +
                   [Fraction(1) if i == c2 else Fraction(0)
                    for c2 in range(n)] for i in range(n)]
            rr, piv = linalg.rref(aug, QQ)
            if piv != list(range(n)):
                raise ArithmeticError("tower basis is degenerate")
            self._matrix_inv = [row[n:] for row in rr]
        return self._matrix_inv

    def to_tower(self, x):
        """Rewrite an ambient element in the g, a tower coordinates."""
        ambient = self.emb.ambient
        vec = ambient.flatten(ambient.coerce(x))
        inv = self._inverse_matrix()
        coords = [sum((row[i] * vec[i] for i in range(len(vec))),
                      Fraction(0)) for row in inv]
        return self.tower.unflatten(coords)

    def flatten(self, y):
        """Tower element back into the ambient field QQ(a)."""
        y = self.tower.coerce(y)
        ambient = self.emb.ambient
        alpha = ambient.gen()
        acc = ambient.zero
        for k in range(self.tower.degree - 1, -1, -1):
            acc = acc * alpha + self.emb.push(y.coeffs[k])
        return acc
