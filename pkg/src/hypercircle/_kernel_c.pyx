# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term arithmetic kernels.

Same contract as _kernel_py: dicts of exponent tuples to nonzero
coefficients, coefficient objects only need +, *, unary - and
truthiness.  The hot paths unbox exponents into C integers; coefficient
arithmetic stays in Python object land.
"""

ORDER_LEX = 0
ORDER_GREVLEX = 1
ORDER_BLOCK = 2


cdef int _cmp_grevlex_range(tuple e1, tuple e2,
                            Py_ssize_t lo, Py_ssize_t hi) except? -2:
    cdef Py_ssize_t i
    cdef long d1 = 0
    cdef long d2 = 0
    cdef long a, b
    for i in range(lo, hi):
        d1 += <long> e1[i]
        d2 += <long> e2[i]
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for i in range(hi - 1, lo - 1, -1):
        a = <long> e1[i]
        b = <long> e2[i]
        if a != b:
            # equal total degree: greater iff the last difference is negative
            return 1 if a < b else -1
    return 0


def cmp_exp(tuple e1, tuple e2, int kind, int split):
    """Three-way monomial comparison under the given order."""
    cdef int c
    if kind == ORDER_LEX:
        if e1 == e2:
            return 0
        return 1 if e1 > e2 else -1
    if kind == ORDER_GREVLEX:
        return _cmp_grevlex_range(e1, e2, 0, len(e1))
    c = _cmp_grevlex_range(e1, e2, 0, split)
    if c:
        return c
    return _cmp_grevlex_range(e1, e2, split, len(e1))


def leading_exponent(dict terms, int kind, int split):
    """Largest exponent in the dict, or None when empty."""
    cdef tuple best = None
    cdef tuple e
    for e in terms:
        if best is None or cmp_exp(e, best, kind, split) > 0:
            best = e
    return best


def find_reducer(tuple e, list lms):
    """Index of the first leading monomial dividing e, or -1."""
    cdef Py_ssize_t i, j, n
    cdef tuple lm
    cdef bint ok
    n = len(e)
    for i in range(len(lms)):
        lm = <tuple> lms[i]
        ok = True
        for j in range(n):
            if <long> lm[j] > <long> e[j]:
                ok = False
                break
        if ok:
            return i
    return -1


def exp_mul(tuple e1, tuple e2):
    cdef Py_ssize_t i, n = len(e1)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = e1[i] + e2[i]
    return tuple(out)


def exp_div(tuple e1, tuple e2):
    """e1 / e2 as an exponent tuple, or None when not divisible."""
    cdef Py_ssize_t i, n = len(e1)
    cdef list out = [None] * n
    for i in range(n):
        if <long> e1[i] < <long> e2[i]:
            return None
        out[i] = e1[i] - e2[i]
    return tuple(out)


def exp_lcm(tuple e1, tuple e2):
    cdef Py_ssize_t i, n = len(e1)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = e1[i] if <long> e1[i] > <long> e2[i] else e2[i]
    return tuple(out)


def exp_divides(tuple e1, tuple e2):
    cdef Py_ssize_t i, n = len(e1)
    for i in range(n):
        if <long> e1[i] > <long> e2[i]:
            return False
    return True


def addmul_terms(dict acc, c, tuple shift, dict src):
    """In place acc += c * X^shift * src, dropping cancelled terms."""
    cdef tuple e, k
    cdef Py_ssize_t i, n = len(shift)
    cdef list buf
    for e, v in src.items():
        buf = [None] * n
        for i in range(n):
            buf[i] = e[i] + shift[i]
        k = tuple(buf)
        w = acc.get(k)
        if w is None:
            nv = c * v
            if nv:
                acc[k] = nv
        else:
            nv = w + c * v
            if nv:
                acc[k] = nv
            else:
                del acc[k]


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple e
    for e, v in b.items():
        w = out.get(e)
        if w is None:
            out[e] = v
        else:
            nv = w + v
            if nv:
                out[e] = nv
            else:
                del out[e]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef tuple e
    for e, v in b.items():
        w = out.get(e)
        if w is None:
            out[e] = -v
        else:
            nv = w - v
            if nv:
                out[e] = nv
            else:
                del out[e]
    return out


def mul_terms(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple e
    for e, c in a.items():
        addmul_terms(out, c, e, b)
    return out


def scale_terms(dict a, c):
    """c * a for nonzero c; zero products from zero divisors are dropped."""
    cdef dict out = {}
    cdef tuple e
    for e, v in a.items():
        nv = c * v
        if nv:
            out[e] = nv
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef tuple e
    for e, v in a.items():
        out[e] = -v
    return out
