"""Buchberger engine and ideal operations over exact fields.

Deterministic throughout: normal pair selection (smallest lcm first),
coprime and chain criteria, monic reduced bases sorted ascending by
leading monomial.  A hard S-pair budget turns runaway computations into
an error instead of a wrong answer.
"""

from . import kernel
from .mpoly import GREVLEX, LEX, MultiPoly, block_order
from .upoly import UniPoly

DEFAULT_PAIR_BUDGET = 100000


class PairBudgetExceededError(RuntimeError):
    """The S-pair budget ran out before the basis stabilized."""


class PositiveDimensionalError(ValueError):
    """A system expected to be zero-dimensional is not."""


def _reduce_full(terms, basis_terms, basis_lms, order, K):
    """Remainder of terms modulo a monic basis, fully tail-reduced."""
    kind, split = order.kind, order.split
    work = dict(terms)
    rem = {}
    while work:
        e = K.leading_exponent(work, kind, split)
        c = work[e]
        i = K.find_reducer(e, basis_lms)
        if i < 0:
            rem[e] = c
            del work[e]
        else:
            shift = K.exp_div(e, basis_lms[i])
            K.addmul_terms(work, -c, shift, basis_terms[i])
    return rem


def normal_form(f: MultiPoly, basis, order=GREVLEX,
                budget=DEFAULT_PAIR_BUDGET):
    """Unique remainder of f modulo the given polynomials.

    The basis is made monic internally; pass a Groebner basis if you rely
    on canonicity of the remainder.
    """
    K = kernel.impl()
    bs = [g.monic(order) for g in basis if not g.is_zero()]
    bt = [g.terms for g in bs]
    lms = [g.leading(order)[0] for g in bs]
    rem = _reduce_full(f.terms, bt, lms, order, K)
    return MultiPoly(f.field, f.arity, rem, _clean=True)


def spoly(f: MultiPoly, g: MultiPoly, order=GREVLEX):
    K = kernel.impl()
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = K.exp_lcm(ef, eg)
    out = {}
    K.addmul_terms(out, f.field.one / cf, K.exp_div(lcm, ef), f.terms)
    K.addmul_terms(out, -(g.field.one / cg), K.exp_div(lcm, eg), g.terms)
    return MultiPoly(f.field, f.arity, out, _clean=True)


def buchberger(gens, order=GREVLEX, budget=DEFAULT_PAIR_BUDGET):
    """Reduced Groebner basis, monic, sorted ascending by leading monomial.

    Raises PairBudgetExceededError when more than `budget` S-pairs would
    be examined.
    """
    K = kernel.impl()
    kind, split = order.kind, order.split
    field = None
    arity = None
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        field = g.field
        arity = g.arity
        basis.append(g.monic(order).terms)
    if field is None:
        return []
    lms = [K.leading_exponent(t, kind, split) for t in basis]

    def lcm_key(i, j):
        lcm = K.exp_lcm(lms[i], lms[j])
        return (sum(lcm), _order_key(lcm, order), i, j)

    pairs = {}
    for i in range(len(basis)):
        for j in range(i):
            pairs[(j, i)] = lcm_key(j, i)
    done = set()
    count = 0
    while pairs:
        ij = min(pairs, key=pairs.get)
        del pairs[ij]
        count += 1
        if count > budget:
            raise PairBudgetExceededError(
                f"S-pair budget of {budget} exceeded")
        i, j = ij
        done.add(ij)
        li, lj = lms[i], lms[j]
        lcm = K.exp_lcm(li, lj)
        # coprime leading monomials reduce to zero
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        if _chain_criterion(i, j, lcm, lms, done, K):
            continue
        s = {}
        ci = basis[i][li]
        cj = basis[j][lj]
        K.addmul_terms(s, field.one / ci, K.exp_div(lcm, li), basis[i])
        K.addmul_terms(s, -(field.one / cj), K.exp_div(lcm, lj), basis[j])
        rem = _reduce_full(s, basis, lms, order, K)
        if rem:
            e = K.leading_exponent(rem, kind, split)
            c = rem[e]
            if c != field.one:
                rem = K.scale_terms(rem, field.one / c)
            new = len(basis)
            basis.append(rem)
            lms.append(e)
            for k in range(new):
                pairs[(k, new)] = lcm_key(k, new)
    polys = [MultiPoly(field, arity, t, _clean=True) for t in basis]
    return _interreduce(polys, order, K)


def _order_key(e, order):
    return order.key(e)


def _chain_criterion(i, j, lcm, lms, done, K):
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if not K.exp_divides(lms[k], lcm):
            continue
        a = (min(i, k), max(i, k))
        b = (min(j, k), max(j, k))
        if a in done and b in done:
            return True
    return False


def _interreduce(polys, order, K):
    kind, split = order.kind, order.split
    # minimalize: drop polynomials whose lead is divisible by another lead
    polys = sorted(polys, key=lambda p: order.key(p.leading(order)[0]))
    keep = []
    leads = []
    for p in polys:
        lm = p.leading(order)[0]
        if any(K.exp_divides(l, lm) for l in leads):
            continue
        keep.append(p)
        leads.append(lm)
    # tail-reduce each against the others
    out = []
    for idx, p in enumerate(keep):
        others_t = [q.terms for k, q in enumerate(keep) if k != idx]
        others_l = [leads[k] for k in range(len(keep)) if k != idx]
        rem = _reduce_full(p.terms, others_t, others_l, order, K)
        if not rem:
            continue
        e = K.leading_exponent(rem, kind, split)
        c = rem[e]
        if c != p.field.one:
            rem = K.scale_terms(rem, p.field.one / c)
        out.append(MultiPoly(p.field, p.arity, rem, _clean=True))
    out.sort(key=lambda p: order.key(p.leading(order)[0]))
    return out


def is_groebner_unit(gb):
    return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()


def ideal_equal(gens1, gens2, order=GREVLEX, budget=DEFAULT_PAIR_BUDGET):
    """Two generator lists span the same ideal."""
    g1 = buchberger(gens1, order, budget)
    g2 = buchberger(gens2, order, budget)
    for f in gens1:
        if not normal_form(f, g2, order).is_zero():
            return False
    for f in gens2:
        if not normal_form(f, g1, order).is_zero():
            return False
    return True


def eliminate(gens, k, budget=DEFAULT_PAIR_BUDGET):
    """Groebner basis of the elimination ideal without the first k
    variables, under grevlex on the surviving block."""
    if k == 0:
        return buchberger(gens, GREVLEX, budget)
    gb = buchberger(gens, block_order(k), budget)
    out = []
    for g in gb:
        lm = g.leading(block_order(k))[0]
        if any(lm[:k]):
            continue
        out.append(g.drop_vars(range(k)))
    out.sort(key=lambda p: GREVLEX.key(p.leading(GREVLEX)[0]))
    return out


def saturate(gens, f, budget=DEFAULT_PAIR_BUDGET):
    """Saturation I : f^infinity via the extra-variable trick.

    Adds z with 1 - z*f and eliminates it; the output lives back in the
    original variables.
    """
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return []
    field = live[0].field
    arity = live[0].arity
    if f.is_zero():
        raise ValueError("saturation by zero")
    shifted = [g.insert_vars(0, 1) for g in live]
    fz = f.insert_vars(0, 1)
    z = MultiPoly.var(field, arity + 1, 0)
    one = MultiPoly.const(field, arity + 1, field.one)
    shifted.append(one - z * fz)
    return eliminate(shifted, 1, budget)


def dimension(gens, budget=DEFAULT_PAIR_BUDGET):
    """Krull dimension of the affine variety of the ideal.

    Computed as the largest set of variables independent modulo the
    leading term ideal; the unit ideal gives -1, the zero ideal the full
    ambient dimension.
    """
    live = [g for g in gens if not g.is_zero()]
    if not live:
        first = next(iter(gens), None)
        if first is None:
            raise ValueError("dimension of an ideal with no generators")
        return first.arity
    n = live[0].arity
    gb = buchberger(live, GREVLEX, budget)
    if not gb:
        return n
    lms = [g.leading(GREVLEX)[0] for g in gb]
    supports = [frozenset(i for i, v in enumerate(lm) if v) for lm in lms]
    if frozenset() in supports:
        return -1
    best = -1
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if len(s) <= best:
            continue
        if all(not sup <= s for sup in supports):
            best = len(s)
    return best


def linear_part(gens, budget=DEFAULT_PAIR_BUDGET):
    """RREF basis of the degree <= 1 polynomials inside the ideal.

    Exact linear algebra on normal forms of 1, t0, t1, ... against a
    grevlex basis; degree-compatible orders keep those normal forms
    inside the affine-linear span.
    """
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return []
    field = live[0].field
    n = live[0].arity
    gb = buchberger(live, GREVLEX, budget)
    if not gb:
        return []
    basis_vecs = []
    zero_e = (0,) * n
    for idx in range(n + 1):
        if idx < n:
            probe = MultiPoly.var(field, n, idx)
        else:
            probe = MultiPoly.const(field, n, field.one)
        nf = normal_form(probe, gb, GREVLEX, budget)
        if nf.total_degree() > 1:
            raise ArithmeticError("normal form left the linear span")
        vec = []
        for col in range(n + 1):
            if col < n:
                e = tuple(1 if i == col else 0 for i in range(n))
            else:
                e = zero_e
            vec.append(nf.terms.get(e, field.zero))
        basis_vecs.append(vec)
    from .linalg import nullspace, rref
    A = [[basis_vecs[r][c] for r in range(n + 1)] for c in range(n + 1)]
    combos = nullspace(A, n + 1, field)
    if not combos:
        return []
    reduced, _ = rref(combos, field)
    out = []
    for row in reduced:
        terms = {}
        for i in range(n):
            if row[i]:
                e = tuple(1 if j == i else 0 for j in range(n))
                terms[e] = row[i]
        if row[n]:
            terms[zero_e] = row[n]
        if terms:
            out.append(MultiPoly(field, n, terms, _clean=True))
    return out


def rational_solutions(eqs, nvars, budget=DEFAULT_PAIR_BUDGET):
    """All rational points of a zero-dimensional system over QQ, sorted."""
    from .upoly import rational_roots

    field = None
    for e in eqs:
        field = e.field
        break
    if field is None:
        from .fields import QQ as _QQ
        field = _QQ
    return triangular_solve(eqs, nvars, field, field, lambda c: c,
                            rational_roots, budget)


def triangular_solve(gens, nvars, field, target, coerce, root_finder,
                     budget=DEFAULT_PAIR_BUDGET):
    """Points of a zero-dimensional ideal with coordinates found by
    root_finder (roots of a UniPoly over the target field).

    Lex triangularization then back substitution; solutions are tuples of
    target elements in variable order, canonically sorted.
    """
    live = [g for g in gens if not g.is_zero()]
    if not live:
        if nvars == 0:
            return [()]
        raise PositiveDimensionalError("zero ideal has no isolated points")
    if nvars == 0:
        return []
    gb = buchberger(live, LEX, budget)
    if is_groebner_unit(gb):
        return []
    # zero-dimensionality: every variable needs a pure power leading term
    lms = [g.leading(LEX)[0] for g in gb]
    for v in range(nvars):
        if not any(lm[v] and all(x == 0 for i, x in enumerate(lm) if i != v)
                   for lm in lms):
            raise PositiveDimensionalError(
                "system is not zero-dimensional")
    levels = [[] for _ in range(nvars)]
    for g in gb:
        lowest = min(g.variables())
        levels[lowest].append(g)
    partials = [()]  # values for variables lowest+1 .. nvars-1, reversed in
    # the sense that index 0 of the tuple is variable v+1
    for v in range(nvars - 1, -1, -1):
        new_partials = []
        for part in partials:
            values = {v + 1 + i: part[i] for i in range(len(part))}
            gpoly = None
            for g in levels[v]:
                coeffs = _eval_to_unipoly(g, v, values, target, coerce)
                poly = UniPoly(target, coeffs)
                if poly.is_zero():
                    continue
                gpoly = poly if gpoly is None else gpoly.gcd(poly)
                if gpoly.degree() == 0:
                    break
            if gpoly is None:
                raise PositiveDimensionalError(
                    "free variable in a supposedly zero-dimensional system")
            if gpoly.degree() == 0:
                continue
            for root in root_finder(gpoly):
                new_partials.append((root,) + part)
        partials = new_partials
        if not partials:
            return []
    sols = partials
    sols.sort(key=_solution_key)
    return sols


def _solution_key(sol):
    from .fields import canonical_key
    return tuple(canonical_key(c) for c in sol)


def _eval_to_unipoly(g: MultiPoly, v, values, target, coerce):
    """Coefficient list of g in variable v after substituting the known
    higher variables with target-field values."""
    deg = g.degree_in(v)
    coeffs = [target.zero] * (deg + 1)
    for e, c in g.terms.items():
        val = coerce(c)
        for j, k in enumerate(e):
            if j == v or not k:
                continue
            val = val * values[j] ** k
        if val:
            coeffs[e[v]] = coeffs[e[v]] + val
    return coeffs
