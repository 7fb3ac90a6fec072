"""Standard bases for ideals and submodules of free modules.

Global orders use Buchberger's algorithm; the local order (negative
degree reverse lexicographic) uses Mora's tangent-cone normal form, so that
membership and colength questions are answered in the localization of the
polynomial ring at the origin.  Submodules of R^r use a position-over-term
order in which component 0 is the largest.

Internally every element, ideal or module, is a dict mapping
``(component, exponents)`` to a nonzero Fraction; ideals live in component 0.

Localization soundness: all rings here have rational coefficients.  A
membership or equality statement in the algebraic local ring at 0 holds in
the analytic local ring iff it holds algebraically (faithful flatness of the
completion), which is how the germ criteria are decided from polynomial data.
"""

import heapq
import itertools
import math
import random
from fractions import Fraction

from .linalg import SparseEchelon
from .poly import DEGREVLEX, NEGDEGREVLEX, Poly, random_matrix, squarefree_part

INFINITE = math.inf


class _Engine:
    """Term-order helper with a key cache for one order."""

    def __init__(self, order):
        self.order = order
        self.local = order.local
        self._cache = {}

    def key(self, term):
        k = self._cache.get(term)
        if k is None:
            k = (-term[0],) + tuple(self.order.key(term[1]))
            self._cache[term] = k
        return k

    def lead(self, terms):
        return max(terms, key=self.key)


class _Elem:
    __slots__ = ("terms", "lead", "ecart")

    def __init__(self, terms, engine):
        self.terms = terms
        self.lead = engine.lead(terms)
        if engine.local:
            top = max(sum(e) for _, e in terms)
            self.ecart = top - sum(self.lead[1])
        else:
            self.ecart = 0


def _divides(a, b):
    """Does the module term a divide the module term b?"""
    return a[0] == b[0] and all(x <= y for x, y in zip(a[1], b[1]))


def _sub_multiple(h, g, shift, q):
    """h - q * x^shift * g, returned as a new dict."""
    out = dict(h)
    for (c, e), v in g.items():
        t = (c, tuple(a + b for a, b in zip(e, shift)))
        nv = out.get(t, 0) - q * v
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


def _monic(terms, lead):
    c = terms[lead]
    if c == 1:
        return terms
    return {t: v / c for t, v in terms.items()}


def _spoly(f, g):
    a, b = f.lead, g.lead
    lcm = tuple(max(x, y) for x, y in zip(a[1], b[1]))
    sa = tuple(x - y for x, y in zip(lcm, a[1]))
    sb = tuple(x - y for x, y in zip(lcm, b[1]))
    out = {}
    ca, cb = f.terms[a], g.terms[b]
    for (c, e), v in f.terms.items():
        t = (c, tuple(x + y for x, y in zip(e, sa)))
        out[t] = v / ca
    for (c, e), v in g.terms.items():
        t = (c, tuple(x + y for x, y in zip(e, sb)))
        nv = out.get(t, 0) - v / cb
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


def _truncate(h, cut):
    if cut is None:
        return h
    return {t: v for t, v in h.items() if sum(t[1]) < cut}


def _top_reduce(h, basis, engine, cut=None):
    """Reduce the leading term of h until it is not divisible (global orders)."""
    h = _truncate(h, cut)
    while h:
        lt = engine.lead(h)
        for g in basis:
            if _divides(g.lead, lt):
                shift = tuple(x - y for x, y in zip(lt[1], g.lead[1]))
                h = _truncate(_sub_multiple(h, g.terms, shift, h[lt] / g.terms[g.lead]), cut)
                break
        else:
            return h
    return h


def _full_reduce(h, basis, engine):
    """Completely reduce h (global orders): no term divisible by a leading term."""
    rem = {}
    h = dict(h)
    while h:
        lt = engine.lead(h)
        for g in basis:
            if _divides(g.lead, lt):
                shift = tuple(x - y for x, y in zip(lt[1], g.lead[1]))
                h = _sub_multiple(h, g.terms, shift, h[lt] / g.terms[g.lead])
                break
        else:
            rem[lt] = h.pop(lt)
    return rem


class _BudgetExceeded(Exception):
    pass


# reduction steps allowed in a membership test before switching to the
# ideal-quotient criterion; long Mora chains mean large unit cofactors
MORA_MEMBERSHIP_STEPS = 150

# coefficient size (numerator plus denominator bits) that also counts as
# exceeding a budget; runaway Mora chains show up as coefficient blowup
MORA_COEFF_BITS = 2048


def _oversized(terms):
    return any(
        v.numerator.bit_length() + v.denominator.bit_length() > MORA_COEFF_BITS
        for v in terms.values()
    )


def _mora_nf(h, basis, engine, budget=None, cut=None):
    """Mora's weak normal form: a unit u with u*h - result in the span of basis.

    ``cut`` is a degree D with m^D inside the ideal; terms of degree >= D
    are dropped along the way.
    """
    h = _truncate(h, cut)
    if not h:
        return h
    todo = list(basis)
    cur = _Elem(h, engine)
    steps = 0
    while True:
        steps += 1
        if budget is not None and steps > budget:
            raise _BudgetExceeded()
        lt = cur.lead
        best = None
        for g in todo:
            if _divides(g.lead, lt) and (best is None or g.ecart < best.ecart):
                best = g
                if g.ecart == 0:
                    break
        if best is None:
            return cur.terms
        if best.ecart > cur.ecart:
            todo.append(cur)
        shift = tuple(x - y for x, y in zip(lt[1], best.lead[1]))
        terms = _sub_multiple(cur.terms, best.terms, shift, cur.terms[lt] / best.terms[best.lead])
        terms = _truncate(terms, cut)
        if not terms:
            return terms
        # the weak normal form is only defined up to a unit; rescaling keeps
        # coefficients from growing across the reduction chain
        cur = _Elem(_monic(terms, engine.lead(terms)), engine)
        if budget is not None and _oversized(cur.terms):
            raise _BudgetExceeded()


# reduction steps allowed for one S-polynomial while the highest corner is
# still unknown; past that the corner is located globally (see _local_corner)
MORA_BASIS_STEPS = 400


def _reduce(h, basis, engine, cut=None, budget=None):
    if engine.local:
        return _mora_nf(h, basis, engine, budget=budget, cut=cut)
    return _top_reduce(h, basis, engine, cut)


def _corner_degree(leads, nvars):
    """Least D with every monomial of degree D in the monomial ideal ``leads``, or None."""
    for i in range(nvars):
        if not any(all(e[j] == 0 for j in range(nvars) if j != i) for e in leads):
            return None
    std = _standard_monomials([(0, e) for e in leads], nvars)
    return max((sum(e) for e in std), default=-1) + 1


def _compute_basis(gens, engine, rank1, cut=None, budget=None):
    """Standard basis of the module generated by ``gens`` (list of term dicts).

    ``cut`` is a degree D known to satisfy m^D ⊆ ideal (rank 1 only); the
    caller must include the monomials of degree D among ``gens``.  With
    ``budget`` set, an overlong reduction chain raises _BudgetExceeded while
    no corner is known.
    """
    basis = []
    pairs = []
    pending = set()
    counter = itertools.count()

    def push_pairs(new_index):
        g = basis[new_index]
        for i, f in enumerate(basis[:new_index]):
            if f.lead[0] != g.lead[0]:
                continue
            lcm = tuple(max(x, y) for x, y in zip(f.lead[1], g.lead[1]))
            heapq.heappush(pairs, (sum(lcm), next(counter), i, new_index, lcm))
            pending.add((i, new_index))

    # highest-corner truncation (local ideals): once the leading ideal
    # contains all monomials of degree D, so does the ideal, and higher
    # terms can be dropped
    corner = [cut]

    def add(terms):
        terms = _monic(terms, engine.lead(terms))
        basis.append(_Elem(terms, engine))
        push_pairs(len(basis) - 1)
        if rank1 and engine.local:
            d = _corner_degree([e.lead[1] for e in basis], len(basis[0].lead[1]))
            if d is not None and (corner[0] is None or d < corner[0]):
                corner[0] = d

    for g in gens:
        # generators lying entirely in m^cut (the monomials of degree cut) stay
        g = _truncate(g, cut) or g
        if g:
            add(g)

    while pairs:
        _, _, i, j, lcm = heapq.heappop(pairs)
        pending.discard((i, j))
        f, g = basis[i], basis[j]
        if rank1 and not engine.local and all(
            not (x and y) for x, y in zip(f.lead[1], g.lead[1])
        ):
            continue
        if _chain_criterion(i, j, lcm, f.lead[0], basis, pending):
            continue
        if engine.local and corner[0] is not None and sum(lcm) >= corner[0]:
            continue  # local leading terms have least degree, so the S-polynomial lies in m^corner
        h = _reduce(_spoly(f, g), basis, engine, corner[0], None if corner[0] is not None else budget)
        if h:
            add(h)
    return _minimize(basis, engine)


def _chain_criterion(i, j, lcm, comp, basis, pending):
    for k, e in enumerate(basis):
        if k == i or k == j or e.lead[0] != comp:
            continue
        if all(x <= y for x, y in zip(e.lead[1], lcm)):
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
    return False


def _minimize(basis, engine):
    keep = []
    for idx, g in enumerate(basis):
        redundant = False
        for jdx, f in enumerate(basis):
            if jdx == idx:
                continue
            if _divides(f.lead, g.lead) and (f.lead != g.lead or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    if not engine.local:
        # tail-reduce to the reduced Groebner basis
        out = []
        for g in keep:
            others = [f for f in keep if f is not g]
            tail = dict(g.terms)
            lt = g.lead
            lc = tail.pop(lt)
            red = _full_reduce(tail, others, engine) if tail else {}
            red[lt] = lc
            out.append(_Elem(_monic(red, lt), engine))
        keep = out
    keep.sort(key=lambda e: engine.key(e.lead), reverse=True)
    return keep


# -- conversions ------------------------------------------------------------


def _poly_terms(p, comp=0):
    return {(comp, e): c for e, c in p.items()}


def _vector_terms(v):
    out = {}
    for comp, p in enumerate(v):
        for e, c in p.items():
            out[(comp, e)] = c
    return out


def _terms_to_vector(terms, rank, nvars, offset=0):
    comps = [dict() for _ in range(rank)]
    for (c, e), v in terms.items():
        comps[c - offset][e] = v
    return tuple(Poly(nvars, t) for t in comps)


def _terms_to_poly(terms, nvars):
    return Poly(nvars, {e: v for (_, e), v in terms.items()})


def _count_standard(leads, nvars, rank):
    """Number of monomial module terms outside the span of ``leads``; inf if unbounded."""
    total = 0
    for comp in range(rank):
        mons = [e for c, e in leads if c == comp]
        bounds = []
        for i in range(nvars):
            pure = [e[i] for e in mons if all(e[j] == 0 for j in range(nvars) if j != i)]
            if not pure:
                return INFINITE
            bounds.append(min(pure))
        if nvars == 0:
            total += 0 if mons else 1
            continue
        total += _count_box(mons, bounds)
    return total


def _count_box(mons, bounds):
    count = 0
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(m, e)) for m in mons):
            count += 1
    return count


def _standard_monomials(leads, nvars):
    """Exponents outside the leading ideal (rank 1, finite case)."""
    mons = [e for _, e in leads]
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in mons if all(e[j] == 0 for j in range(nvars) if j != i)]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    return [
        e
        for e in itertools.product(*(range(b) for b in bounds))
        if not any(all(a <= b for a, b in zip(m, e)) for m in mons)
    ]


# -- public types -----------------------------------------------------------


def _member(terms, elems, engine, rank, nvars, cut=None):
    """Is ``terms`` in the module generated by the basis ``elems``?"""
    if not engine.local:
        return not _top_reduce(terms, elems, engine)
    try:
        return not _mora_nf(terms, elems, engine, MORA_MEMBERSHIP_STEPS, cut)
    except _BudgetExceeded:
        vectors = [_terms_to_vector(e.terms, rank, nvars) for e in elems]
        return local_member_by_quotient(_terms_to_vector(terms, rank, nvars), vectors)


def local_member_by_quotient(v, generators):
    """Local membership of v in the module spanned by ``generators``, decided globally.

    v lies in M localized at 0 iff u*v ∈ M for a polynomial u with u(0) != 0,
    i.e. iff the ideal quotient (M : v) is not inside the maximal ideal.
    (M : v) is the first coordinate of the global syzygies of (v, generators).
    """
    v = tuple(v)
    syz = syzygies([v] + [tuple(g) for g in generators], DEGREVLEX)
    return any(rel[0].constant_term() != 0 for rel in syz.generators)


def _monomials_of_degree(d, nvars):
    out = []
    for e in itertools.product(range(d + 1), repeat=nvars):
        if sum(e) == d:
            out.append({(0, e): Fraction(1)})
    return out


def _truncated_global_colength(gens, nvars, d):
    """dim Q[x]/(I + m^d) from a degrevlex basis computed modulo m^d."""
    engine = _Engine(DEGREVLEX)
    basis = _compute_basis(gens + _monomials_of_degree(d, nvars), engine, True, cut=d)
    return _count_standard([e.lead for e in basis], nvars, 1)


# the global corner search stops at this degree or at this many standard monomials
CORNER_SEARCH_DEGREE = 40
CORNER_SEARCH_SIZE = 3000


def _local_corner(gens, nvars):
    """A degree D with m^D inside the localized ideal, or None if none is found.

    The colengths c_d of I + m^d are computed globally; c_D = c_(D+1) means
    m^D ⊆ I + m^(D+1), hence m^D ⊆ I at the origin by Nakayama.
    """
    prev = _truncated_global_colength(gens, nvars, 1)
    for d in range(2, CORNER_SEARCH_DEGREE + 1):
        cur = _truncated_global_colength(gens, nvars, d)
        if cur == prev:
            return d - 1
        if cur > CORNER_SEARCH_SIZE:
            return None
        prev = cur
    return None


def _local_basis(gens, engine, nvars):
    """Rank-1 local standard basis; long reduction chains trigger a corner search."""
    try:
        return _compute_basis(gens, engine, True, budget=MORA_BASIS_STEPS)
    except _BudgetExceeded:
        pass
    d = _local_corner(gens, nvars)
    if d is None:
        return _compute_basis(gens, engine, True)
    return _compute_basis(gens + _monomials_of_degree(d, nvars), engine, True, cut=d)


class StandardBasis:
    """A standard (Groebner or Mora) basis of an ideal."""

    def __init__(self, elems, order, nvars, engine):
        self._elems = elems
        self._engine = engine
        self.order = order
        self.nvars = nvars
        self.elements = [_terms_to_poly(e.terms, nvars) for e in elems]
        self.leading_ideal = [e.lead[1] for e in elems]
        self._cut = _corner_degree(self.leading_ideal, nvars) if engine.local else None

    def normal_form(self, f):
        """Full normal form (global) or Mora weak normal form (local)."""
        if self.is_unit_ideal():
            return Poly.zero(self.nvars)
        h = _poly_terms(f)
        if self._engine.local:
            h = _mora_nf(h, self._elems, self._engine, cut=self._cut)
        else:
            h = _full_reduce(h, self._elems, self._engine)
        return _terms_to_poly(h, self.nvars)

    def reduces_to_zero(self, f):
        if self.is_unit_ideal():
            return True
        return _member(_poly_terms(f), self._elems, self._engine, 1, self.nvars, self._cut)

    def is_unit_ideal(self):
        return any(not any(m) for m in self.leading_ideal)

    def colength(self):
        return _count_standard([(0, m) for m in self.leading_ideal], self.nvars, 1)

    def standard_monomials(self):
        return _standard_monomials([(0, m) for m in self.leading_ideal], self.nvars)


class Ideal:
    """Finitely generated ideal of Q[x] (global order) or of Q[x] localized at 0."""

    def __init__(self, generators, order=NEGDEGREVLEX, nvars=None):
        gens = [g for g in generators]
        if nvars is None:
            if not gens:
                raise ValueError("an ideal needs generators or an explicit nvars")
            nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise ValueError("generators have mismatched variable counts")
        # kept as listed (zeros dropped); interreduction happens in the basis
        self.generators = [g for g in gens if g]
        self.order = order
        self.nvars = nvars
        self._basis = None

    def __repr__(self):
        return f"Ideal([{', '.join(map(str, self.generators))}], {self.order.name})"

    def standard_basis(self):
        if self._basis is None:
            engine = _Engine(self.order)
            gens = [_poly_terms(g) for g in self.generators]
            if engine.local:
                elems = _local_basis(gens, engine, self.nvars)
            else:
                elems = _compute_basis(gens, engine, True)
            self._basis = StandardBasis(elems, self.order, self.nvars, engine)
        return self._basis

    def with_order(self, order):
        return Ideal(self.generators, order, self.nvars)

    def contains(self, f):
        if f.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        if not f:
            return True
        if not self.generators:
            return False
        return self.standard_basis().reduces_to_zero(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def equals(self, other):
        if self.order != other.order or self.nvars != other.nvars:
            raise ValueError("ideals live in different rings")
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __add__(self, other):
        self._compatible(other)
        return Ideal(self.generators + other.generators, self.order, self.nvars)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Ideal([g * other for g in self.generators], self.order, self.nvars)
        self._compatible(other)
        return Ideal(
            [a * b for a in self.generators for b in other.generators], self.order, self.nvars
        )

    __rmul__ = __mul__

    def _compatible(self, other):
        if self.order != other.order or self.nvars != other.nvars:
            raise ValueError("ideals live in different rings")

    def is_unit(self):
        if not self.generators:
            return False
        return self.standard_basis().is_unit_ideal()

    def colength(self):
        if not self.generators:
            return INFINITE
        return self.standard_basis().colength()


def buchberger(ideal):
    if ideal.order.local:
        raise ValueError("buchberger needs a global order")
    return ideal.standard_basis()


def mora_standard_basis(ideal):
    if not ideal.order.local:
        raise ValueError("mora_standard_basis needs a local order")
    return ideal.standard_basis()


def ideal_membership(f, ideal):
    return ideal.contains(f)


def ideal_equal(a, b):
    return a.equals(b)


def colength(ideal):
    return ideal.colength()


class Submodule:
    """Submodule of the free module R^rank given by generating vectors."""

    def __init__(self, generators, rank, nvars, order=NEGDEGREVLEX):
        gens = []
        for v in generators:
            v = tuple(v)
            if len(v) != rank:
                raise ValueError(f"vector of length {len(v)} in a rank-{rank} module")
            if any(p.nvars != nvars for p in v):
                raise ValueError("variable count mismatch")
            if any(v) and v not in gens:
                gens.append(v)
        self.generators = gens
        self.rank = rank
        self.nvars = nvars
        self.order = order
        self._basis = None

    def _elems(self):
        if self._basis is None:
            self._engine = _Engine(self.order)
            self._basis = _compute_basis(
                [_vector_terms(v) for v in self.generators], self._engine, self.rank == 1
            )
        return self._basis

    def standard_basis(self):
        return [_terms_to_vector(e.terms, self.rank, self.nvars) for e in self._elems()]

    def leading_terms(self):
        return [e.lead for e in self._elems()]

    def contains(self, v):
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"rank mismatch: vector of length {len(v)} vs module rank {self.rank}")
        if not any(v):
            return True
        if not self.generators:
            return False
        elems = self._elems()
        return _member(_vector_terms(v), elems, self._engine, self.rank, self.nvars)

    def colength(self):
        """dim_Q of R^rank / M (INFINITE if not finite)."""
        if not self.generators:
            return INFINITE
        return _count_standard(self.leading_terms(), self.nvars, self.rank)

    def __add__(self, other):
        if self.rank != other.rank or self.nvars != other.nvars or self.order != other.order:
            raise ValueError("submodules live in different free modules")
        return Submodule(self.generators + other.generators, self.rank, self.nvars, self.order)


def module_membership(v, module):
    return module.contains(v)


def syzygies(elements, order=NEGDEGREVLEX):
    """Generators of the relations sum a_i f_i = 0.

    ``elements`` are Polys or equal-length tuples of Polys.  The relations are
    read off a Groebner basis of the graph module {(f_i, e_i)} under a
    position-over-term order that ranks the f-components first.  The result
    is returned as a submodule with ``order``; for the local order it is
    the localization of the global relation module.
    """
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    if isinstance(elements[0], Poly):
        vecs = [(p,) for p in elements]
    else:
        vecs = [tuple(v) for v in elements]
    r = len(vecs[0])
    nvars = vecs[0][0].nvars
    k = len(vecs)
    gens = []
    for i, v in enumerate(vecs):
        if len(v) != r:
            raise ValueError("elements have different ranks")
        terms = _vector_terms(v)
        terms[(r + i, (0,) * nvars)] = Fraction(1)
        gens.append(terms)
    # localization is exact, so global relations generate the local ones
    # as well; the global computation avoids long Mora chains
    engine = _Engine(DEGREVLEX)
    basis = _compute_basis(gens, engine, False)
    rel = []
    for e in basis:
        if e.lead[0] >= r:
            rel.append(_terms_to_vector(e.terms, k, nvars, offset=r))
    return Submodule(rel, k, nvars, order)


def quotient_module_dimension(big, small):
    """dim_Q of big/small for ideals small ⊆ big in the same ring.

    Presents big/small as R^k / N with k = #generators of big and N the
    preimage of small, i.e. the projection of the syzygies of
    (generators of big, generators of small) onto the first k slots.
    """
    if big.order != small.order or big.nvars != small.nvars:
        raise ValueError("ideals live in different rings")
    if not big.contains_ideal(small):
        raise ValueError("containment violated: the smaller ideal is not contained in the larger")
    a = big.generators
    b = small.generators
    k = len(a)
    if k == 0:
        return 0
    syz = syzygies(list(a) + list(b), big.order)
    projected = [v[:k] for v in syz.generators]
    n = Submodule(projected, k, big.nvars, big.order)
    return n.colength()


def evaluate_at_origin(v):
    return [p.constant_term() for p in v]


def minimal_generator_count(module):
    """Minimal number of generators over the local ring (dim of M/mM)."""
    return len(minimal_generators(module))


def minimal_generators(module):
    """A subset of the given generators that minimally generates the module locally.

    M/mM is Q^s modulo the values at 0 of the relations among the s
    generators; greedily keep generators independent modulo those values.
    """
    gens = module.generators
    s = len(gens)
    if s == 0:
        return []
    syz = syzygies(gens, module.order)
    ech = SparseEchelon()
    for rel in syz.generators:
        ech.add({i: c for i, c in enumerate(evaluate_at_origin(rel)) if c})
    chosen = []
    # prefer generators in the given order, highest index pivots last
    ech_keep = SparseEchelon(pivot_key=lambda i: -i)
    for rel in syz.generators:
        ech_keep.add({i: c for i, c in enumerate(evaluate_at_origin(rel)) if c})
    for i in range(s - 1, -1, -1):
        if ech_keep.add({i: Fraction(1)}):
            chosen.append(i)
    assert len(chosen) == s - ech.rank
    return [gens[i] for i in sorted(chosen)]


# -- zero-dimensional radicals ----------------------------------------------


def _minimal_polynomial(basis, var):
    """Minimal polynomial of x_var in Q[x]/I via normal forms of its powers."""
    nvars = basis.nvars
    x = Poly.var(var, nvars)
    ech = SparseEchelon()
    # track combinations: each row carries its coefficient vector in tag coordinates
    power = Poly.one(nvars)
    k = 0
    limit = basis.colength()
    while k <= limit:
        nf = basis.normal_form(power)
        vec = {("m", e): c for e, c in nf.items()}
        vec[("t", k)] = Fraction(1)
        rem = ech.reduce(vec)
        if not any(key[0] == "m" for key in rem):
            coeffs = {key[1]: c for key, c in rem.items()}
            terms = {}
            for j, c in coeffs.items():
                e = [0] * nvars
                e[var] = j
                terms[tuple(e)] = c
            return Poly(nvars, terms)
        ech.add(vec)
        power = power * x
        k += 1
    raise RuntimeError("no dependency found among powers")


def zero_dim_radical(ideal):
    """Radical of a zero-dimensional ideal (global order), by Seidenberg's lemma.

    In characteristic zero, I + (squarefree part of the eliminant of x_i, all i)
    is radical.
    """
    ideal = ideal.with_order(DEGREVLEX)
    basis = ideal.standard_basis()
    if basis.colength() == INFINITE:
        raise ValueError("ideal is not zero-dimensional")
    if basis.is_unit_ideal():
        return ideal
    extra = [squarefree_part(_minimal_polynomial(basis, i)) for i in range(ideal.nvars)]
    return Ideal(ideal.generators + extra, DEGREVLEX, ideal.nvars)


def _radical_colength_once(ideal, matrix):
    moved = Ideal([g.linear_substitute(matrix) for g in ideal.generators], DEGREVLEX, ideal.nvars)
    return zero_dim_radical(moved).colength()


def zero_dim_radical_colength(ideal, rng=None):
    """Number of distinct points of a zero-dimensional ideal (global).

    The radical is taken after a random rational coordinate change; the
    computation is repeated with a fresh matrix and must agree.
    """
    if ideal.order.local:
        raise ValueError("zero_dim_radical_colength needs a global order")
    ideal = ideal.with_order(DEGREVLEX)
    if ideal.colength() == INFINITE:
        raise ValueError("ideal is not zero-dimensional")
    if ideal.is_unit():
        return 0
    rng = rng or random.Random(0)
    n = ideal.nvars
    first = _radical_colength_once(ideal, random_matrix(rng, n))
    second = _radical_colength_once(ideal, random_matrix(rng, n))
    if first != second:
        raise RuntimeError(
            f"radical colength disagrees across coordinate changes ({first} vs {second})"
        )
    return first
