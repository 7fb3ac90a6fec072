"""Exact multivariate polynomials over the rationals.

A ``Poly`` is an immutable map from exponent tuples to nonzero Fractions,
tagged with its number of variables.  Monomial orders are exposed as sort
keys in which the *larger* key is the larger monomial, so the leading term
is ``max(terms, key=order.key)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from numbers import Rational

from .linalg import det


@dataclass(frozen=True)
class MonomialOrder:
    name: str
    local: bool

    def key(self, exps):
        if self.name == "lex":
            return exps
        rev = tuple(-e for e in reversed(exps))
        deg = sum(exps)
        if self.local:
            return (-deg,) + rev
        return (deg,) + rev

    @property
    def is_global(self):
        return not self.local


DEGREVLEX = MonomialOrder("degrevlex", False)
LEX = MonomialOrder("lex", False)
NEGDEGREVLEX = MonomialOrder("negdegrevlex", True)

ORDERS = {o.name: o for o in (DEGREVLEX, LEX, NEGDEGREVLEX)}


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} does not have length {nvars}")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                c = _coerce(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already normalized: tuple keys, nonzero Fraction values
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars):
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i, nvars):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps, c=1):
        c = _coerce(c)
        return cls._raw(len(exps), {tuple(exps): c} if c else {})

    @classmethod
    def gens(cls, nvars):
        return tuple(cls.var(i, nvars) for i in range(nvars))

    # -- basic accessors -------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coeff(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def order_at_origin(self):
        """Lowest total degree of a term (the multiplicity at 0); -1 for zero."""
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    def degree_in(self, i):
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def variables(self):
        return {i for e in self._terms for i in range(self.nvars) if e[i]}

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def leading(self, order):
        """Return ``(exps, coeff)`` of the leading term under ``order``."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=order.key)
        return exps, self._terms[exps]

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        return Poly.constant(_coerce(other), self.nvars)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly._raw(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def mul_monomial(self, exps, c=1):
        c = _coerce(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self._terms.items()},
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return divexact(self, c)
        return self.scale(1 / _coerce(c))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.constant(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution ---------------------------------------

    def partial(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return Poly._raw(self.nvars, out)

    def gradient(self):
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point):
        point = [_coerce(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def substitute(self, images):
        """Replace variable i by the Poly ``images[i]`` (all over a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return self
        target = images[0].nvars
        powers = [{0: Poly.one(target)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        result = Poly.zero(target)
        for e, c in self._terms.items():
            t = Poly.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def linear_substitute(self, matrix):
        """Return p(Mx) for an invertible rational matrix M (rows = images)."""
        n = self.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"expected a {n}x{n} matrix")
        if det(matrix) == 0:
            raise ValueError("singular matrix")
        xs = Poly.gens(n)
        images = []
        for row in matrix:
            img = Poly.zero(n)
            for j, a in enumerate(row):
                if a:
                    img = img + xs[j].scale(a)
            images.append(img)
        return self.substitute(images)

    def embed(self, nvars, positions=None):
        """View this polynomial in a ring with ``nvars`` variables.

        ``positions[i]`` is the index of old variable i in the new ring
        (defaults to the first ``self.nvars`` slots).
        """
        if positions is None:
            positions = list(range(self.nvars))
        out = {}
        for e, c in self._terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return Poly._raw(nvars, out)

    def homogenize(self, degree=None):
        """Homogenize with a new last variable."""
        d = self.total_degree() if degree is None else degree
        return Poly._raw(
            self.nvars + 1, {e + (d - sum(e),): c for e, c in self._terms.items()}
        )

    def dehomogenize(self, i):
        """Set variable i to 1 and drop it."""
        out = {}
        for e, c in self._terms.items():
            ne = e[:i] + e[i + 1:]
            v = out.get(ne, 0) + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return Poly._raw(self.nvars - 1, out)

    # -- printing ----------------------------------------------------------

    def to_string(self, names=None):
        if names is None:
            names = default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(DEGREVLEX):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.nvars}, {self.to_string()!r})"


def default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# -- division, gcd, squarefreeness ------------------------------------------


def divide(f, divisors, order=DEGREVLEX):
    """Multivariate division: return (quotients, remainder) with full reduction."""
    quotients = [Poly.zero(f.nvars) for _ in divisors]
    leads = [g.leading(order) for g in divisors]
    rem = {}
    p = dict(f._terms)
    while p:
        e = max(p, key=order.key)
        c = p[e]
        for idx, (le, lc) in enumerate(leads):
            if all(a >= b for a, b in zip(e, le)):
                shift = tuple(a - b for a, b in zip(e, le))
                q = c / lc
                quotients[idx] = quotients[idx] + Poly.monomial(shift, q)
                for ge, gc in divisors[idx]._terms.items():
                    te = tuple(a + b for a, b in zip(ge, shift))
                    v = p.get(te, 0) - q * gc
                    if v:
                        p[te] = v
                    else:
                        p.pop(te, None)
                break
        else:
            rem[e] = c
            del p[e]
    return quotients, Poly._raw(f.nvars, rem)


def divexact(a, b):
    """Exact quotient a/b; raises ValueError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (q,), r = divide(a, [b], LEX)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def _monic(p):
    if p.is_zero():
        return p
    return p.scale(1 / p.leading(LEX)[1])


def _coeffs_in(p, var):
    """Coefficients of p viewed as a univariate polynomial in ``var``."""
    out = {}
    for e, c in p._terms.items():
        k = e[var]
        ne = e[:var] + (0,) + e[var + 1:]
        out.setdefault(k, {})[ne] = c
    return {k: Poly._raw(p.nvars, t) for k, t in out.items()}


def _lead_in(p, var):
    cs = _coeffs_in(p, var)
    d = max(cs)
    return d, cs[d]


def content(p, var):
    g = Poly.zero(p.nvars)
    for c in _coeffs_in(p, var).values():
        g = gcd(g, c)
        if g.is_constant() and g:
            break
    return g


def _prem(a, b, var):
    db, lb = _lead_in(b, var)
    da = a.degree_in(var)
    e = da - db + 1
    r = a
    xvar = [0] * a.nvars
    while r and r.degree_in(var) >= db:
        dr, lr = _lead_in(r, var)
        xvar[var] = dr - db
        r = r * lb - (lr * b).mul_monomial(tuple(xvar))
        e -= 1
    if e > 0:
        r = r * (lb ** e)
    return r


def _primitive(p, var):
    return divexact(p, content(p, var))


def gcd(a, b):
    """Monic (in lex) greatest common divisor via primitive remainder sequences."""
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    if a.is_zero():
        return _monic(b)
    if b.is_zero():
        return _monic(a)
    vs = a.variables() | b.variables()
    if not vs:
        return Poly.one(a.nvars)
    var = max(vs)
    if var not in a.variables():
        return gcd(a, content(b, var))
    if var not in b.variables():
        return gcd(content(a, var), b)
    ca, cb = content(a, var), content(b, var)
    c = gcd(ca, cb)
    pa, pb = divexact(a, ca), divexact(b, cb)
    if pa.degree_in(var) < pb.degree_in(var):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, var)
        if r.is_zero():
            g = pb
            break
        if var not in r.variables():
            g = Poly.one(a.nvars)
            break
        # rescaling by a rational keeps the remainder sequence from growing
        pa, pb = pb, _monic(_primitive(r, var))
    return _monic(c * _primitive(g, var))


def gcd_many(polys):
    polys = list(polys)
    g = Poly.zero(polys[0].nvars)
    for p in polys:
        g = gcd(g, p)
        if g.is_constant() and g:
            break
    return g


def repeated_part(p):
    """gcd(p, dp/dx_1, ..., dp/dx_n): the product of q^(k-1) over factors q^k of p."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return gcd_many([p] + p.gradient())


def is_squarefree(p):
    return repeated_part(p).is_constant()


def squarefree_part(p):
    return _monic(divexact(p, repeated_part(p)))


def random_matrix(rng, n, bound=100):
    """Random invertible integer matrix with entries in [-bound, bound]."""
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if det(m) != 0:
            return m


def monomials_up_to(nvars, degree):
    """All exponent tuples of total degree <= degree."""
    return [e for e in _cartesian(range(degree + 1), repeat=nvars) if sum(e) <= degree]
