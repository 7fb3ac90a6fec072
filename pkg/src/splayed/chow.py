"""Chow rings of P^N and P^a x P^b as truncated polynomial rings.

Classes are stored cohomologically: a ChowClass is a polynomial in the
hyperplane class(es) with H^(N+1) = 0 (resp. H1^(a+1) = H2^(b+1) = 0).
Homological classes (dimension-indexed, ``HomologyClass``) only appear after
capping with the fundamental class.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod


@dataclass(frozen=True)
class Ambient:
    dims: tuple

    def __post_init__(self):
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError("projective factors need positive dimension")

    @property
    def dimension(self):
        return sum(self.dims)

    def exponents(self):
        return list(product(*(range(d + 1) for d in self.dims)))

    def label(self):
        return " x ".join(f"P{d}" for d in self.dims)


def Pn(n):
    return Ambient((n,))


def PaxPb(a, b):
    return Ambient((a, b))


def parse_ambient(text):
    """'P3' -> P^3, 'P2xP1' -> P^2 x P^1."""
    parts = text.replace(" ", "").upper().split("X")
    if not 1 <= len(parts) <= 2 or any(not p.startswith("P") or not p[1:].isdigit() for p in parts):
        raise ValueError(f"cannot parse ambient {text!r}; expected e.g. P3 or P2xP1")
    return Ambient(tuple(int(p[1:]) for p in parts))


class ChowClass:
    __slots__ = ("ambient", "_c")

    def __init__(self, ambient, coeffs=None):
        self.ambient = ambient
        clean = {}
        for e, v in (coeffs or {}).items():
            e = (e,) if isinstance(e, int) else tuple(e)
            if len(e) != len(ambient.dims):
                raise ValueError("exponent does not match the ambient")
            if any(k > d for k, d in zip(e, ambient.dims)):
                continue  # truncation
            v = Fraction(v)
            if v:
                clean[e] = clean.get(e, 0) + v
                if not clean[e]:
                    del clean[e]
        self._c = clean

    @classmethod
    def from_list(cls, ambient, coeffs):
        """Coefficients of 1, H, H^2, ... on P^N."""
        if len(ambient.dims) != 1:
            raise ValueError("from_list needs a single projective space")
        return cls(ambient, {(k,): c for k, c in enumerate(coeffs)})

    @classmethod
    def one(cls, ambient):
        return cls(ambient, {(0,) * len(ambient.dims): 1})

    @classmethod
    def hyperplane(cls, ambient, factor=0):
        e = [0] * len(ambient.dims)
        e[factor] = 1
        return cls(ambient, {tuple(e): 1})

    def coeff(self, *e):
        if len(e) == 1 and isinstance(e[0], tuple):
            e = e[0]
        return self._c.get(tuple(e), Fraction(0))

    def items(self):
        return self._c.items()

    def to_list(self):
        """Coefficients of H^0..H^N (single factor) or the flattened grid (row-major)."""
        return [self.coeff(e) for e in self.ambient.exponents()]

    def constant(self):
        return self.coeff((0,) * len(self.ambient.dims))

    def integral(self):
        """Degree of the top-codimension part (coefficient of the point class)."""
        return self.coeff(self.ambient.dims)

    def max_degree(self):
        return max((sum(e) for e in self._c), default=-1)

    def _check(self, other):
        if isinstance(other, ChowClass):
            if other.ambient != self.ambient:
                raise ValueError(
                    f"ambient mismatch: {self.ambient.label()} vs {other.ambient.label()}"
                )
            return other
        return ChowClass.one(self.ambient) * Fraction(other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return ChowClass(self.ambient, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.ambient, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    @classmethod
    def _raw(cls, ambient, clean):
        # clean: truncated exponent tuples -> nonzero Fractions
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj._c = clean
        return obj

    def __mul__(self, other):
        if not isinstance(other, ChowClass):
            c = Fraction(other)
            if not c:
                return ChowClass(self.ambient)
            return ChowClass._raw(self.ambient, {e: v * c for e, v in self._c.items()})
        other = self._check(other)
        out = {}
        dims = self.ambient.dims
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(k <= d for k, d in zip(e, dims)):
                    out[e] = out.get(e, 0) + v1 * v2
        return ChowClass._raw(self.ambient, {e: v for e, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.invert() ** (-k)
        result = ChowClass.one(self.ambient)
        for _ in range(k):
            result = result * self
        return result

    def invert(self):
        c0 = self.constant()
        if c0 == 0:
            raise ZeroDivisionError("class with zero degree-0 part is not invertible")
        # solve (self * r)_e = 0 for e != 0, degree by degree
        exps = sorted(self.ambient.exponents(), key=sum)
        terms = [(e, v) for e, v in self._c.items() if any(e)]
        r = {exps[0]: 1 / c0}
        for e in exps[1:]:
            acc = Fraction(0)
            for f, v in terms:
                g = tuple(a - b for a, b in zip(e, f))
                if min(g) >= 0 and g in r:
                    acc += v * r[g]
            if acc:
                r[e] = -acc / c0
        return ChowClass._raw(self.ambient, r)

    def __truediv__(self, other):
        if isinstance(other, ChowClass):
            return self * self._check(other).invert()
        return self * (1 / Fraction(other))

    def __eq__(self, other):
        if isinstance(other, ChowClass):
            return self.ambient == other.ambient and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == ChowClass.one(self.ambient) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, frozenset(self._c.items())))

    def is_zero(self):
        return not self._c

    def __repr__(self):
        return f"ChowClass({self.ambient.label()}, {self})"

    def __str__(self):
        if not self._c:
            return "0"
        names = ["H"] if len(self.ambient.dims) == 1 else ["H1", "H2"]
        parts = []
        for e in sorted(self._c, key=lambda e: (sum(e), e)):
            v = self._c[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            parts.append(f"{v}" if not mono else (mono if v == 1 else f"{v}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


def one_plus(c, ambient, factor=0):
    """1 + c*H for a single hyperplane class."""
    return ChowClass.one(ambient) + ChowClass.hyperplane(ambient, factor) * c


class HomologyClass:
    """A class in A_*(ambient) indexed by dimension: coefficient of [P^i] (or [P^i x P^j])."""

    __slots__ = ("ambient", "_c")

    def __init__(self, ambient, coeffs=None):
        self.ambient = ambient
        self._c = {}
        for e, v in (coeffs or {}).items():
            e = (e,) if isinstance(e, int) else tuple(e)
            v = Fraction(v)
            if v:
                self._c[e] = v

    def coeff(self, *dims):
        if len(dims) == 1 and isinstance(dims[0], tuple):
            dims = dims[0]
        return self._c.get(tuple(dims), Fraction(0))

    def by_dimension(self):
        """Coefficients listed from dimension 0 upward (single factor)."""
        if len(self.ambient.dims) != 1:
            raise ValueError("by_dimension needs a single projective space")
        return [self.coeff((k,)) for k in range(self.ambient.dims[0] + 1)]

    def integral(self):
        return self.coeff((0,) * len(self.ambient.dims))

    def to_cohomology(self):
        dims = self.ambient.dims
        return ChowClass(
            self.ambient, {tuple(d - k for d, k in zip(dims, e)): v for e, v in self._c.items()}
        )

    def _check(self, other):
        if not isinstance(other, HomologyClass) or other.ambient != self.ambient:
            raise ValueError("ambient mismatch")
        return other

    def __add__(self, other):
        return cap_fundamental(self.to_cohomology() + self._check(other).to_cohomology())

    def __sub__(self, other):
        return cap_fundamental(self.to_cohomology() - self._check(other).to_cohomology())

    def __neg__(self):
        return cap_fundamental(-self.to_cohomology())

    def __mul__(self, other):
        """Intersection product (for HomologyClass) or scalar multiple."""
        if isinstance(other, HomologyClass):
            return intersect(self, other)
        return cap_fundamental(self.to_cohomology() * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HomologyClass):
            return self.ambient == other.ambient and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, frozenset(self._c.items())))

    def is_zero(self):
        return not self._c

    def __repr__(self):
        return f"HomologyClass({self.ambient.label()}, {self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, key=lambda e: tuple(-k for k in e)):
            v = self._c[e]
            label = " x ".join(f"P{k}" for k in e)
            parts.append(f"{v}[{label}]")
        return " + ".join(parts).replace("+ -", "- ")


def cap_fundamental(c):
    """c ∩ [V]: codimension-k coefficients become dimension-(dim-k) coefficients."""
    dims = c.ambient.dims
    return HomologyClass(
        c.ambient, {tuple(d - k for d, k in zip(dims, e)): v for e, v in c.items()}
    )


def cap(c, a):
    """Cap product of a cohomology class with a homology class."""
    return cap_fundamental(c * a.to_cohomology())


def intersect(a, b):
    return cap_fundamental(a.to_cohomology() * b.to_cohomology())


@lru_cache(maxsize=None)
def chern_tangent(ambient):
    """(1+H)^(N+1), or the product of such factors; classes are never mutated."""
    coeffs = {}
    for e in ambient.exponents():
        coeffs[e] = prod(comb(d + 1, k) for d, k in zip(ambient.dims, e))
    return ChowClass(ambient, coeffs)


def chern_der_log_snc(ambient, degrees):
    """c(Der(-log D)) = c(TV) / prod(1 + d_i H) for SNC D with components of degrees d_i."""
    degrees = list(degrees)
    if not degrees:
        raise ValueError("need at least one component degree")
    if len(ambient.dims) != 1:
        raise ValueError("SNC formula is implemented on P^N")
    denom = ChowClass.one(ambient)
    for d in degrees:
        if d < 1:
            raise ValueError("component degrees must be positive")
        denom = denom * one_plus(d, ambient)
    return chern_tangent(ambient) / denom


def chern_splayed_combine(c1, c2, ambient=None):
    """c(Der(-log D1 ∪ D2)) = c(Der(-log D1)) c(Der(-log D2)) / c(TV) for splayed D1, D2."""
    ambient = ambient or c1.ambient
    if c1.ambient != ambient or c2.ambient != ambient:
        raise ValueError("ambient mismatch")
    return c1 * c2 * _inverse_tangent(ambient)


@lru_cache(maxsize=None)
def _inverse_tangent(ambient):
    return chern_tangent(ambient).invert()


def binomial_class(ambient, n, d=1):
    """(1 + dH)^n, handy for tests and examples."""
    return ChowClass(ambient, {(k,): comb(n, k) * d**k for k in range(n + 1)})
