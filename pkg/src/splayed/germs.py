"""Splayedness criteria for pairs of hypersurface germs at the origin.

Two reduced germs g, h without common components are splayed iff any of the
following holds in the local ring O at 0 (all are decided here):

* J'(gh) = h J'(g) + g J'(h), where J'(f) = J(f) + (f);
* every coordinate derivation lies in Der(-log g) + Der(-log h);
* the splayedness module (h J'(g) + g J'(h)) / J'(gh) vanishes.

Points other than the origin are handled by translating them to 0 first.
"""

from dataclasses import dataclass, field

from .groebner import (
    INFINITE,
    Ideal,
    Submodule,
    minimal_generators,
    quotient_module_dimension,
    syzygies,
)
from .poly import NEGDEGREVLEX, Poly, gcd, repeated_part

UNDETERMINED = "undetermined"
NOT_COMPUTED = "not-computed"


class PreconditionError(ValueError):
    """Input violates a standing hypothesis (reducedness, common components)."""


class EngineInconsistency(RuntimeError):
    """Two criteria that must agree disagreed: a bug, not a verdict."""


@dataclass(frozen=True)
class DivisorGerm:
    f: Poly
    reduced: bool

    @classmethod
    def from_poly(cls, f):
        if f.is_zero():
            raise PreconditionError("the zero polynomial does not define a divisor")
        if f.constant_term() != 0:
            raise PreconditionError("germ does not pass through the origin (f(0) != 0)")
        # repeated factors that avoid the origin are units in the local ring
        reduced = repeated_part(f).constant_term() != 0
        return cls(f, reduced)

    @property
    def nvars(self):
        return self.f.nvars


def _germ(x):
    return x if isinstance(x, DivisorGerm) else DivisorGerm.from_poly(x)


def check_pair(g, h):
    """Validate the standing hypotheses for a pair and return the two germs."""
    g, h = _germ(g), _germ(h)
    if g.nvars != h.nvars:
        raise PreconditionError("germs live in rings with different numbers of variables")
    for name, d in (("g", g), ("h", h)):
        if not d.reduced:
            raise PreconditionError(f"{name} is not reduced at the origin")
    common = gcd(g.f, h.f)
    if not common.is_constant() and common.constant_term() == 0:
        raise PreconditionError(
            f"g and h have a common component through the origin ({common})"
        )
    return g, h


# -- Jacobian ideals --------------------------------------------------------


def jacobian_ideal(f, order=NEGDEGREVLEX):
    if f.is_zero():
        raise ValueError("jacobian ideal of the zero polynomial")
    return Ideal(f.gradient(), order, f.nvars)


def extended_jacobian(f, order=NEGDEGREVLEX):
    """J'(f) = J(f) + (f)."""
    if f.is_zero():
        raise ValueError("jacobian ideal of the zero polynomial")
    return Ideal(f.gradient() + [f], order, f.nvars)


def is_euler_homogeneous(f):
    """f lies in its own Jacobian ideal locally (f = delta(f) for a derivation)."""
    return jacobian_ideal(f).contains(f)


def milnor_number(f):
    return jacobian_ideal(f).colength()


def tjurina_number(f):
    return extended_jacobian(f).colength()


def leibniz_ideals(g, h):
    """(J'(gh), h J'(g) + g J'(h)) as local ideals."""
    gh = g * h
    left = extended_jacobian(gh)
    right = extended_jacobian(g) * h + extended_jacobian(h) * g
    return left, right


def strict_ideals(g, h):
    """(J(gh), h J(g) + g J(h)) as local ideals."""
    gh = g * h
    return jacobian_ideal(gh), jacobian_ideal(g) * h + jacobian_ideal(h) * g


def leibniz_splayed_test(g, h):
    g, h = check_pair(g, h)
    left, right = leibniz_ideals(g.f, h.f)
    verdict = left.equals(right)
    # same statement written with J instead of J', modulo (gh)
    gh = g.f * h.f
    j_left, j_right = strict_ideals(g.f, h.f)
    mod_gh = Ideal([gh], NEGDEGREVLEX, gh.nvars)
    if (j_left + mod_gh).equals(j_right + mod_gh) != verdict:
        raise EngineInconsistency("J' and J-mod-(gh) forms of the Leibniz test disagree")
    return verdict


def leibniz_strict_test(g, h):
    """J(gh) = h J(g) + g J(h) exactly (not modulo gh)."""
    g, h = check_pair(g, h)
    left, right = strict_ideals(g.f, h.f)
    return left.equals(right)


# -- logarithmic derivations ------------------------------------------------


@dataclass
class DerivationModule:
    """Der(-log D) at the origin; generators are coefficient vectors of d/dx_i."""

    germ: DivisorGerm
    generators: list
    all_generators: list = field(repr=False, default_factory=list)

    @property
    def nvars(self):
        return self.germ.nvars

    def submodule(self):
        return Submodule(self.generators, self.nvars, self.nvars, NEGDEGREVLEX)

    def minimal_generator_count(self):
        return len(self.generators)

    def apply(self, delta):
        """delta(f) for a vector field given by its coefficient vector."""
        return sum((a * self.germ.f.partial(i) for i, a in enumerate(delta)),
                   Poly.zero(self.nvars))


def log_derivations(D):
    """Der(-log D) from the syzygies of (df/dx_1, ..., df/dx_n, f), pruned to a minimal set."""
    D = _germ(D)
    f = D.f
    n = f.nvars
    syz = syzygies(f.gradient() + [f], NEGDEGREVLEX)
    fields = [v[:n] for v in syz.generators if any(v[:n])]
    full = Submodule(fields, n, n, NEGDEGREVLEX)
    return DerivationModule(D, minimal_generators(full), full.generators)


def coordinate_field(i, n):
    return tuple(Poly.one(n) if j == i else Poly.zero(n) for j in range(n))


def log_derivation_sum(g, h):
    dg, dh = log_derivations(g), log_derivations(h)
    return dg.submodule() + dh.submodule()


def der_span_witness(g, h):
    """Index of the first d/dx_i outside Der(-log g) + Der(-log h), or None."""
    g, h = check_pair(g, h)
    total = log_derivation_sum(g, h)
    n = g.nvars
    for i in range(n):
        if not total.contains(coordinate_field(i, n)):
            return i
    return None


def der_span_test(g, h):
    return der_span_witness(g, h) is None


def splayedness_module_dimension(g, h):
    """dim of (h J'(g) + g J'(h)) / J'(gh); zero iff splayed."""
    g, h = check_pair(g, h)
    left, right = leibniz_ideals(g.f, h.f)
    return quotient_module_dimension(right, left)


def splayedness_module_dimension_der(g, h):
    """dim of Der / (Der(-log g) + Der(-log h)), computed on the derivation side."""
    g, h = check_pair(g, h)
    return log_derivation_sum(g, h).colength()


def strict_quotient_dimension(g, h):
    """dim of (h J(g) + g J(h)) / J(gh); surjects onto the splayedness module."""
    g, h = check_pair(g, h)
    left, right = strict_ideals(g.f, h.f)
    return quotient_module_dimension(right, left)


# -- freeness ---------------------------------------------------------------


def poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    nv = rows[0][0].nvars
    total = Poly.zero(nv)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * poly_det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


def saito_free_test(D, module=None):
    """Three-valued freeness verdict for Der(-log D) at the origin.

    True when n minimal generators have determinant unit*f; False when the
    minimal generator count exceeds n; UNDETERMINED otherwise.
    """
    D = _germ(D)
    module = module or log_derivations(D)
    n = D.nvars
    gens = module.generators
    if len(gens) > n:
        return False
    if len(gens) == n:
        d = poly_det([list(v) for v in gens])
        f_ideal = Ideal([D.f], NEGDEGREVLEX, n)
        if d and f_ideal.contains(d) and Ideal([d], NEGDEGREVLEX, n).contains(D.f):
            return True
    return UNDETERMINED


# -- the full report ----------------------------------------------------------


@dataclass
class SplayedReport:
    leibniz_verdict: bool
    der_span_verdict: bool
    spla_dimension: object
    euler_homog_g: bool
    euler_homog_h: bool
    euler_homog_gh: bool
    strict_verdict: bool
    free_g: object = NOT_COMPUTED
    free_h: object = NOT_COMPUTED
    free_gh: object = NOT_COMPUTED
    witness: object = None
    strict_dimension: object = NOT_COMPUTED
    diagnostics: list = field(default_factory=list)

    @property
    def splayed(self):
        return self.leibniz_verdict

    def as_dict(self):
        return {
            "leibniz": self.leibniz_verdict,
            "der_span": self.der_span_verdict,
            "strict_leibniz": self.strict_verdict,
            "spla_dimension": self.spla_dimension,
            "strict_quotient_dimension": self.strict_dimension,
            "euler_homogeneous_g": self.euler_homog_g,
            "euler_homogeneous_h": self.euler_homog_h,
            "euler_homogeneous_gh": self.euler_homog_gh,
            "free_g": self.free_g,
            "free_h": self.free_h,
            "free_gh": self.free_gh,
            "witness": self.witness,
        }


def analyze_pair(g, h, freeness=True, dimension=True):
    """Run every criterion on (g, h) and cross-check them."""
    g, h = check_pair(g, h)
    diagnostics = []
    gh = g.f * h.f
    leibniz = leibniz_splayed_test(g, h)
    witness = der_span_witness(g, h)
    der_span = witness is None
    strict = leibniz_strict_test(g, h)
    eg, eh, egh = (is_euler_homogeneous(p) for p in (g.f, h.f, gh))

    if leibniz != der_span:
        raise EngineInconsistency(
            f"Leibniz criterion says {leibniz} but derivation span says {der_span}"
        )
    if egh and strict != leibniz:
        raise EngineInconsistency("strict and mod-(gh) Leibniz tests differ for Euler-homogeneous gh")
    if strict and not leibniz:
        raise EngineInconsistency("strict Leibniz equality holds but the weaker one fails")

    spla = NOT_COMPUTED
    strict_dim = NOT_COMPUTED
    if dimension:
        spla = splayedness_module_dimension(g, h)
        spla_der = splayedness_module_dimension_der(g, h)
        if spla != spla_der:
            raise EngineInconsistency(
                f"splayedness module dimension {spla} (ideals) vs {spla_der} (derivations)"
            )
        if (spla == 0) != leibniz:
            raise EngineInconsistency(f"splayedness module dimension {spla} contradicts verdict")
        strict_dim = strict_quotient_dimension(g, h)
        if strict_dim < spla or (egh and strict_dim != spla):
            raise EngineInconsistency(
                f"strict quotient dimension {strict_dim} vs splayedness dimension {spla}"
            )
        if spla == INFINITE:
            diagnostics.append("splayedness module is not finite-dimensional")
    if witness is not None:
        diagnostics.append(f"d/dx{witness + 1} is not in Der(-log D1) + Der(-log D2)")
    if not egh:
        diagnostics.append("gh is not Euler-homogeneous: J(gh) != J'(gh)")

    report = SplayedReport(
        leibniz_verdict=leibniz,
        der_span_verdict=der_span,
        spla_dimension=spla,
        euler_homog_g=eg,
        euler_homog_h=eh,
        euler_homog_gh=egh,
        strict_verdict=strict,
        witness=witness,
        strict_dimension=strict_dim,
        diagnostics=diagnostics,
    )
    if freeness:
        report.free_g = saito_free_test(g)
        report.free_h = saito_free_test(h)
        report.free_gh = saito_free_test(DivisorGerm.from_poly(gh))
    return report
