"""CSM classes in the three template situations and the identity

    c(TV) ∩ csm(V \\ (D1 ∪ D2)) = csm(V \\ D1) · csm(V \\ D2)

for joins in P^(m+n-1), products P^a x P^b, and plane curves in P^2.
Complements are assembled from closed pieces by inclusion-exclusion.
"""

import random
from dataclasses import dataclass, field

from .chow import (
    ChowClass,
    HomologyClass,
    PaxPb,
    Pn,
    cap,
    cap_fundamental,
    chern_der_log_snc,
    chern_tangent,
    intersect,
)
from .germs import EngineInconsistency, PreconditionError
from .groebner import DEGREVLEX, INFINITE, Ideal, zero_dim_radical, zero_dim_radical_colength
from .poly import Poly, gcd, is_squarefree, random_matrix


@dataclass
class TemplateVerdict:
    lhs: HomologyClass
    rhs: HomologyClass
    discrepancy: HomologyClass
    holds: bool
    details: dict = field(default_factory=dict)


def _verdict(lhs, rhs, **details):
    # sign convention: product of complements minus c(TV) ∩ csm(U)
    disc = rhs - lhs
    return TemplateVerdict(lhs, rhs, disc, disc.is_zero(), details)


def _as_class(alpha, ambient_dim):
    if isinstance(alpha, ChowClass):
        return alpha.to_list()
    if isinstance(alpha, HomologyClass):
        return alpha.to_cohomology().to_list()
    return list(alpha)


def _lift(coeffs, ambient, bound, what):
    """Write a polynomial in H (coefficients of H^0, H^1, ...) in ``ambient``."""
    coeffs = list(coeffs)
    for k, c in enumerate(coeffs):
        if c and k >= bound:
            raise ValueError(f"{what} has a term H^{k} of degree >= {bound}")
    return ChowClass(ambient, {(k,): c for k, c in enumerate(coeffs)})


# -- SNC complements ----------------------------------------------------------


def csm_snc_complement(N, degrees):
    """csm(P^N minus an SNC divisor with nonsingular components of the given degrees)."""
    return cap_fundamental(chern_der_log_snc(Pn(N), degrees))


# -- joins ---------------------------------------------------------------------


def csm_cone(alpha, m, n):
    """csm of J(X1, P^(n-1)) in P^(m+n-1), where alpha(H) ∩ [P^(m-1)] = csm(X1)."""
    V = Pn(m + n - 1)
    H = ChowClass.hyperplane(V)
    a = _lift(_as_class(alpha, m - 1), V, m, "alpha")
    return cap_fundamental((1 + H) ** n * (a + H**m))


def csm_join(alpha, beta, m, n):
    """csm of the join J(X1, X2) in P^(m+n-1)."""
    V = Pn(m + n - 1)
    H = ChowClass.hyperplane(V)
    a = _lift(_as_class(alpha, m - 1), V, m, "alpha")
    b = _lift(_as_class(beta, n - 1), V, n, "beta")
    return cap_fundamental((a + H**m) * (b + H**n))


def verify_template_join(alpha, beta, m, n):
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    V = Pn(m + n - 1)
    tv = chern_tangent(V)
    csm_v = cap_fundamental(tv)
    d1 = csm_cone(alpha, m, n)
    d2 = csm_cone(beta, n, m)
    both = csm_join(alpha, beta, m, n)
    u = csm_v - d1 - d2 + both
    u1 = csm_v - d1
    u2 = csm_v - d2
    return _verdict(cap(tv, u), intersect(u1, u2), csm_d1=d1, csm_d2=d2, csm_join=both)


# -- products ------------------------------------------------------------------


def tensor(x, y):
    """x ⊗ y in A_*(P^a x P^b) for x in A_*(P^a), y in A_*(P^b)."""
    (a,), (b,) = x.ambient.dims, y.ambient.dims
    V = PaxPb(a, b)
    xc, yc = x.to_cohomology(), y.to_cohomology()
    out = {}
    for (i,), u in xc.items():
        for (j,), v in yc.items():
            out[(i, j)] = u * v
    return cap_fundamental(ChowClass(V, out))


def verify_template_product(c1, c2):
    """Template identity for D1 = X1 x P^b, D2 = P^a x X2 given csm(X1), csm(X2)."""
    if len(c1.ambient.dims) != 1 or len(c2.ambient.dims) != 1:
        raise ValueError("product template needs classes on single projective spaces")
    (a,), (b,) = c1.ambient.dims, c2.ambient.dims
    V = PaxPb(a, b)
    va = cap_fundamental(chern_tangent(c1.ambient))
    vb = cap_fundamental(chern_tangent(c2.ambient))
    csm_v = tensor(va, vb)
    d1 = tensor(c1, vb)
    d2 = tensor(va, c2)
    both = tensor(c1, c2)
    u = csm_v - d1 - d2 + both
    u1 = csm_v - d1
    u2 = csm_v - d2
    return _verdict(cap(chern_tangent(V), u), intersect(u1, u2), csm_u1=u1, csm_u2=u2, csm_u=u)


# -- plane curves --------------------------------------------------------------


@dataclass(frozen=True)
class PlaneCurve:
    F: Poly

    def __post_init__(self):
        if self.F.nvars != 3:
            raise ValueError("plane curves are given by forms in 3 variables")
        if self.F.is_zero() or self.F.is_constant():
            raise ValueError("a plane curve needs a nonconstant form")
        if not self.F.is_homogeneous():
            raise ValueError("plane curve equation must be homogeneous")
        if not is_squarefree(self.F):
            raise PreconditionError("plane curve is not reduced")

    @property
    def degree(self):
        return self.F.total_degree()


def _binary_forms_share_root(forms):
    forms = [f for f in forms]
    if all(f.is_zero() for f in forms):
        return True
    g = forms[0]
    for f in forms[1:]:
        g = gcd(g, f)
    if g.is_zero():
        return True
    return not g.is_constant()


def _at_infinity(p):
    """Restriction of a form in (x, y, z) to the line z = 0."""
    return Poly(3, {e: c for e, c in p.items() if e[2] == 0})


def _generic_frame(forms_for_check, rng, tries=20):
    """A random matrix moving the common zeros of each check-list off z = 0."""
    for _ in range(tries):
        m = random_matrix(rng, 3)
        ok = True
        for forms in forms_for_check:
            moved = [f.linear_substitute(m) for f in forms]
            if _binary_forms_share_root([_at_infinity(f) for f in moved]):
                ok = False
                break
        if ok:
            return m
    raise RuntimeError("could not find a generic coordinate frame")


def _affine(p):
    return p.dehomogenize(2)


def _ideal_power(ideal, k):
    gens = [Poly.one(ideal.nvars)]
    for _ in range(k):
        gens = list({a * b for a in gens for b in ideal.generators})
    return Ideal(gens, DEGREVLEX, ideal.nvars)


def total_milnor_number(C, rng=None):
    """Sum of Milnor numbers over the singular points of a reduced plane curve."""
    rng = rng or random.Random(0)
    F = C.F
    m = _generic_frame([F.gradient()], rng)
    G = F.linear_substitute(m)
    f = _affine(G)
    sing = Ideal([f] + f.gradient(), DEGREVLEX, 2)
    if sing.is_unit():
        return 0
    if sing.colength() == INFINITE:
        raise PreconditionError("plane curve has non-isolated singularities")
    rad = zero_dim_radical(sing)
    jac = Ideal(f.gradient(), DEGREVLEX, 2)
    prev = None
    k = 1
    while True:
        cur = (jac + _ideal_power(rad, k)).colength()
        if cur == prev:
            return cur
        prev = cur
        k += 1


def euler_char_plane_curve(C, rng=None):
    """chi(C) = 3d - d^2 + sum of Milnor numbers."""
    d = C.degree
    return 3 * d - d * d + total_milnor_number(C, rng)


def transversal_test(C1, C2):
    """1 ∈ (f, g, det Jacobian(f, g)) on each standard affine chart."""
    for chart in range(3):
        f = C1.F.dehomogenize(chart)
        g = C2.F.dehomogenize(chart)
        jac = f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0)
        if not Ideal([f, g, jac], DEGREVLEX, 2).is_unit():
            return False
    return True


def intersection_counts(C1, C2, rng=None):
    """(sum of intersection multiplicities, number of distinct points) of C1 ∩ C2."""
    rng = rng or random.Random(0)
    m = _generic_frame([[C1.F, C2.F]], rng)
    f = _affine(C1.F.linear_substitute(m))
    g = _affine(C2.F.linear_substitute(m))
    ideal = Ideal([f, g], DEGREVLEX, 2)
    total = ideal.colength()
    if total == INFINITE:
        raise PreconditionError("curves share a common component")
    return total, zero_dim_radical_colength(ideal, rng)


def complement_class_curve(d, chi):
    """csm(P^2 minus a curve of degree d and Euler characteristic chi)."""
    S = Pn(2)
    H = ChowClass.hyperplane(S)
    return cap_fundamental(chern_tangent(S) - H * d - H * H * chi)


def verify_template_curves(C1, C2, seed=0):
    rng = random.Random(seed)
    common = gcd(C1.F, C2.F)
    if not common.is_constant():
        raise PreconditionError(f"curves have a common component ({common})")
    S = Pn(2)
    H = ChowClass.hyperplane(S)
    tv = chern_tangent(S)
    d1, d2 = C1.degree, C2.degree
    chi1 = euler_char_plane_curve(C1, rng)
    chi2 = euler_char_plane_curve(C2, rng)
    total, distinct = intersection_counts(C1, C2, rng)
    u1 = complement_class_curve(d1, chi1)
    u2 = complement_class_curve(d2, chi2)
    u = cap_fundamental(tv - H * (d1 + d2) - H * H * (chi1 + chi2 - distinct))
    verdict = _verdict(cap(tv, u), intersect(u1, u2))
    splayed = transversal_test(C1, C2)
    verdict.details.update(
        splayed=splayed,
        degrees=(d1, d2),
        euler_characteristics=(chi1, chi2),
        intersection_multiplicity=total,
        distinct_points=distinct,
        excess=d1 * d2 - distinct,
    )
    if total != d1 * d2:
        raise EngineInconsistency(f"Bezout fails: multiplicities sum to {total}, not {d1 * d2}")
    if splayed != (distinct == d1 * d2):
        raise EngineInconsistency("transversality test disagrees with the reduced-intersection count")
    expected = cap_fundamental(H * H * (d1 * d2 - distinct))
    if verdict.discrepancy != expected:
        raise EngineInconsistency("curve discrepancy is not (d1*d2 - #points)[pt]")
    if verdict.holds != splayed:
        raise EngineInconsistency("template identity and splayedness disagree for curves")
    return verdict
