"""Truncated power-series linear algebra, independent of the standard-basis engine.

dim Q[x]/(I + m^D) is computed directly as the codimension of the span of
all products x^a * g (g a generator) truncated at degree D.  For an ideal of
finite colength c at the origin this equals c once D >= c.  For a quotient
I/J of finite length the difference of two truncated colengths equals
dim I/J once D is past the Artin-Rees bound.  The default degree of 10 is a
harness choice, not a proven bound, which is why callers may check stability
by comparing consecutive degrees.
"""

from .linalg import SparseEchelon
from .poly import monomials_up_to

DEFAULT_DEGREE = 10


def truncated_colength(generators, degree=DEFAULT_DEGREE):
    generators = [g for g in generators if g]
    if not generators:
        raise ValueError("need at least one nonzero generator")
    n = generators[0].nvars
    monomials = monomials_up_to(n, degree - 1)
    ech = SparseEchelon(pivot_key=lambda e: (sum(e), e))
    for g in generators:
        low = g.order_at_origin()
        if low >= degree:
            continue
        for a in monomials_up_to(n, degree - 1 - low):
            vec = {}
            for e, c in g.items():
                te = tuple(x + y for x, y in zip(e, a))
                if sum(te) < degree:
                    vec[te] = c
            if vec:
                ech.add(vec)
    return len(monomials) - ech.rank


def truncated_quotient_dimension(big, small, degree=DEFAULT_DEGREE):
    """dim (I + m^D) / (J + m^D) for ideals given by generator lists, J ⊆ I."""
    return truncated_colength(small, degree) - truncated_colength(big, degree)


def truncated_milnor(f, degree=DEFAULT_DEGREE):
    return truncated_colength(f.gradient(), degree)


def truncated_splayedness_dimension(g, h, degree=DEFAULT_DEGREE):
    gh = g * h
    small = gh.gradient() + [gh]
    big = [h * d for d in g.gradient() + [g]] + [g * d for d in h.gradient() + [h]]
    return truncated_quotient_dimension(big, small, degree)


def certified_colength(generators, start=DEFAULT_DEGREE, limit=40):
    """Truncated colength, raising the degree until it provably equals the true one.

    If the values at D and D+1 agree then m^D ⊆ I + m^(D+1), so m^D ⊆ I by
    Nakayama and the truncation is exact.  Returns (colength, D), or
    (None, limit) when no certificate appears (e.g. infinite colength).
    """
    d = start
    prev = truncated_colength(generators, d)
    while d < limit:
        nxt = truncated_colength(generators, d + 1)
        if nxt == prev:
            return prev, d
        prev = nxt
        d += 1
    return None, limit


def certified_splayedness_dimension(g, h, start=DEFAULT_DEGREE, limit=None, window=3):
    """Splayedness module dimension from truncations at increasing degree.

    The degree is raised until ``window`` consecutive degrees give the same
    difference.  When gh has an isolated singularity both colengths are
    finite and the stable value is the true one once each colength
    certifies; in the non-isolated case stability is evidence, not proof.
    Returns (dimension, degree) or (None, limit).
    """
    limit = start + 12 if limit is None else limit
    values = []
    d = start
    while d <= limit:
        values.append(truncated_splayedness_dimension(g, h, d))
        if len(values) >= window and len(set(values[-window:])) == 1:
            return values[-1], d
        d += 1
    return None, limit


def certified_milnor(f, start=DEFAULT_DEGREE, limit=40):
    return certified_colength(f.gradient(), start, limit)
