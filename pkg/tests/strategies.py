"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from splayed.poly import Poly

small_rationals = st.builds(
    Fraction, st.integers(-5, 5), st.integers(1, 3)
)


def polys(nvars=2, max_deg=3, max_terms=4, rationals=small_rationals):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, rationals, max_size=max_terms).map(lambda t: Poly(nvars, t))


def invertible_matrices(n, bound=3):
    from splayed.linalg import det

    entries = st.lists(
        st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n
    )
    return entries.filter(lambda m: det(m) != 0)


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
