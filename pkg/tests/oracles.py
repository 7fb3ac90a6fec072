"""Independent oracles shared by the test suite and the acceptance gate."""

from itertools import combinations
from math import comb, prod

# Euler characteristics from plain integer power series, independent of the Chow module.


def _series_coeff(num_exp, degrees, k):
    """[h^k] of (1+h)^num_exp / prod(1 + d h)."""
    series = [comb(num_exp, i) for i in range(k + 1)]
    for d in degrees:
        out = []
        for i in range(k + 1):
            out.append(series[i] - (d * out[i - 1] if i else 0))
        series = out
    return series[k]


def chi_complete_intersection(N, degrees):
    k = len(degrees)
    if k > N:
        return 0
    return prod(degrees) * _series_coeff(N + 1, degrees, N - k)


def chi_snc_complement(N, degrees):
    """Inclusion-exclusion over intersections of general hypersurfaces."""
    total = 0
    for k in range(len(degrees) + 1):
        for sub in combinations(degrees, k):
            total += (-1) ** k * chi_complete_intersection(N, list(sub))
    return total


# hand-derived (splayed, number of distinct intersection points) for the curve catalog
CURVE_EXPECTED = {
    "two-lines": (True, 1),
    "lines-general": (True, 1),
    "conic-secant": (True, 2),
    "conic-secant-through-vertex": (True, 2),
    "conic-tangent": (False, 1),
    "conic-tangent-at-infinity": (False, 1),
    "two-conics-transversal": (True, 4),
    "two-conics-bitangent": (False, 2),
    "nodal-cubic-line-through-node": (False, 2),
    "nodal-cubic-line-off-node": (True, 3),
    "cuspidal-cubic-cusp-tangent": (False, 1),
    "cuspidal-cubic-line-off-cusp": (True, 3),
    "smooth-cubic-flex-tangent": (False, 1),
    "fermat-cubic-transversal": (True, 3),
}
